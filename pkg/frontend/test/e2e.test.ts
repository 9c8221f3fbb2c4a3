/**
 * Scripted end-to-end run against a live solve service: build the
 * commitment tree from scratch through the five stages, validate every
 * edit burst by round-tripping through the server's convert endpoint,
 * solve, and read the report; then the dissolve walk-through and the
 * orientation toggle; finally a what-if matrix perturbation.
 */

import { spawn, ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, SolveController } from "../src/api.js";
import { computeLayout, DEFAULT_SETTINGS } from "../src/layout.js";
import { MatrixEditor } from "../src/matrix.js";
import { EditorSession } from "../src/stages.js";
import { resultsPanel } from "../src/view.js";
import { treeToXml } from "../src/xml.js";
import {
  buildCommitmentTreeViaStages,
  buildSimultaneousTreeViaStages,
  COMMITMENT_REPORT_TOKENS,
} from "./helpers.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;
let server: ChildProcess;
const api = new ApiClient(BASE);

async function waitForService(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const health = await api.health();
      if (health.status === "ok") return;
    } catch {
      /* not up yet */
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("solve service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "nasheq.service", "--port", String(PORT)], {
    cwd: "..",
    stdio: "ignore",
  });
  await waitForService();
}, 30_000);

afterAll(() => {
  server?.kill();
});

async function expectServerAcceptsTree(session: EditorSession): Promise<void> {
  const xml = treeToXml(session.tree);
  const roundTrip = await api.convert(xml, "xml");
  expect(roundTrip.ok).toBe(true);
  expect(roundTrip.text).toBe(xml); // server and client agree byte for byte
}

describe("end-to-end against the running service", () => {
  it("stage flow builds the commitment tree, solves, and shows the report", async () => {
    const session = buildCommitmentTreeViaStages();
    expect(session.stage).toBe("payoffs");
    await expectServerAcceptsTree(session);

    const solver = new SolveController(api);
    const outcome = await solver.run(treeToXml(session.tree), "enum");
    const panel = resultsPanel(outcome);
    expect(panel.error).toBeNull();
    expect(panel.reportText.split(/\s+/).filter(Boolean)).toEqual(
      COMMITMENT_REPORT_TOKENS,
    );
    expect(panel.tableRows).toHaveLength(4);
    expect(panel.componentLines).toEqual([
      "Component 1: {1}  x  {1, 2}",
      "Component 2: {2}  x  {3, 4}",
    ]);
    // the game state is untouched and ready for the next what-if edit
    expect(session.blockers("payoffs")).toEqual([]);
  }, 30_000);

  it("dissolving the simultaneous information set yields the commitment tree", async () => {
    const session2 = buildSimultaneousTreeViaStages();
    await expectServerAcceptsTree(session2);
    const merged = session2.tree.playerIsets(2)[0];
    session2.apply({ kind: "goto-stage", stage: "infosets" });
    session2.apply({ kind: "set-mode", mode: "dissolve" });
    session2.apply({ kind: "click-node", node: merged.members[0] });
    session2.apply({ kind: "goto-stage", stage: "moves" });
    session2.apply({ kind: "set-move-names", player: 2, labels: ["l", "r", "a", "b"] });
    await expectServerAcceptsTree(session2);
    expect(session2.tree.signature()).toBe(buildCommitmentTreeViaStages().tree.signature());
    const strategic = await api.convert(treeToXml(session2.tree), "strategic");
    expect(strategic.ok).toBe(true);
    expect(strategic.text.split(/\s+/).filter(Boolean).slice(0, 12)).toEqual([
      "Strategic", "form:", "2", "x", "4", "Payoff", "player", "1",
      "la", "lb", "ra", "rb",
    ]);
  }, 30_000);

  it("orientation toggle re-lays out without structural change", async () => {
    const session = buildCommitmentTreeViaStages();
    const before = treeToXml(session.tree);
    const topDown = computeLayout(session.tree, DEFAULT_SETTINGS);
    session.apply({ kind: "set-setting", key: "orientation", value: "left-right" });
    const rotated = computeLayout(session.tree, {
      ...DEFAULT_SETTINGS,
      orientation: "left-right",
    });
    expect(rotated.layers).toEqual(topDown.layers);
    const sample = session.tree.root;
    expect(rotated.positions.get(sample)).not.toEqual(topDown.positions.get(sample));
    // structure untouched: only the settings block differs
    const after = treeToXml(session.tree);
    expect(after.replace(/[ ]*<settings>[\s\S]*?<\/settings>\n/, "")).toBe(before);
    const roundTrip = await api.convert(after, "xml");
    expect(roundTrip.text).toBe(after); // settings survive the server round trip
  }, 30_000);

  it("perturbing the anti-coordination payoffs collapses the ring", async () => {
    const editor = MatrixEditor.fromValues(
      [
        ["-1", "0", "0"],
        ["0", "-1", "0"],
        ["0", "0", "-1"],
      ],
      undefined,
      "symmetric",
    );
    const first = await api.solve(editor.toText(), "enum");
    expect(first.kind).toBe("ok");
    if (first.kind !== "ok") return;
    expect(first.structured!.equilibria).toHaveLength(7);
    expect(first.structured!.components).toHaveLength(2);
    // what-if edit: independent small positive perturbations arranged so no
    // off-diagonal cell is a mutual best response (uniform ones would cancel)
    const perturbed = MatrixEditor.fromValues(
      [
        ["-1", "0.1", "0.2"],
        ["0.2", "-1", "0.1"],
        ["0.1", "0.2", "-1"],
      ],
      [
        ["-1", "0.2", "0.1"],
        ["0.1", "-1", "0.2"],
        ["0.2", "0.1", "-1"],
      ],
    );
    const second = await api.solve(perturbed.toText(), "enum");
    expect(second.kind).toBe("ok");
    if (second.kind !== "ok") return;
    expect(second.structured!.equilibria).toHaveLength(1);
    expect(second.structured!.components).toHaveLength(1);
    const only = second.structured!.equilibria[0];
    expect(only.p1.probs).toEqual(["1/3", "1/3", "1/3"]);
  }, 30_000);

  it("solver errors and timeouts surface as retryable outcomes", async () => {
    const bad = await api.solve("not a game", "enum");
    expect(bad.kind).toBe("error");
    const big = Array.from({ length: 9 }, (_, i) =>
      Array.from({ length: 9 }, (_, j) => String(((i * 7 + j * 13) % 23) - 11)).join(" "),
    ).join("\n");
    const slow = await api.solve(`${big}\n\n${big}\n`, "enum", { timeout: 0.02 });
    expect(slow.kind).toBe("timeout");
    const panel = resultsPanel(slow);
    expect(panel.timedOut).toBe(true);
    expect(panel.error).toContain("timed out");
  }, 30_000);
});
