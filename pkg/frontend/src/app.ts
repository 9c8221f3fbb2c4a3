/**
 * Browser bootstrap: a headline bar for the five stages, mode buttons, the
 * SVG canvas, and the solve/results panel.  All the game logic lives in the
 * other modules; this file only moves strings in and out of the DOM.
 *
 * The game state is authoritative in this tab; saving and loading go
 * through explicit download/upload of the XML file, and the server is only
 * consulted to solve or convert.
 */

import { ApiClient, SolveController } from "./api.js";
import { settingsFromTree } from "./layout.js";
import { EditorSession, Mode, STAGES } from "./stages.js";
import { GameTree } from "./tree.js";
import { renderTreeSvg, resultsPanel } from "./view.js";
import { treeFromXml, treeToXml } from "./xml.js";

const MODE_LABELS: Record<Mode, string> = {
  "add-child": "⊕ add",
  delete: "⊖ delete",
  "assign-1": "player 1",
  "assign-2": "player 2",
  "assign-chance": "chance",
  merge: "merge",
  dissolve: "dissolve",
  cut: "✂ cut",
  rename: "rename",
  "edit-payoff": "payoffs",
};

export function mountApp(root: HTMLElement, serviceUrl = ""): void {
  const session = new EditorSession(GameTree.startingTree());
  const api = new ApiClient(serviceUrl);
  const solver = new SolveController(api);

  root.innerHTML = `
    <div id="headline"></div>
    <div id="toolbar">
      <button id="undo">undo</button>
      <button id="orientation">rotate layout</button>
      <button id="save">save</button>
      <input id="load" type="file" accept=".xml"/>
      <select id="algorithm">
        <option value="enum">all equilibria</option>
        <option value="lh">Lemke-Howson</option>
        <option value="lemke">tracing (prior)</option>
      </select>
      <button id="solve">solve</button>
      <button id="cancel" hidden>cancel</button>
    </div>
    <div id="error"></div>
    <div id="canvas"></div>
    <pre id="results"></pre>
  `;

  const canvas = root.querySelector("#canvas") as HTMLElement;
  const headline = root.querySelector("#headline") as HTMLElement;
  const errorBox = root.querySelector("#error") as HTMLElement;
  const results = root.querySelector("#results") as HTMLElement;

  function redraw(): void {
    headline.innerHTML =
      STAGES.map(
        (stage) =>
          `<button data-stage="${stage}" ${stage === session.stage ? 'class="active"' : ""}>${stage}</button>`,
      ).join(" ") +
      "<span> | </span>" +
      session
        .availableModes()
        .map(
          (mode) =>
            `<button data-mode="${mode}" ${mode === session.mode ? 'class="active"' : ""}>${MODE_LABELS[mode]}</button>`,
        )
        .join(" ");
    canvas.innerHTML = renderTreeSvg(session.tree, settingsFromTree(session.tree));
    errorBox.textContent = session.lastError ?? "";
  }

  headline.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const stage = target.getAttribute("data-stage");
    const mode = target.getAttribute("data-mode");
    if (stage) session.apply({ kind: "goto-stage", stage: stage as (typeof STAGES)[number] });
    if (mode) session.apply({ kind: "set-mode", mode: mode as Mode });
    redraw();
  });

  canvas.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const nodeAttr = target.getAttribute("data-node");
    if (nodeAttr === null) return;
    session.apply({ kind: "click-node", node: Number(nodeAttr) });
    redraw();
  });

  (root.querySelector("#undo") as HTMLElement).addEventListener("click", () => {
    session.apply({ kind: "undo" });
    redraw();
  });

  (root.querySelector("#orientation") as HTMLElement).addEventListener("click", () => {
    const order = ["top-down", "left-right", "bottom-up", "right-left"];
    const current = session.tree.settings.get("orientation") ?? "top-down";
    const next = order[(order.indexOf(current) + 1) % order.length];
    session.apply({ kind: "set-setting", key: "orientation", value: next });
    redraw();
  });

  (root.querySelector("#save") as HTMLElement).addEventListener("click", () => {
    const blob = new Blob([treeToXml(session.tree)], { type: "application/xml" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "game.xml";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  (root.querySelector("#load") as HTMLInputElement).addEventListener("change", async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    try {
      session.tree = treeFromXml(await file.text());
      session.lastError = null;
    } catch (err) {
      session.lastError = String(err);
    }
    redraw();
  });

  const solveButton = root.querySelector("#solve") as HTMLButtonElement;
  const cancelButton = root.querySelector("#cancel") as HTMLButtonElement;
  solveButton.addEventListener("click", async () => {
    const blockers = session.blockers("payoffs");
    if (blockers.length) {
      errorBox.textContent = blockers[0];
      return;
    }
    const algorithm = (root.querySelector("#algorithm") as HTMLSelectElement).value as
      | "enum"
      | "lh"
      | "lemke";
    solveButton.disabled = true;
    cancelButton.hidden = false;
    const outcome = await solver.run(treeToXml(session.tree), algorithm);
    solveButton.disabled = false;
    cancelButton.hidden = true;
    const panel = resultsPanel(outcome);
    results.textContent = panel.error ?? panel.reportText;
  });
  cancelButton.addEventListener("click", () => solver.cancel());

  redraw();
}
