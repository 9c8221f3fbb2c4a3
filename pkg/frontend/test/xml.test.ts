import { describe, expect, it } from "vitest";

import { treeFromXml, treeToXml } from "../src/xml.js";
import { buildCommitmentTreeViaStages, buildSimultaneousTreeViaStages } from "./helpers.js";

describe("XML format", () => {
  it("emits the outcome fragment shape for leaves", () => {
    const tree = buildCommitmentTreeViaStages().tree;
    const xml = treeToXml(tree);
    expect(xml).toContain('<node move="T" player="2"');
    expect(xml).toContain('<outcome move="l">');
    expect(xml).toContain('<payoff player="1">5</payoff>');
    expect(xml).toContain('<payoff player="2">2</payoff>');
    expect(xml.endsWith("</game>\n")).toBe(true);
  });

  it("round-trips structure and settings", () => {
    for (const session of [buildCommitmentTreeViaStages(), buildSimultaneousTreeViaStages()]) {
      session.tree.settings.set("orientation", "left-right");
      const text = treeToXml(session.tree);
      const again = treeFromXml(text);
      expect(again.signature()).toBe(session.tree.signature());
      expect(treeToXml(again)).toBe(text);
    }
  });

  it("keeps multi-member information sets grouped", () => {
    const tree = buildSimultaneousTreeViaStages().tree;
    const again = treeFromXml(treeToXml(tree));
    const groups = again.playerIsets(2);
    expect(groups).toHaveLength(1);
    expect(groups[0].members).toHaveLength(2);
    expect(groups[0].moves).toEqual(["l", "r"]);
  });

  it("rejects malformed documents", () => {
    expect(() => treeFromXml("<game><tree>")).toThrow();
    expect(() => treeFromXml("<notgame/>")).toThrow();
    expect(() =>
      treeFromXml("<game><players></players><tree><node><outcome move='x'/></node></tree></game>"),
    ).toThrow();
  });

  it("escapes attribute and text content", () => {
    const session = buildCommitmentTreeViaStages();
    session.tree.renamePlayer(1, 'A&B "quoted" <tag>');
    const text = treeToXml(session.tree);
    const again = treeFromXml(text);
    expect(again.players[0]).toBe('A&B "quoted" <tag>');
  });
});
