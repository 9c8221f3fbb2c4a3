/**
 * Pure rendering: tree layout to an SVG string, and the results panel
 * content.  No DOM access here, so everything is testable headlessly; the
 * browser bootstrap just assigns innerHTML and wires events.
 */

import { computeLayout, LayoutSettings, settingsFromTree, TreeLayout } from "./layout.js";
import { StructuredEquilibria } from "./api.js";
import { CHANCE, GameTree } from "./tree.js";

const NODE_RADIUS = 9;
const PLAYER_COLORS = ["#c0392b", "#2c5aa0", "#7d3c98"];

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;");
}

export function renderTreeSvg(
  tree: GameTree,
  layoutOrSettings?: TreeLayout | LayoutSettings,
): string {
  const layout =
    layoutOrSettings && "positions" in layoutOrSettings
      ? layoutOrSettings
      : computeLayout(tree, (layoutOrSettings as LayoutSettings) ?? settingsFromTree(tree));
  const points = [...layout.positions.values()];
  const pad = 50;
  const minX = Math.min(...points.map((p) => p.x)) - pad;
  const minY = Math.min(...points.map((p) => p.y)) - pad;
  const maxX = Math.max(...points.map((p) => p.x)) + pad;
  const maxY = Math.max(...points.map((p) => p.y)) + pad;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="${minX} ${minY} ${maxX - minX} ${maxY - minY}">`,
  );
  // information-set ovals first, under everything else
  for (const oval of layout.ovals) {
    const coords = oval.members.map((m) => layout.positions.get(m)!);
    const cx = coords.reduce((a, p) => a + p.x, 0) / coords.length;
    const cy = coords.reduce((a, p) => a + p.y, 0) / coords.length;
    const rx = Math.max(...coords.map((p) => Math.abs(p.x - cx))) + NODE_RADIUS * 2;
    const ry = Math.max(...coords.map((p) => Math.abs(p.y - cy))) + NODE_RADIUS * 2;
    parts.push(
      `<ellipse data-iset="${oval.iset}" cx="${cx}" cy="${cy}" rx="${rx}" ry="${ry}" ` +
        `fill="none" stroke="#888" stroke-dasharray="6 3"/>`,
    );
  }
  // edges with move labels or chance probabilities
  for (const node of tree.bfsNodes()) {
    const from = layout.positions.get(node.id)!;
    node.children.forEach((child, k) => {
      const to = layout.positions.get(child)!;
      parts.push(
        `<line x1="${from.x}" y1="${from.y}" x2="${to.x}" y2="${to.y}" stroke="#444"/>`,
      );
      const label =
        node.owner === CHANCE
          ? node.probs![k].toString()
          : node.iset !== null
            ? tree.iset(node.iset).moves[k]
            : "";
      if (label) {
        const lx = (from.x + 2 * to.x) / 3;
        const ly = (from.y + 2 * to.y) / 3;
        parts.push(
          `<text x="${lx}" y="${ly}" font-size="12" text-anchor="middle">${escapeHtml(label)}</text>`,
        );
      }
    });
  }
  // nodes: circles for players, squares for chance, payoff text at leaves
  for (const node of tree.bfsNodes()) {
    const at = layout.positions.get(node.id)!;
    if (node.children.length === 0) {
      const payoffs = node.payoffs!.map((p) => p.toString()).join(" ");
      parts.push(
        `<circle data-node="${node.id}" cx="${at.x}" cy="${at.y}" r="4" fill="#444"/>` +
          `<text x="${at.x}" y="${at.y + 18}" font-size="11" text-anchor="middle">${escapeHtml(payoffs)}</text>`,
      );
    } else if (node.owner === CHANCE) {
      const s = NODE_RADIUS;
      parts.push(
        `<rect data-node="${node.id}" x="${at.x - s}" y="${at.y - s}" width="${2 * s}" height="${2 * s}" fill="#222"/>`,
      );
    } else {
      const color = node.owner === null ? "#000" : PLAYER_COLORS[(node.owner - 1) % 3];
      parts.push(
        `<circle data-node="${node.id}" cx="${at.x}" cy="${at.y}" r="${NODE_RADIUS}" fill="${color}"/>`,
      );
      if (node.owner !== null) {
        parts.push(
          `<text x="${at.x}" y="${at.y - 12}" font-size="12" text-anchor="middle">${escapeHtml(
            tree.players[node.owner - 1],
          )}</text>`,
        );
      }
    }
  }
  parts.push("</svg>");
  return parts.join("\n");
}

export interface ResultsPanel {
  reportText: string;
  tableRows: string[][];
  componentLines: string[];
  error: string | null;
  timedOut: boolean;
}

export function resultsPanel(
  outcome:
    | { kind: "ok"; reportText: string; structured: StructuredEquilibria | null }
    | { kind: "timeout" }
    | { kind: "error"; message: string },
): ResultsPanel {
  if (outcome.kind === "timeout") {
    return {
      reportText: "",
      tableRows: [],
      componentLines: [],
      error: "The computation timed out on the server. Retry or simplify the game.",
      timedOut: true,
    };
  }
  if (outcome.kind === "error") {
    return {
      reportText: "",
      tableRows: [],
      componentLines: [],
      error: outcome.message,
      timedOut: false,
    };
  }
  const rows: string[][] = [];
  const componentLines: string[] = [];
  if (outcome.structured) {
    for (const ee of outcome.structured.equilibria) {
      rows.push([
        `EE ${ee.ee}`,
        `(${ee.p1.index}) ${ee.p1.probs.join(" ")}`,
        ee.p1.payoff,
        `(${ee.p2.index}) ${ee.p2.probs.join(" ")}`,
        ee.p2.payoff,
      ]);
    }
    for (const comp of outcome.structured.components) {
      for (const clique of comp.cliques) {
        componentLines.push(
          `Component ${comp.index}: {${clique.p1.join(", ")}}  x  {${clique.p2.join(", ")}}`,
        );
      }
    }
  }
  return {
    reportText: outcome.reportText,
    tableRows: rows,
    componentLines,
    error: null,
    timedOut: false,
  };
}
