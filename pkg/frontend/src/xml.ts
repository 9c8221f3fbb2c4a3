/**
 * The XML game format, byte-compatible with the server's serializer: a
 * <game> root with optional <settings>, the <players> list and a <tree> of
 * nested <node>/<outcome> elements.  Leaves are
 *
 *     <outcome move="T">
 *        <payoff player="1">1</payoff>
 *        <payoff player="2">3</payoff>
 *     </outcome>
 *
 * with three-space indentation and breadth-first canonical information-set
 * ids, so a round trip through the server's convert endpoint is an exact
 * string identity.
 */

import { Rational } from "./rational.js";
import { CHANCE, GameTree } from "./tree.js";

const INDENT = "   ";

function escapeXml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

function canonicalIsetIds(tree: GameTree): Map<number, number> {
  const ids = new Map<number, number>();
  for (const node of tree.bfsNodes()) {
    if (node.iset !== null && !ids.has(node.iset)) ids.set(node.iset, ids.size);
  }
  return ids;
}

export function treeToXml(tree: GameTree): string {
  const lines: string[] = ["<game>"];
  if (tree.settings.size > 0) {
    lines.push(INDENT + "<settings>");
    for (const key of [...tree.settings.keys()].sort()) {
      lines.push(
        INDENT.repeat(2) +
          `<setting name="${escapeXml(key)}">${escapeXml(tree.settings.get(key)!)}</setting>`,
      );
    }
    lines.push(INDENT + "</settings>");
  }
  lines.push(INDENT + "<players>");
  tree.players.forEach((name, k) => {
    lines.push(INDENT.repeat(2) + `<player id="${k + 1}">${escapeXml(name)}</player>`);
  });
  lines.push(INDENT + "</players>");
  lines.push(INDENT + "<tree>");
  writeNode(tree, tree.root, null, lines, 2, canonicalIsetIds(tree));
  lines.push(INDENT + "</tree>");
  lines.push("</game>");
  return lines.join("\n") + "\n";
}

function edgeAttr(tree: GameTree, parentId: number | null, childId: number): string {
  if (parentId === null) return "";
  const parent = tree.node(parentId);
  const idx = parent.children.indexOf(childId);
  if (parent.owner === CHANCE) return ` prob="${parent.probs![idx]}"`;
  const move = parent.iset !== null ? tree.iset(parent.iset).moves[idx] : "";
  return ` move="${escapeXml(move)}"`;
}

function writeNode(
  tree: GameTree,
  id: number,
  parentId: number | null,
  lines: string[],
  depth: number,
  canonical: Map<number, number>,
): void {
  const node = tree.node(id);
  const pad = INDENT.repeat(depth);
  const edge = edgeAttr(tree, parentId, id);
  if (node.children.length === 0) {
    lines.push(`${pad}<outcome${edge}>`);
    tree.players.forEach((name, k) => {
      const value = node.payoffs?.[k] ?? Rational.zero;
      lines.push(`${pad}${INDENT}<payoff player="${escapeXml(name)}">${value}</payoff>`);
    });
    lines.push(`${pad}</outcome>`);
    return;
  }
  let ownerAttr = "";
  if (node.owner === CHANCE) ownerAttr = ' player="chance"';
  else if (node.owner !== null)
    ownerAttr = ` player="${escapeXml(tree.players[node.owner - 1])}"`;
  const isetAttr = node.iset !== null ? ` iset="${canonical.get(node.iset)}"` : "";
  lines.push(`${pad}<node${edge}${ownerAttr}${isetAttr}>`);
  for (const child of node.children) {
    writeNode(tree, child, id, lines, depth + 1, canonical);
  }
  lines.push(`${pad}</node>`);
}

// -- minimal XML reader (the format above only) -------------------------------

export interface XmlElement {
  tag: string;
  attrs: Record<string, string>;
  children: XmlElement[];
  text: string;
}

export function parseXml(text: string): XmlElement {
  let pos = 0;

  function error(message: string): never {
    throw new Error(`malformed XML at offset ${pos}: ${message}`);
  }

  function skipWhitespace() {
    while (pos < text.length && /\s/.test(text[pos])) pos++;
  }

  function unescape(raw: string): string {
    return raw
      .replaceAll("&lt;", "<")
      .replaceAll("&gt;", ">")
      .replaceAll("&quot;", '"')
      .replaceAll("&amp;", "&");
  }

  function parseElement(): XmlElement {
    if (text[pos] !== "<") error("expected element");
    pos++;
    const tagMatch = /^[A-Za-z][A-Za-z0-9]*/.exec(text.slice(pos));
    if (!tagMatch) error("expected tag name");
    const tag = tagMatch[0];
    pos += tag.length;
    const attrs: Record<string, string> = {};
    for (;;) {
      skipWhitespace();
      if (text.startsWith("/>", pos)) {
        pos += 2;
        return { tag, attrs, children: [], text: "" };
      }
      if (text[pos] === ">") {
        pos++;
        break;
      }
      const attrMatch = /^([A-Za-z][A-Za-z0-9._-]*)="([^"]*)"/.exec(text.slice(pos));
      if (!attrMatch) error("expected attribute");
      attrs[attrMatch[1]] = unescape(attrMatch[2]);
      pos += attrMatch[0].length;
    }
    const children: XmlElement[] = [];
    let content = "";
    for (;;) {
      if (pos >= text.length) error("unexpected end of document");
      if (text.startsWith("</", pos)) {
        const close = `</${tag}>`;
        if (!text.startsWith(close, pos)) error(`mismatched closing tag for <${tag}>`);
        pos += close.length;
        return { tag, attrs, children, text: unescape(content.trim()) };
      }
      if (text[pos] === "<") {
        children.push(parseElement());
      } else {
        content += text[pos];
        pos++;
      }
    }
  }

  skipWhitespace();
  const root = parseElement();
  skipWhitespace();
  if (pos !== text.length) error("trailing content");
  return root;
}

export function treeFromXml(text: string): GameTree {
  const game = parseXml(text);
  if (game.tag !== "game") throw new Error(`expected <game> root, found <${game.tag}>`);
  const playersEl = game.children.find((c) => c.tag === "players");
  const players = playersEl
    ? playersEl.children.filter((c) => c.tag === "player").map((c) => c.text)
    : ["1", "2"];
  if (players.length === 0) throw new Error("empty players list");
  const treeEl = game.children.find((c) => c.tag === "tree");
  if (!treeEl) throw new Error("no <tree> element in game file");
  if (treeEl.children.length !== 1) throw new Error("<tree> must hold exactly one root");

  const tree = new GameTree(players);
  const playerOf = new Map(players.map((name, k) => [name, k + 1]));
  const groups = new Map<string, { nodes: number[]; moves: string[] }>();

  function build(element: XmlElement, id: number): void {
    const node = tree.node(id);
    if (element.tag === "outcome") {
      const payoffs = players.map(() => Rational.zero);
      for (const child of element.children) {
        if (child.tag !== "payoff") throw new Error(`unknown element <${child.tag}>`);
        const who = playerOf.get(child.attrs["player"]);
        if (!who) throw new Error(`payoff for unknown player ${child.attrs["player"]}`);
        payoffs[who - 1] = Rational.parse(child.text);
      }
      node.payoffs = payoffs;
      return;
    }
    if (element.tag !== "node") throw new Error(`unknown element <${element.tag}>`);
    if (element.children.length === 0)
      throw new Error("<node> without children; use <outcome> for leaves");
    const kids: Array<[XmlElement, number]> = [];
    for (const childEl of element.children) {
      const child = tree.addRawChild(id);
      kids.push([childEl, child]);
    }
    const owner = element.attrs["player"];
    if (owner === "chance") {
      node.owner = CHANCE;
      node.probs = kids.map(([el]) => {
        const prob = el.attrs["prob"];
        if (prob === undefined) throw new Error("chance child needs a prob attribute");
        return Rational.parse(prob);
      });
    } else if (owner !== undefined) {
      const who = playerOf.get(owner);
      if (!who) throw new Error(`unknown player ${owner}`);
      node.owner = who;
      const moves = kids.map(([el]) => el.attrs["move"] ?? "");
      const key = `${who}:${element.attrs["iset"] ?? `solo-${id}`}`;
      const group = groups.get(key) ?? { nodes: [], moves };
      group.nodes.push(id);
      groups.set(key, group);
    }
    for (const [childEl, childId] of kids) build(childEl, childId);
  }

  build(treeEl.children[0], tree.root);
  for (const [key, group] of groups) {
    const player = Number(key.split(":")[0]);
    tree.adoptIset(player, group.nodes, group.moves);
  }
  const settingsEl = game.children.find((c) => c.tag === "settings");
  if (settingsEl) {
    for (const s of settingsEl.children) {
      if (s.tag !== "setting" || !s.attrs["name"])
        throw new Error("settings entries are <setting name=...>");
      tree.settings.set(s.attrs["name"], s.text);
    }
  }
  return tree;
}
