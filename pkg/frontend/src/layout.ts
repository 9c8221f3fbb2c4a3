/**
 * Deterministic layered tree layout.
 *
 * Every member of an information set is placed on one layer (so the oval
 * drawn around the set is straight), children sit strictly below their
 * parents, and crossings are reduced by barycenter sweeps over the layer
 * orderings.  Information-set members are kept adjacent by ordering whole
 * sets, not single nodes, within a layer.  The orientation setting turns
 * the layered coordinates: top-down (default), bottom-up, left-right,
 * right-left.
 */

import { GameTree } from "./tree.js";

export type Orientation = "top-down" | "bottom-up" | "left-right" | "right-left";

export interface LayoutSettings {
  orientation: Orientation;
  layerGap: number;
  slotGap: number;
}

export const DEFAULT_SETTINGS: LayoutSettings = {
  orientation: "top-down",
  layerGap: 80,
  slotGap: 60,
};

export interface TreeLayout {
  positions: Map<number, { x: number; y: number }>;
  layers: number[][]; // node ids per layer, in drawing order
  layerOf: Map<number, number>;
  ovals: Array<{ iset: number; members: number[] }>;
  orientation: Orientation;
}

export function settingsFromTree(tree: GameTree): LayoutSettings {
  const orientation = (tree.settings.get("orientation") ?? "top-down") as Orientation;
  return { ...DEFAULT_SETTINGS, orientation };
}

function assignLayers(tree: GameTree): Map<number, number> {
  const layer = new Map<number, number>();
  for (const node of tree.bfsNodes()) {
    layer.set(node.id, node.parent === null ? 0 : layer.get(node.parent)! + 1);
  }
  // members of an information set share the deepest member's layer, and
  // children must stay strictly below parents; iterate to a fixpoint
  for (let pass = 0; pass < tree.nodes.size + 2; pass++) {
    let changed = false;
    for (const group of tree.isets.values()) {
      const depth = Math.max(...group.members.map((m) => layer.get(m)!));
      for (const member of group.members) {
        if (layer.get(member)! !== depth) {
          layer.set(member, depth);
          changed = true;
        }
      }
    }
    for (const node of tree.bfsNodes()) {
      if (node.parent !== null) {
        const wanted = layer.get(node.parent)! + 1;
        if (layer.get(node.id)! < wanted) {
          layer.set(node.id, wanted);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return layer;
}

interface Unit {
  key: string;
  nodes: number[]; // members in stable order; adjacent in the layer
}

function barycenterOrder(tree: GameTree, layerOf: Map<number, number>): number[][] {
  const depth = Math.max(...[...layerOf.values()]) + 1;
  const layers: number[][] = Array.from({ length: depth }, () => []);
  for (const node of tree.bfsNodes()) layers[layerOf.get(node.id)!].push(node.id);

  // group information-set members into one orderable unit
  const unitsPerLayer: Unit[][] = layers.map((ids) => {
    const units: Unit[] = [];
    const placed = new Set<number>();
    for (const id of ids) {
      if (placed.has(id)) continue;
      const node = tree.node(id);
      if (node.iset !== null) {
        const members = tree.iset(node.iset).members.filter((m) => ids.includes(m));
        members.forEach((m) => placed.add(m));
        units.push({ key: `s${node.iset}`, nodes: members });
      } else {
        placed.add(id);
        units.push({ key: `n${id}`, nodes: [id] });
      }
    }
    return units;
  });

  const position = new Map<number, number>();
  const renumber = () => {
    unitsPerLayer.forEach((units) => {
      let slot = 0;
      for (const unit of units) for (const id of unit.nodes) position.set(id, slot++);
    });
  };
  renumber();

  const barycenter = (unit: Unit, neighbors: (id: number) => number[]): number => {
    const values: number[] = [];
    for (const id of unit.nodes) {
      for (const other of neighbors(id)) {
        const p = position.get(other);
        if (p !== undefined) values.push(p);
      }
    }
    if (!values.length) return position.get(unit.nodes[0]) ?? 0;
    return values.reduce((a, b) => a + b, 0) / values.length;
  };

  for (let sweep = 0; sweep < 4; sweep++) {
    const downward = sweep % 2 === 0;
    const order = downward
      ? [...unitsPerLayer.keys()].slice(1)
      : [...unitsPerLayer.keys()].slice(0, -1).reverse();
    for (const level of order) {
      const units = unitsPerLayer[level];
      const score = new Map(
        units.map((unit) => [
          unit.key,
          barycenter(unit, (id) => {
            const node = tree.node(id);
            return downward
              ? node.parent !== null
                ? [node.parent]
                : []
              : node.children;
          }),
        ]),
      );
      units.sort((a, b) => {
        const diff = score.get(a.key)! - score.get(b.key)!;
        return diff !== 0 ? diff : a.key < b.key ? -1 : 1;
      });
      renumber();
    }
  }
  return unitsPerLayer.map((units) => units.flatMap((u) => u.nodes));
}

export function computeLayout(
  tree: GameTree,
  settings: LayoutSettings = DEFAULT_SETTINGS,
): TreeLayout {
  const layerOf = assignLayers(tree);
  const layers = barycenterOrder(tree, layerOf);
  const positions = new Map<number, { x: number; y: number }>();
  const widest = Math.max(...layers.map((ids) => ids.length));
  layers.forEach((ids, level) => {
    const offset = (widest - ids.length) / 2;
    ids.forEach((id, slot) => {
      const across = (offset + slot) * settings.slotGap;
      const down = level * settings.layerGap;
      positions.set(id, orient(across, down, settings.orientation));
    });
  });
  const ovals = [...tree.isets.values()]
    .filter((group) => group.members.length > 1)
    .map((group) => ({ iset: group.id, members: [...group.members] }));
  return { positions, layers, layerOf, ovals, orientation: settings.orientation };
}

function orient(across: number, down: number, orientation: Orientation) {
  switch (orientation) {
    case "top-down":
      return { x: across, y: down };
    case "bottom-up":
      return { x: across, y: -down };
    case "left-right":
      return { x: down, y: across };
    case "right-left":
      return { x: -down, y: across };
  }
}
