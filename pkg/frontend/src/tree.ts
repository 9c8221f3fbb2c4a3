/**
 * Client-side game-tree model: the same editing semantics the server
 * enforces, mirrored so every mouse action is validated instantly and the
 * authoritative state stays in the browser.
 *
 * Nodes live in an arena with stable ids.  Information sets own the move
 * labels; the k-th child of every member is reached by the set's k-th
 * move.  Chance nodes carry probabilities instead of move names.
 */

import { Rational, sum } from "./rational.js";

export const CHANCE = "chance";
export type Owner = number | typeof CHANCE | null;

export interface TreeNode {
  id: number;
  parent: number | null;
  owner: Owner;
  children: number[];
  probs: Rational[] | null;
  payoffs: Rational[] | null;
  iset: number | null;
}

export interface InformationSet {
  id: number;
  player: number;
  members: number[];
  moves: string[];
  customNames: boolean;
}

export class EditError extends Error {}

function defaultNames(count: number, upper: boolean): string[] {
  const letters = "abcdefghijklmnopqrstuvwxyz";
  const out: string[] = [];
  for (let i = 0; i < count; i++) {
    const letter = letters[i % 26];
    const reps = Math.floor(i / 26) + 1;
    const name = letter.repeat(reps);
    out.push(upper ? name.toUpperCase() : name);
  }
  return out;
}

export class GameTree {
  players: string[];
  nodes = new Map<number, TreeNode>();
  isets = new Map<number, InformationSet>();
  settings = new Map<string, string>();
  root: number;
  private nextNode = 0;
  private nextIset = 0;

  constructor(players: string[] = ["1", "2"]) {
    this.players = [...players];
    this.root = this.newNode(null).id;
  }

  static startingTree(players: string[] = ["1", "2"]): GameTree {
    const tree = new GameTree(players);
    tree.addChildren(tree.root, 2);
    return tree;
  }

  private newNode(parent: number | null): TreeNode {
    const node: TreeNode = {
      id: this.nextNode++,
      parent,
      owner: null,
      children: [],
      probs: null,
      payoffs: this.players.map(() => Rational.zero),
      iset: null,
    };
    this.nodes.set(node.id, node);
    return node;
  }

  node(id: number): TreeNode {
    const node = this.nodes.get(id);
    if (!node) throw new EditError(`no node with id ${id}`);
    return node;
  }

  iset(id: number): InformationSet {
    const group = this.isets.get(id);
    if (!group) throw new EditError(`no information set with id ${id}`);
    return group;
  }

  isLeaf(id: number): boolean {
    return this.node(id).children.length === 0;
  }

  // -- traversal ----------------------------------------------------------

  bfsNodes(): TreeNode[] {
    const out: TreeNode[] = [];
    const queue = [this.root];
    while (queue.length) {
      const node = this.node(queue.shift()!);
      out.push(node);
      queue.push(...node.children);
    }
    return out;
  }

  leaves(): TreeNode[] {
    const out: TreeNode[] = [];
    const stack = [this.root];
    while (stack.length) {
      const node = this.node(stack.pop()!);
      if (node.children.length === 0) out.push(node);
      else stack.push(...[...node.children].reverse());
    }
    return out;
  }

  playerIsets(player: number): InformationSet[] {
    const seen: number[] = [];
    for (const node of this.bfsNodes()) {
      if (node.iset !== null && !seen.includes(node.iset)) {
        if (this.iset(node.iset).player === player) seen.push(node.iset);
      }
    }
    return seen.map((id) => this.iset(id));
  }

  subtreeIds(id: number): number[] {
    const out: number[] = [];
    const stack = [id];
    while (stack.length) {
      const current = stack.pop()!;
      out.push(current);
      stack.push(...this.node(current).children);
    }
    return out;
  }

  // -- editing ------------------------------------------------------------

  addChildren(id: number, count: number): number[] {
    const node = this.node(id);
    if (count < 1) throw new EditError("must add at least one child");
    if (node.children.length > 0)
      throw new EditError("addChildren applies to leaves; use addChild");
    node.payoffs = null;
    const created: number[] = [];
    for (let i = 0; i < count; i++) {
      const child = this.newNode(id);
      node.children.push(child.id);
      created.push(child.id);
    }
    this.refresh();
    return created;
  }

  addChild(id: number): number {
    const node = this.node(id);
    if (node.children.length === 0)
      throw new EditError("addChild applies to nonterminal nodes");
    if (node.iset !== null && this.iset(node.iset).members.length > 1)
      throw new EditError("cannot change arity inside a merged information set");
    const child = this.newNode(id);
    node.children.push(child.id);
    if (node.owner === CHANCE) {
      const k = BigInt(node.children.length);
      node.probs = node.children.map(() => new Rational(1n, k));
    } else if (node.iset !== null) {
      this.iset(node.iset).moves.push("");
    }
    this.refresh();
    return child.id;
  }

  deleteSubtree(id: number): void {
    if (id === this.root) throw new EditError("cannot delete the root");
    const node = this.node(id);
    const parent = this.node(node.parent!);
    const idx = parent.children.indexOf(id);
    parent.children.splice(idx, 1);
    if (parent.owner === CHANCE && parent.probs) {
      parent.probs.splice(idx, 1);
      const total = sum(parent.probs);
      if (parent.children.length > 0) {
        parent.probs = total.isZero()
          ? parent.children.map(() => new Rational(1n, BigInt(parent.children.length)))
          : parent.probs.map((p) => p.div(total));
      }
    } else if (parent.iset !== null) {
      const group = this.iset(parent.iset);
      if (group.members.length > 1)
        throw new EditError("cannot change arity inside a merged information set");
      group.moves.splice(idx, 1);
    }
    for (const gone of this.subtreeIds(id)) {
      this.detachFromIset(gone);
      this.nodes.delete(gone);
    }
    if (parent.children.length === 0) this.makeLeaf(parent);
    this.refresh();
  }

  assignOwner(id: number, owner: number | typeof CHANCE): void {
    const node = this.node(id);
    if (node.children.length === 0) throw new EditError("leaves have no owner");
    if (owner === CHANCE) {
      this.detachFromIset(id);
      node.owner = CHANCE;
      const k = BigInt(node.children.length);
      node.probs = node.children.map(() => new Rational(1n, k));
    } else {
      if (!Number.isInteger(owner) || owner < 1 || owner > this.players.length)
        throw new EditError(`unknown player ${owner}`);
      this.detachFromIset(id);
      node.owner = owner;
      node.probs = null;
      this.singletonIset(id, owner);
    }
    this.refresh();
  }

  mergeInfosets(a: number, b: number): number {
    const first = this.iset(a);
    const second = this.iset(b);
    if (a === b) throw new EditError("cannot merge an information set with itself");
    if (first.player !== second.player)
      throw new EditError("cannot merge information sets of different players");
    if (first.moves.length !== second.moves.length)
      throw new EditError("cannot merge information sets with different move counts");
    first.members.push(...second.members);
    for (const id of second.members) this.node(id).iset = a;
    this.isets.delete(b);
    this.refresh();
    return a;
  }

  dissolveInfoset(id: number): number[] {
    const group = this.iset(id);
    if (group.members.length < 2) return [id];
    const created: number[] = [];
    for (const member of [...group.members]) {
      const fresh: InformationSet = {
        id: this.nextIset++,
        player: group.player,
        members: [member],
        moves: [...group.moves],
        customNames: group.customNames,
      };
      this.isets.set(fresh.id, fresh);
      this.node(member).iset = fresh.id;
      created.push(fresh.id);
    }
    this.isets.delete(id);
    this.refresh();
    return created;
  }

  cutInfoset(id: number, firstGroup: number[]): [number, number] {
    const group = this.iset(id);
    const chosen = group.members.filter((m) => firstGroup.includes(m));
    const rest = group.members.filter((m) => !firstGroup.includes(m));
    if (chosen.length === 0 || rest.length === 0)
      throw new EditError("cut must split the information set into two nonempty parts");
    const fresh: InformationSet = {
      id: this.nextIset++,
      player: group.player,
      members: rest,
      moves: [...group.moves],
      customNames: group.customNames,
    };
    this.isets.set(fresh.id, fresh);
    for (const member of rest) this.node(member).iset = fresh.id;
    group.members = chosen;
    this.refresh();
    return [id, fresh.id];
  }

  setMoveNames(player: number, labels: string[]): void {
    const isets = this.playerIsets(player);
    const needed = isets.reduce((acc, s) => acc + s.moves.length, 0);
    if (labels.length !== needed)
      throw new EditError(`player ${player} needs ${needed} move names, got ${labels.length}`);
    let cursor = 0;
    for (const group of isets) {
      const k = group.moves.length;
      group.moves = labels.slice(cursor, cursor + k);
      group.customNames = true;
      cursor += k;
    }
  }

  setChanceProb(id: number, childIndex: number, p: Rational): void {
    const node = this.node(id);
    if (node.owner !== CHANCE || !node.probs)
      throw new EditError("setChanceProb applies to chance nodes");
    if (p.cmp(Rational.zero) < 0 || p.cmp(Rational.one) > 0)
      throw new EditError("chance probability must lie in [0, 1]");
    const k = node.children.length;
    if (childIndex < 0 || childIndex >= k) throw new EditError("no such child");
    node.probs[childIndex] = p;
    const others = [...node.children.keys()].filter((i) => i !== childIndex);
    const remainder = Rational.one.sub(p);
    if (others.length === 1) {
      node.probs[others[0]] = remainder;
    } else if (others.length > 1) {
      const total = sum(others.map((i) => node.probs![i]));
      for (const i of others) {
        node.probs[i] = total.isZero()
          ? remainder.div(new Rational(BigInt(others.length)))
          : node.probs[i].div(total).mul(remainder);
      }
    }
  }

  setPayoffs(player: number, values: Rational[]): void {
    const leaves = this.leaves();
    if (values.length !== leaves.length)
      throw new EditError(`expected ${leaves.length} payoffs, got ${values.length}`);
    leaves.forEach((leaf, k) => {
      leaf.payoffs![player - 1] = values[k];
    });
  }

  setPayoff(id: number, player: number, value: Rational): void {
    const node = this.node(id);
    if (node.children.length > 0) throw new EditError("payoffs live on leaves");
    node.payoffs![player - 1] = value;
  }

  defaultPayoffs(): void {
    this.leaves().forEach((leaf, k) => {
      leaf.payoffs = this.players.map(() => Rational.fromInt(k));
    });
  }

  renamePlayer(player: number, name: string): void {
    this.players[player - 1] = name;
  }

  // -- loading hooks (used by the XML reader) --------------------------------

  /** Appends a bare child node without the editing-stage checks. */
  addRawChild(id: number): number {
    const node = this.node(id);
    node.payoffs = null;
    const child = this.newNode(id);
    node.children.push(child.id);
    return child.id;
  }

  /** Installs one information set over already-built nodes. */
  adoptIset(player: number, members: number[], moves: string[]): number {
    const arities = new Set(members.map((m) => this.node(m).children.length));
    if (arities.size > 1)
      throw new EditError("information set members differ in child count");
    const fresh: InformationSet = {
      id: this.nextIset++,
      player,
      members: [...members],
      moves: [...moves],
      customNames: true,
    };
    this.isets.set(fresh.id, fresh);
    for (const member of members) this.node(member).iset = fresh.id;
    return fresh.id;
  }

  // -- internals ------------------------------------------------------------

  private makeLeaf(node: TreeNode): void {
    this.detachFromIset(node.id);
    node.owner = null;
    node.probs = null;
    node.payoffs = this.players.map(() => Rational.zero);
  }

  private detachFromIset(id: number): void {
    const node = this.node(id);
    if (node.iset === null) return;
    const group = this.iset(node.iset);
    group.members = group.members.filter((m) => m !== id);
    if (group.members.length === 0) this.isets.delete(group.id);
    node.iset = null;
  }

  private singletonIset(id: number, player: number): void {
    const node = this.node(id);
    const fresh: InformationSet = {
      id: this.nextIset++,
      player,
      members: [id],
      moves: node.children.map(() => ""),
      customNames: false,
    };
    this.isets.set(fresh.id, fresh);
    node.iset = fresh.id;
  }

  private refresh(): void {
    for (let player = 1; player <= this.players.length; player++) {
      const isets = this.playerIsets(player);
      const total = isets.reduce((acc, s) => acc + s.moves.length, 0);
      const pool = defaultNames(Math.max(total, 1), player === 1);
      let cursor = 0;
      for (const group of isets) {
        const k = group.moves.length;
        if (!group.customNames) group.moves = pool.slice(cursor, cursor + k);
        cursor += k;
      }
    }
  }

  // -- validation -------------------------------------------------------------

  /** Problems that block leaving the players stage / solving. */
  validationIssues(): string[] {
    const issues: string[] = [];
    for (const node of this.nodes.values()) {
      if (node.children.length === 0) continue;
      if (node.owner === null) issues.push(`node ${node.id} has no assigned player`);
      if (node.owner === CHANCE) {
        const total = sum(node.probs ?? []);
        if (!total.eq(Rational.one))
          issues.push(`chance node ${node.id}: probabilities sum to ${total}`);
        if ((node.probs ?? []).some((p) => p.cmp(Rational.zero) < 0))
          issues.push(`chance node ${node.id}: negative probability`);
      }
    }
    for (const group of this.isets.values()) {
      const counts = new Set(group.members.map((m) => this.node(m).children.length));
      if (counts.size > 1)
        issues.push(`information set ${group.id}: members differ in child count`);
      if (group.members.some((m) => this.node(m).owner !== group.player))
        issues.push(`information set ${group.id}: member owned by another player`);
    }
    return issues;
  }

  /** Canonical structural key; equal keys mean the same logical tree. */
  signature(): string {
    const isetKey = new Map<number, string>();
    for (let player = 1; player <= this.players.length; player++) {
      this.playerIsets(player).forEach((group, k) => {
        isetKey.set(group.id, `${player}.${k}`);
      });
    }
    const rec = (id: number): unknown => {
      const node = this.node(id);
      if (node.children.length === 0)
        return ["leaf", node.payoffs!.map((p) => p.toString())];
      if (node.owner === CHANCE)
        return [
          "chance",
          node.probs!.map((p) => p.toString()),
          node.children.map(rec),
        ];
      const moves = node.iset !== null ? this.iset(node.iset).moves : [];
      return [
        "node",
        node.owner,
        node.iset !== null ? isetKey.get(node.iset) : null,
        [...moves],
        node.children.map(rec),
      ];
    };
    return JSON.stringify([
      this.players,
      [...this.settings.entries()].sort(),
      rec(this.root),
    ]);
  }

  clone(): GameTree {
    const copy = new GameTree(this.players);
    copy.nodes = new Map(
      [...this.nodes.entries()].map(([id, node]) => [
        id,
        {
          ...node,
          children: [...node.children],
          probs: node.probs ? [...node.probs] : null,
          payoffs: node.payoffs ? [...node.payoffs] : null,
        },
      ]),
    );
    copy.isets = new Map(
      [...this.isets.entries()].map(([id, group]) => [
        id,
        { ...group, members: [...group.members], moves: [...group.moves] },
      ]),
    );
    copy.settings = new Map(this.settings);
    copy.root = this.root;
    copy.nextNode = this.nextNode;
    copy.nextIset = this.nextIset;
    return copy;
  }
}
