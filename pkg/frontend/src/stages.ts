/**
 * The five-stage editing flow: tree shape, player assignment, information
 * sets, move names and chance probabilities, payoffs.  Each stage fixes the
 * meaning of a mouse click; the session validates stage transitions (all
 * nonterminal nodes must be owned before leaving the players stage) and
 * keeps an undo stack of whole-tree snapshots.
 */

import { Rational } from "./rational.js";
import { CHANCE, EditError, GameTree } from "./tree.js";

export const STAGES = ["tree", "players", "infosets", "moves", "payoffs"] as const;
export type EditorStage = (typeof STAGES)[number];

export type Mode =
  | "add-child"
  | "delete"
  | "assign-1"
  | "assign-2"
  | "assign-chance"
  | "merge"
  | "dissolve"
  | "cut"
  | "rename"
  | "edit-payoff";

const DEFAULT_MODE: Record<EditorStage, Mode> = {
  tree: "add-child",
  players: "assign-1",
  infosets: "merge",
  moves: "rename",
  payoffs: "edit-payoff",
};

const MODES_BY_STAGE: Record<EditorStage, Mode[]> = {
  tree: ["add-child", "delete"],
  players: ["assign-1", "assign-2", "assign-chance"],
  infosets: ["merge", "dissolve", "cut"],
  moves: ["rename"],
  payoffs: ["edit-payoff"],
};

export type EditorAction =
  | { kind: "click-node"; node: number }
  | { kind: "set-mode"; mode: Mode }
  | { kind: "advance-stage" }
  | { kind: "back-stage" }
  | { kind: "goto-stage"; stage: EditorStage }
  | { kind: "set-move-names"; player: number; labels: string[] }
  | { kind: "set-chance-prob"; node: number; child: number; prob: string }
  | { kind: "set-payoffs"; player: number; values: string[] }
  | { kind: "set-payoff"; node: number; player: number; value: string }
  | { kind: "default-payoffs" }
  | { kind: "rename-player"; player: number; name: string }
  | { kind: "set-setting"; key: string; value: string }
  | { kind: "undo" };

export class StageError extends Error {}

export class EditorSession {
  tree: GameTree;
  stage: EditorStage = "tree";
  mode: Mode = DEFAULT_MODE.tree;
  /** first node of a pending merge/cut selection */
  private selection: number | null = null;
  private undoStack: GameTree[] = [];
  lastError: string | null = null;

  constructor(tree: GameTree = GameTree.startingTree()) {
    this.tree = tree;
  }

  availableModes(): Mode[] {
    return MODES_BY_STAGE[this.stage];
  }

  /** Issues that block moving past the given stage. */
  blockers(stage: EditorStage): string[] {
    if (stage === "players") {
      return this.tree
        .validationIssues()
        .filter((issue) => issue.includes("no assigned player"));
    }
    if (stage === "payoffs") return this.tree.validationIssues();
    return [];
  }

  apply(action: EditorAction): void {
    this.lastError = null;
    try {
      this.dispatch(action);
    } catch (err) {
      if (err instanceof EditError || err instanceof StageError) {
        this.lastError = err.message;
        return;
      }
      throw err;
    }
  }

  private remember(): void {
    this.undoStack.push(this.tree.clone());
    if (this.undoStack.length > 100) this.undoStack.shift();
  }

  private dispatch(action: EditorAction): void {
    switch (action.kind) {
      case "set-mode":
        if (!this.availableModes().includes(action.mode))
          throw new StageError(`mode ${action.mode} is not part of the ${this.stage} stage`);
        this.mode = action.mode;
        this.selection = null;
        return;
      case "advance-stage": {
        const index = STAGES.indexOf(this.stage);
        if (index === STAGES.length - 1) return;
        const blockers = this.blockers(this.stage);
        if (blockers.length) throw new StageError(blockers[0]);
        this.stage = STAGES[index + 1];
        this.mode = DEFAULT_MODE[this.stage];
        this.selection = null;
        return;
      }
      case "back-stage": {
        const index = STAGES.indexOf(this.stage);
        if (index > 0) {
          this.stage = STAGES[index - 1];
          this.mode = DEFAULT_MODE[this.stage];
          this.selection = null;
        }
        return;
      }
      case "goto-stage": {
        const target = STAGES.indexOf(action.stage);
        for (let k = STAGES.indexOf(this.stage); k < target; k++) {
          const blockers = this.blockers(STAGES[k]);
          if (blockers.length) throw new StageError(blockers[0]);
        }
        this.stage = action.stage;
        this.mode = DEFAULT_MODE[this.stage];
        this.selection = null;
        return;
      }
      case "undo": {
        const previous = this.undoStack.pop();
        if (previous) this.tree = previous;
        return;
      }
      case "click-node":
        this.clickNode(action.node);
        return;
      case "set-move-names":
        if (this.stage !== "moves" && this.stage !== "infosets")
          throw new StageError("move names are edited in the moves stage");
        this.remember();
        this.tree.setMoveNames(action.player, action.labels);
        return;
      case "set-chance-prob":
        if (this.stage !== "moves")
          throw new StageError("chance probabilities are edited in the moves stage");
        this.remember();
        this.tree.setChanceProb(action.node, action.child, Rational.parse(action.prob));
        return;
      case "set-payoffs":
        if (this.stage !== "payoffs")
          throw new StageError("payoffs are edited in the payoffs stage");
        this.remember();
        this.tree.setPayoffs(
          action.player,
          action.values.map((v) => Rational.parse(v)),
        );
        return;
      case "set-payoff":
        if (this.stage !== "payoffs")
          throw new StageError("payoffs are edited in the payoffs stage");
        this.remember();
        this.tree.setPayoff(action.node, action.player, Rational.parse(action.value));
        return;
      case "default-payoffs":
        this.remember();
        this.tree.defaultPayoffs();
        return;
      case "rename-player":
        this.remember();
        this.tree.renamePlayer(action.player, action.name);
        return;
      case "set-setting":
        this.tree.settings.set(action.key, action.value);
        return;
    }
  }

  private clickNode(id: number): void {
    switch (this.stage) {
      case "tree":
        this.remember();
        if (this.mode === "delete") {
          this.tree.deleteSubtree(id);
        } else if (this.tree.isLeaf(id)) {
          this.tree.addChildren(id, 2);
        } else {
          this.tree.addChild(id);
        }
        return;
      case "players": {
        this.remember();
        const owner =
          this.mode === "assign-chance" ? CHANCE : this.mode === "assign-2" ? 2 : 1;
        this.tree.assignOwner(id, owner);
        return;
      }
      case "infosets": {
        const node = this.tree.node(id);
        if (node.iset === null) throw new StageError("click a node owned by a player");
        if (this.mode === "dissolve") {
          this.remember();
          this.tree.dissolveInfoset(node.iset);
          return;
        }
        if (this.mode === "cut") {
          this.remember();
          this.tree.cutInfoset(node.iset, [id]);
          return;
        }
        if (this.selection === null) {
          this.selection = id;
          return;
        }
        const first = this.tree.node(this.selection);
        this.selection = null;
        if (first.iset === null || first.iset === node.iset) return;
        this.remember();
        this.tree.mergeInfosets(first.iset, node.iset);
        return;
      }
      default:
        throw new StageError(`clicking a node does nothing in the ${this.stage} stage`);
    }
  }
}
