/**
 * Strategic-form editing: a grid of exact rational entries per player with
 * the zero-sum and symmetric input modes (player 2's matrix derived
 * automatically).  Produces the whitespace matrix text the solve service
 * accepts, so a what-if edit is: change a cell, re-solve, compare.
 */

import { Rational } from "./rational.js";

export type MatrixMode = "general" | "zero-sum" | "symmetric";

export class MatrixEditor {
  rows: number;
  cols: number;
  mode: MatrixMode;
  a: Rational[][];
  b: Rational[][];
  rowNames: string[];
  colNames: string[];

  constructor(rows: number, cols: number, mode: MatrixMode = "general") {
    if (rows < 1 || cols < 1) throw new Error("need at least one row and column");
    if (mode === "symmetric" && rows !== cols)
      throw new Error("symmetric games are square");
    this.rows = rows;
    this.cols = cols;
    this.mode = mode;
    this.a = Array.from({ length: rows }, () => Array(cols).fill(Rational.zero));
    this.b = Array.from({ length: rows }, () => Array(cols).fill(Rational.zero));
    this.rowNames = Array.from({ length: rows }, (_, i) => defaultName(i, true));
    this.colNames = Array.from({ length: cols }, (_, j) => defaultName(j, false));
  }

  static fromValues(a: string[][], b?: string[][], mode: MatrixMode = "general"): MatrixEditor {
    const editor = new MatrixEditor(a.length, a[0].length, mode);
    a.forEach((row, i) => row.forEach((v, j) => editor.setEntry(1, i, j, v)));
    if (b && mode === "general") {
      b.forEach((row, i) => row.forEach((v, j) => editor.setEntry(2, i, j, v)));
    }
    return editor;
  }

  setEntry(player: 1 | 2, i: number, j: number, text: string): void {
    const value = Rational.parse(text);
    if (player === 2 && this.mode !== "general")
      throw new Error(`player 2's payoffs are derived in ${this.mode} mode`);
    (player === 1 ? this.a : this.b)[i][j] = value;
    this.update();
  }

  /** Mirrors the "Align and Update" button: recompute derived payoffs. */
  update(): void {
    if (this.mode === "zero-sum") {
      this.b = this.a.map((row) => row.map((v) => v.neg()));
    } else if (this.mode === "symmetric") {
      this.b = this.a[0].map((_, i) => this.a.map((row) => row[i]));
    }
  }

  /** The text payload the service parses (two named payoff blocks). */
  toText(): string {
    const block = (matrix: Rational[][]) => {
      const header = "  " + this.colNames.join(" ");
      const lines = matrix.map(
        (row, i) => `${this.rowNames[i]} ${row.map((v) => v.toString()).join(" ")}`,
      );
      return [header, ...lines].join("\n");
    };
    return block(this.a) + "\n\n" + block(this.b) + "\n";
  }
}

function defaultName(index: number, upper: boolean): string {
  const letters = "abcdefghijklmnopqrstuvwxyz";
  const name = letters[index % 26].repeat(Math.floor(index / 26) + 1);
  return upper ? name.toUpperCase() : name;
}
