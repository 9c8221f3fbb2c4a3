/** Scripted stage flows reused by the unit tests and the e2e test. */

import { EditorSession } from "../src/stages.js";
import { GameTree } from "../src/tree.js";

/**
 * Builds the commitment game tree exactly as a user would: grow the tree,
 * assign players, skip merging, name moves, then type the payoffs.
 */
export function buildCommitmentTreeViaStages(): EditorSession {
  const session = new EditorSession(GameTree.startingTree());
  const root = session.tree.root;
  // tree stage: click both leaves so each grows two children
  for (const child of [...session.tree.node(root).children]) {
    session.apply({ kind: "click-node", node: child });
  }
  // players stage: root to player 1, both middle nodes to player 2
  session.apply({ kind: "advance-stage" });
  session.apply({ kind: "click-node", node: root });
  session.apply({ kind: "set-mode", mode: "assign-2" });
  for (const child of session.tree.node(root).children) {
    session.apply({ kind: "click-node", node: child });
  }
  // information sets: nothing to merge for the commitment version
  session.apply({ kind: "advance-stage" });
  // moves stage: rename the defaults A,B / a,b,c,d
  session.apply({ kind: "advance-stage" });
  session.apply({ kind: "set-move-names", player: 1, labels: ["T", "B"] });
  session.apply({ kind: "set-move-names", player: 2, labels: ["l", "r", "a", "b"] });
  // payoffs stage
  session.apply({ kind: "advance-stage" });
  session.apply({ kind: "set-payoffs", player: 1, values: ["5", "3", "6", "4"] });
  session.apply({ kind: "set-payoffs", player: 2, values: ["2", "1", "3", "4"] });
  return session;
}

/** The simultaneous version: same payoffs, player 2 cannot tell the nodes apart. */
export function buildSimultaneousTreeViaStages(): EditorSession {
  const session = buildCommitmentTreeViaStages();
  session.apply({ kind: "goto-stage", stage: "infosets" });
  const [first, second] = session.tree.playerIsets(2);
  session.apply({ kind: "set-mode", mode: "merge" });
  session.apply({ kind: "click-node", node: first.members[0] });
  session.apply({ kind: "click-node", node: second.members[0] });
  session.apply({ kind: "goto-stage", stage: "moves" });
  session.apply({ kind: "set-move-names", player: 2, labels: ["l", "r"] });
  return session;
}

export const COMMITMENT_REPORT_TOKENS = `
Strategic form:
2 x 4 Payoff player 1
la lb ra rb
T 5 5 3 3
B 6 4 6 4
2 x 4 Payoff player 2
la lb ra rb
T 2 2 1 1
B 3 4 3 4
EE = Extreme Equilibrium, EP = Expected Payoffs
Rational:
EE 1 P1: (1) 1 0 EP= 5 P2: (1) 0 1 0 0 EP= 2
EE 2 P1: (1) 1 0 EP= 5 P2: (2) 1/2 1/2 0 0 EP= 2
EE 3 P1: (2) 0 1 EP= 4 P2: (3) 0 0 0 1 EP= 4
EE 4 P1: (2) 0 1 EP= 4 P2: (4) 0 1/2 0 1/2 EP= 4
Decimal:
EE 1 P1: (1) 1.0 0 EP= 5.0 P2: (1) 0 1.0 0 0 EP= 2.0
EE 2 P1: (1) 1.0 0 EP= 5.0 P2: (2) 0.5 0.5 0 0 EP= 2.0
EE 3 P1: (2) 0 1.0 EP= 4.0 P2: (3) 0 0 0 1.0 EP= 4.0
EE 4 P1: (2) 0 1.0 EP= 4.0 P2: (4) 0 0.5 0 0.5 EP= 4.0
Connected component 1:
{1}  x  {1, 2}
Connected component 2:
{2}  x  {3, 4}
`
  .split(/\s+/)
  .filter(Boolean);
