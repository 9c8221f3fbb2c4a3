"""Sequence form of a perfect-recall tree.

A player's sequence is the list of own (information set, move) pairs on a
path from the root.  The empty sequence is always kept; a nonempty sequence
is kept when it is the player's final sequence at some leaf.  Unused
nonterminal sequences (those that only lead on to further own information
sets) are substituted away, so e.g. the weight of sequence b with
continuation moves g, h appears as y_bg + y_bh inside its parent equation.

The result is a sparse pair of payoff matrices over kept sequence pairs and
one linear system per player: the first equation pins the empty sequence to
one, and each information set contributes one equation (minus one for every
substituted sequence).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedGameError
from .strategic import BimatrixGame
from .tree import CHANCE, GameTree


@dataclass(frozen=True)
class RealizationPlan:
    player: int
    weights: tuple[Fraction, ...]  # aligned with the kept sequence list


@dataclass(frozen=True)
class BehaviorStrategy:
    player: int
    local: dict  # information-set id -> tuple of move probabilities


@dataclass
class SequenceForm:
    seqs1: list[tuple]  # kept sequences, empty sequence first
    seqs2: list[tuple]
    payoff1: dict  # (row index, col index) -> Fraction, sparse
    payoff2: dict
    cons1: tuple  # (rows, rhs) over seqs1 weights
    cons2: tuple
    isets1: list  # (iset id, parent sequence, move count) in order
    isets2: list
    names1: list[str]
    names2: list[str]
    expand1: dict  # any sequence (kept or not) -> {kept index: coeff 1}
    expand2: dict

    def seqs(self, player):
        return self.seqs1 if player == 1 else self.seqs2

    def constraints(self, player):
        return self.cons1 if player == 1 else self.cons2

    def expansion(self, player):
        return self.expand1 if player == 1 else self.expand2

    def weight_of(self, plan: RealizationPlan, seq: tuple) -> Fraction:
        expand = self.expansion(plan.player)
        return sum(
            (plan.weights[k] * c for k, c in expand[seq].items()), Fraction(0)
        )

    def check_plan(self, plan: RealizationPlan) -> bool:
        if any(w < 0 for w in plan.weights):
            return False
        rows, rhs = self.constraints(plan.player)
        for row, b in zip(rows, rhs):
            if sum((c * w for c, w in zip(row, plan.weights)), Fraction(0)) != b:
                return False
        return True


def _player_sequences(tree: GameTree, player: int):
    """Information sets with their parent sequences, plus leaf sequences."""
    isets = tree.player_isets(player)
    parent_seq = {}
    for group in isets:
        histories = {tree.own_history(nid, player) for nid in group.members}
        if len(histories) != 1:
            raise UnsupportedGameError(f"player {player} has imperfect recall")
        parent_seq[group.sid] = histories.pop()
    leaf_seqs = [tree.own_history(leaf.nid, player) for leaf in tree.leaves()]
    return isets, parent_seq, leaf_seqs


def _assemble(tree: GameTree, player: int):
    isets, parent_seq, leaf_seqs = _player_sequences(tree, player)
    all_seqs = {()} | set(leaf_seqs)
    for group in isets:
        base = parent_seq[group.sid]
        for move in range(len(group.moves)):
            all_seqs.add(base + ((group.sid, move),))
    kept = {()} | set(leaf_seqs)
    continuations = {}
    for group in isets:
        continuations.setdefault(parent_seq[group.sid], []).append(group)

    kept_list = [()]
    for seq in leaf_seqs:  # depth-first discovery order, empty sequence first
        if seq and seq not in kept_list:
            kept_list.append(seq)
    index = {s: k for k, s in enumerate(kept_list)}

    expand_cache: dict = {}

    def expand(seq):
        if seq in expand_cache:
            return expand_cache[seq]
        if seq in index:
            result = {index[seq]: Fraction(1)}
        else:
            conts = continuations.get(seq)
            if not conts:
                raise AssertionError(f"dangling sequence {seq}")
            head = conts[0]
            result = {}
            for move in range(len(head.moves)):
                for k, c in expand(seq + ((head.sid, move),)).items():
                    result[k] = result.get(k, Fraction(0)) + c
        expand_cache[seq] = result
        return result

    rows = []
    rhs = []
    first = [Fraction(0)] * len(kept_list)
    first[0] = Fraction(1)
    rows.append(first)
    rhs.append(Fraction(1))

    def row_from(terms_pos, terms_neg):
        row = [Fraction(0)] * len(kept_list)
        for k, c in terms_pos.items():
            row[k] += c
        for k, c in terms_neg.items():
            row[k] -= c
        return row

    def children_sum(group):
        base = parent_seq[group.sid]
        total: dict = {}
        for move in range(len(group.moves)):
            for k, c in expand(base + ((group.sid, move),)).items():
                total[k] = total.get(k, Fraction(0)) + c
        return total

    for group in isets:
        base = parent_seq[group.sid]
        if base in index:
            rows.append(row_from(children_sum(group), expand(base)))
            rhs.append(Fraction(0))
        else:
            # substituted parent: the first continuation set is folded into
            # its ancestor equation; further parallel sets assert equality
            conts = continuations[base]
            if group is not conts[0]:
                rows.append(row_from(children_sum(group), children_sum(conts[0])))
                rhs.append(Fraction(0))

    for seq in all_seqs:
        if seq and seq not in index:
            expand(seq)  # make every sequence expandable for weight queries

    names = ["@" if not s else _seq_name(tree, s) for s in kept_list]
    iset_info = [(g.sid, parent_seq[g.sid], len(g.moves)) for g in isets]
    return kept_list, (rows, rhs), iset_info, names, expand_cache


def _seq_name(tree: GameTree, seq) -> str:
    return "".join(tree.isets[sid].moves[move] for sid, move in seq)


def build_sequence_form(tree: GameTree) -> SequenceForm:
    personal = tree.personal_players()
    if any(p > 2 for p in personal):
        raise UnsupportedGameError("sequence form supports two personal players")
    tree.validate_for_solving()
    seqs1, cons1, isets1, names1, expand1 = _assemble(tree, 1)
    seqs2, cons2, isets2, names2, expand2 = _assemble(tree, 2)
    index1 = {s: k for k, s in enumerate(seqs1)}
    index2 = {s: k for k, s in enumerate(seqs2)}
    payoff1: dict = {}
    payoff2: dict = {}

    def collect(nid, weight, s1, s2):
        node = tree.nodes[nid]
        if node.is_leaf:
            key = (index1[s1], index2[s2])
            pay = node.payoffs
            payoff1[key] = payoff1.get(key, Fraction(0)) + weight * pay[0]
            p2 = pay[1] if len(pay) > 1 else Fraction(0)
            payoff2[key] = payoff2.get(key, Fraction(0)) + weight * p2
            return
        if node.owner == CHANCE:
            for prob, child in zip(node.probs, node.children):
                if prob:
                    collect(child, weight * prob, s1, s2)
            return
        for move, child in enumerate(node.children):
            step = ((node.iset, move),)
            if node.owner == 1:
                collect(child, weight, s1 + step, s2)
            else:
                collect(child, weight, s1, s2 + step)

    collect(tree.root, Fraction(1), (), ())
    return SequenceForm(
        seqs1=seqs1,
        seqs2=seqs2,
        payoff1=dict(sorted(payoff1.items())),
        payoff2=dict(sorted(payoff2.items())),
        cons1=cons1,
        cons2=cons2,
        isets1=isets1,
        isets2=isets2,
        names1=names1,
        names2=names2,
        expand1=expand1,
        expand2=expand2,
    )


def sequence_form_of_game(game: BimatrixGame) -> SequenceForm:
    """A bimatrix game as a one-information-set sequence form."""
    seqs1 = [()] + [((0, i),) for i in range(game.m)]
    seqs2 = [()] + [((0, j),) for j in range(game.n)]
    payoff1 = {}
    payoff2 = {}
    for i in range(game.m):
        for j in range(game.n):
            payoff1[(i + 1, j + 1)] = game.a[i][j]
            payoff2[(i + 1, j + 1)] = game.b[i][j]
    def cons(count):
        first = [Fraction(0)] * (count + 1)
        first[0] = Fraction(1)
        spread = [Fraction(-1)] + [Fraction(1)] * count
        return ([first, spread], [Fraction(1), Fraction(0)])
    expand1 = {s: {k: Fraction(1)} for k, s in enumerate(seqs1)}
    expand2 = {s: {k: Fraction(1)} for k, s in enumerate(seqs2)}
    return SequenceForm(
        seqs1=seqs1,
        seqs2=seqs2,
        payoff1=payoff1,
        payoff2=payoff2,
        cons1=cons(game.m),
        cons2=cons(game.n),
        isets1=[(0, (), game.m)],
        isets2=[(0, (), game.n)],
        names1=["@"] + list(game.row_names),
        names2=["@"] + list(game.col_names),
        expand1=expand1,
        expand2=expand2,
    )


def realization_to_behavior(sf: SequenceForm, plan: RealizationPlan) -> BehaviorStrategy:
    """Local move probability = weight(sequence+move) / weight(sequence).

    Information sets of weight zero get the uniform local distribution.
    """
    isets = sf.isets1 if plan.player == 1 else sf.isets2
    local = {}
    for sid, base, moves in isets:
        total = sf.weight_of(plan, base)
        if total == 0:
            local[sid] = tuple(Fraction(1, moves) for _ in range(moves))
        else:
            local[sid] = tuple(
                sf.weight_of(plan, base + ((sid, m),)) / total for m in range(moves)
            )
    return BehaviorStrategy(plan.player, local)


def behavior_to_realization(sf: SequenceForm, beh: BehaviorStrategy) -> RealizationPlan:
    """Weight of a kept sequence = product of its local move probabilities."""
    seqs = sf.seqs(beh.player)
    weights = []
    for seq in seqs:
        w = Fraction(1)
        for sid, move in seq:
            w *= beh.local[sid][move]
        weights.append(w)
    return RealizationPlan(beh.player, tuple(weights))


def uniform_behavior(sf: SequenceForm, player: int) -> BehaviorStrategy:
    isets = sf.isets1 if player == 1 else sf.isets2
    return BehaviorStrategy(
        player, {sid: tuple(Fraction(1, k) for _ in range(k)) for sid, _, k in isets}
    )


def render_sequence_form(sf: SequenceForm) -> str:
    """Aligned text: the sparse payoff table plus both constraint systems."""
    lines = []
    col_width = max(len(n) for n in sf.names2 + sf.names1) + 1
    header = " " * col_width + "".join(n.rjust(col_width) for n in sf.names2)
    lines.append("Sequence form payoffs (player 1 / player 2):")
    lines.append(header)
    for i, name in enumerate(sf.names1):
        cells = []
        for j in range(len(sf.names2)):
            if (i, j) in sf.payoff1:
                cells.append(f"{sf.payoff1[(i, j)]}/{sf.payoff2[(i, j)]}".rjust(col_width))
            else:
                cells.append(".".rjust(col_width))
        lines.append(name.rjust(col_width) + "".join(cells))
    for player in (1, 2):
        rows, rhs = sf.constraints(player)
        names = sf.names1 if player == 1 else sf.names2
        lines.append(f"Constraints player {player}:")
        for row, b in zip(rows, rhs):
            terms = []
            for c, name in zip(row, names):
                if c == 0:
                    continue
                if c == 1:
                    terms.append(f"+ y[{name}]")
                elif c == -1:
                    terms.append(f"- y[{name}]")
                else:
                    terms.append(f"+ {c}*y[{name}]")
            text = " ".join(terms).lstrip("+ ")
            lines.append(f"  {text} = {b}")
    return "\n".join(lines)
