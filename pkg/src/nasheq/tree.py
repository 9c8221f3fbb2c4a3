"""Extensive-form game trees: staged editing, information sets, strategies.

Nodes live in an arena with identities that are stable across edits, so a
UI can keep references while the tree changes.  Information sets own the
move labels; the k-th child of every member is reached by the set's k-th
move.  Chance nodes carry probabilities on their outgoing edges instead of
move names.

Editing operations restore the tree invariants they touch and re-assign
default move names (upper-case letters for player 1, lower-case for player
2, breadth-first) to every information set the user has not renamed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EditError, UnsupportedGameError
from .rational import rational
from .strategic import BimatrixGame, MixedStrategy, default_names, new_game

CHANCE = "chance"


@dataclass
class Node:
    nid: int
    parent: int | None = None
    owner: object = None  # 1-based player number, CHANCE, or None
    children: list[int] = field(default_factory=list)
    probs: list[Fraction] | None = None
    payoffs: list[Fraction] | None = None
    iset: int | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class InformationSet:
    sid: int
    player: int
    members: list[int]
    moves: list[str]
    custom_names: bool = False


@dataclass(frozen=True)
class ReducedStrategy:
    """Move choice per own information set; None where unreachable ("*")."""

    player: int
    assignment: tuple  # move index or None, aligned with bfs information sets


class GameTree:
    def __init__(self, players=("1", "2")):
        self.players: list[str] = list(players)
        self.nodes: dict[int, Node] = {}
        self.isets: dict[int, InformationSet] = {}
        self.settings: dict[str, str] = {}
        self._next_node = 0
        self._next_iset = 0
        self.root = self._new_node(None).nid

    @classmethod
    def starting_tree(cls, players=("1", "2")) -> "GameTree":
        """The editor's initial shape: a root with two leaf children."""
        tree = cls(players)
        tree.add_children(tree.root, 2)
        return tree

    # -- arena ------------------------------------------------------------

    def _new_node(self, parent) -> Node:
        node = Node(nid=self._next_node, parent=parent)
        node.payoffs = [Fraction(0)] * len(self.players)
        self._next_node += 1
        self.nodes[node.nid] = node
        return node

    def node(self, nid: int) -> Node:
        try:
            return self.nodes[nid]
        except KeyError:
            raise EditError(f"no node with id {nid}") from None

    def iset(self, sid: int) -> InformationSet:
        try:
            return self.isets[sid]
        except KeyError:
            raise EditError(f"no information set with id {sid}") from None

    # -- traversal ----------------------------------------------------------

    def bfs_nodes(self):
        queue = [self.root]
        while queue:
            nid = queue.pop(0)
            yield self.nodes[nid]
            queue.extend(self.nodes[nid].children)

    def leaves(self):
        """Leaves in left-to-right order (depth-first by child order)."""
        out = []
        stack = [self.root]
        while stack:
            node = self.nodes[stack.pop()]
            if node.is_leaf:
                out.append(node)
            else:
                stack.extend(reversed(node.children))
        return out

    def player_isets(self, player: int):
        """The player's information sets in breadth-first first-visit order."""
        seen = []
        for node in self.bfs_nodes():
            if node.iset is not None and node.iset not in seen:
                if self.isets[node.iset].player == player:
                    seen.append(node.iset)
        return [self.isets[sid] for sid in seen]

    def subtree_ids(self, nid: int):
        out = []
        stack = [nid]
        while stack:
            cur = stack.pop()
            out.append(cur)
            stack.extend(self.nodes[cur].children)
        return out

    # -- editing ------------------------------------------------------------

    def add_children(self, nid: int, count: int) -> list[int]:
        node = self.node(nid)
        if count < 1:
            raise EditError("must add at least one child")
        if not node.is_leaf:
            raise EditError("add_children applies to leaves; use add_child")
        node.payoffs = None
        new = []
        for _ in range(count):
            child = self._new_node(nid)
            node.children.append(child.nid)
            new.append(child.nid)
        self._refresh()
        return new

    def add_child(self, nid: int) -> int:
        node = self.node(nid)
        if node.is_leaf:
            raise EditError("add_child applies to nonterminal nodes")
        if node.iset is not None and len(self.isets[node.iset].members) > 1:
            raise EditError("cannot change arity inside a merged information set")
        child = self._new_node(nid)
        node.children.append(child.nid)
        if node.owner == CHANCE:
            k = len(node.children)
            node.probs = [Fraction(1, k)] * k
        elif node.iset is not None:
            self.isets[node.iset].moves.append("")
        self._refresh()
        return child.nid

    def delete_subtree(self, nid: int) -> None:
        if nid == self.root:
            raise EditError("cannot delete the root")
        node = self.node(nid)
        parent = self.nodes[node.parent]
        idx = parent.children.index(nid)
        parent.children.pop(idx)
        if parent.owner == CHANCE and parent.probs:
            parent.probs.pop(idx)
            total = sum(parent.probs, Fraction(0))
            if parent.children:
                if total > 0:
                    parent.probs = [p / total for p in parent.probs]
                else:
                    k = len(parent.children)
                    parent.probs = [Fraction(1, k)] * k
        elif parent.iset is not None:
            kept = self.isets[parent.iset]
            if len(kept.members) > 1:
                raise EditError("cannot change arity inside a merged information set")
            kept.moves.pop(idx)
        for gone in self.subtree_ids(nid):
            self._detach_from_iset(gone)
            del self.nodes[gone]
        if parent.is_leaf:
            self._make_leaf(parent)
        self._refresh()

    def assign_owner(self, nid: int, owner) -> None:
        node = self.node(nid)
        if node.is_leaf:
            raise EditError("leaves have no owner")
        if owner == CHANCE:
            self._detach_from_iset(nid)
            node.owner = CHANCE
            k = len(node.children)
            node.probs = [Fraction(1, k)] * k
        else:
            if not isinstance(owner, int) or not 1 <= owner <= len(self.players):
                raise EditError(f"unknown player {owner!r}")
            self._detach_from_iset(nid)
            node.owner = owner
            node.probs = None
            self._singleton_iset(nid, owner)
        self._refresh()

    def merge_infosets(self, sid1: int, sid2: int) -> int:
        a, b = self.iset(sid1), self.iset(sid2)
        if sid1 == sid2:
            raise EditError("cannot merge an information set with itself")
        if a.player != b.player:
            raise EditError("cannot merge information sets of different players")
        if len(a.moves) != len(b.moves):
            raise EditError("cannot merge information sets with different move counts")
        a.members.extend(b.members)
        for nid in b.members:
            self.nodes[nid].iset = sid1
        del self.isets[sid2]
        self._refresh()
        return sid1

    def dissolve_infoset(self, sid: int) -> list[int]:
        group = self.iset(sid)
        if len(group.members) < 2:
            return [sid]
        new_ids = []
        for nid in list(group.members):
            fresh = InformationSet(
                sid=self._next_iset,
                player=group.player,
                members=[nid],
                moves=list(group.moves),
                custom_names=group.custom_names,
            )
            self._next_iset += 1
            self.isets[fresh.sid] = fresh
            self.nodes[nid].iset = fresh.sid
            new_ids.append(fresh.sid)
        del self.isets[sid]
        self._refresh()
        return new_ids

    def cut_infoset(self, sid: int, first_group) -> tuple[int, int]:
        group = self.iset(sid)
        chosen = [nid for nid in group.members if nid in set(first_group)]
        rest = [nid for nid in group.members if nid not in set(first_group)]
        if not chosen or not rest:
            raise EditError("cut must split the information set into two nonempty parts")
        fresh = InformationSet(
            sid=self._next_iset,
            player=group.player,
            members=rest,
            moves=list(group.moves),
            custom_names=group.custom_names,
        )
        self._next_iset += 1
        self.isets[fresh.sid] = fresh
        for nid in rest:
            self.nodes[nid].iset = fresh.sid
        group.members = chosen
        self._refresh()
        return sid, fresh.sid

    def set_move_names(self, player: int, labels) -> None:
        """Rename all of a player's moves at once, information set by set."""
        labels = list(labels)
        isets = self.player_isets(player)
        needed = sum(len(s.moves) for s in isets)
        if len(labels) != needed:
            raise EditError(f"player {player} needs {needed} move names, got {len(labels)}")
        cursor = 0
        for group in isets:
            k = len(group.moves)
            group.moves = labels[cursor : cursor + k]
            group.custom_names = True
            cursor += k

    def set_chance_prob(self, nid: int, child_index: int, p) -> None:
        node = self.node(nid)
        if node.owner != CHANCE:
            raise EditError("set_chance_prob applies to chance nodes")
        p = rational(p)
        if p < 0 or p > 1:
            raise EditError("chance probability must lie in [0, 1]")
        k = len(node.children)
        if not 0 <= child_index < k:
            raise EditError("no such child")
        node.probs[child_index] = p
        others = [i for i in range(k) if i != child_index]
        remainder = Fraction(1) - p
        if len(others) == 1:
            node.probs[others[0]] = remainder
        elif others:
            total = sum((node.probs[i] for i in others), Fraction(0))
            if total > 0:
                for i in others:
                    node.probs[i] = node.probs[i] / total * remainder
            else:
                for i in others:
                    node.probs[i] = remainder / len(others)

    def set_payoffs(self, player: int, values) -> None:
        leaves = self.leaves()
        values = [rational(v) for v in values]
        if len(values) != len(leaves):
            raise EditError(f"expected {len(leaves)} payoffs, got {len(values)}")
        for leaf, v in zip(leaves, values):
            leaf.payoffs[player - 1] = v

    def set_payoff(self, nid: int, player: int, value) -> None:
        node = self.node(nid)
        if not node.is_leaf:
            raise EditError("payoffs live on leaves")
        node.payoffs[player - 1] = rational(value)

    def default_payoffs(self) -> None:
        """Number the leaves 0, 1, 2, ... for every player, left to right."""
        for k, leaf in enumerate(self.leaves()):
            leaf.payoffs = [Fraction(k)] * len(self.players)

    def rename_player(self, player: int, name: str) -> None:
        self.players[player - 1] = name

    # -- internal edit helpers ----------------------------------------------

    def _make_leaf(self, node: Node) -> None:
        self._detach_from_iset(node.nid)
        node.owner = None
        node.probs = None
        node.payoffs = [Fraction(0)] * len(self.players)

    def _detach_from_iset(self, nid: int) -> None:
        node = self.nodes[nid]
        if node.iset is None:
            return
        group = self.isets[node.iset]
        group.members.remove(nid)
        if not group.members:
            del self.isets[group.sid]
        node.iset = None

    def _singleton_iset(self, nid: int, player: int) -> None:
        node = self.nodes[nid]
        fresh = InformationSet(
            sid=self._next_iset,
            player=player,
            members=[nid],
            moves=[""] * len(node.children),
        )
        self._next_iset += 1
        self.isets[fresh.sid] = fresh
        node.iset = fresh.sid

    def _refresh(self) -> None:
        """Re-assign default move names breadth-first per player."""
        for player in range(1, len(self.players) + 1):
            isets = self.player_isets(player)
            total = sum(len(s.moves) for s in isets)
            pool = default_names(max(total, 1), upper=(player == 1))
            cursor = 0
            for group in isets:
                k = len(group.moves)
                if not group.custom_names:
                    group.moves = list(pool[cursor : cursor + k])
                cursor += k

    # -- validation -----------------------------------------------------------

    def personal_players(self):
        used = set()
        for node in self.nodes.values():
            if isinstance(node.owner, int):
                used.add(node.owner)
        return sorted(used)

    def validate_for_solving(self) -> None:
        for node in self.nodes.values():
            if node.is_leaf:
                continue
            if node.owner is None:
                raise EditError(f"node {node.nid} has no assigned player")
            if node.owner == CHANCE:
                if any(p < 0 for p in node.probs):
                    raise EditError("negative chance probability")
                if sum(node.probs, Fraction(0)) != 1:
                    raise EditError("chance probabilities must sum to one")
        for group in self.isets.values():
            arity = {len(self.nodes[nid].children) for nid in group.members}
            if len(arity) != 1:
                raise EditError("information set members differ in child count")

    # -- strategies -------------------------------------------------------------

    def own_history(self, nid: int, player: int):
        """The (information set, move index) pairs of the player above a node."""
        track = []
        node = self.nodes[nid]
        while node.parent is not None:
            parent = self.nodes[node.parent]
            if isinstance(parent.owner, int) and parent.owner == player:
                track.append((parent.iset, parent.children.index(node.nid)))
            node = parent
        track.reverse()
        return tuple(track)

    def check_perfect_recall(self, player: int) -> bool:
        """No member of an information set distinguishes own past play."""
        for group in self.player_isets(player):
            histories = {self.own_history(nid, player) for nid in group.members}
            if len(histories) > 1:
                return False
        return True

    def full_strategy_count(self, player: int) -> int:
        count = 1
        for group in self.player_isets(player):
            count *= len(group.moves)
        return count

    def reduced_strategies(self, player: int) -> list[ReducedStrategy]:
        if not self.check_perfect_recall(player):
            raise UnsupportedGameError(f"player {player} has imperfect recall")
        isets = self.player_isets(player)
        index_of = {group.sid: k for k, group in enumerate(isets)}

        def reachable(group, assignment):
            for nid in group.members:
                consistent = True
                for sid, move in self.own_history(nid, player):
                    if assignment[index_of[sid]] != move:
                        consistent = False
                        break
                if consistent:
                    return True
            return False

        results = []
        assignment = [None] * len(isets)

        def descend(k):
            if k == len(isets):
                results.append(ReducedStrategy(player, tuple(assignment)))
                return
            if reachable(isets[k], assignment):
                for move in range(len(isets[k].moves)):
                    assignment[k] = move
                    descend(k + 1)
                assignment[k] = None
            else:
                assignment[k] = None
                descend(k + 1)

        descend(0)
        return results

    def strategy_name(self, strategy: ReducedStrategy) -> str:
        isets = self.player_isets(strategy.player)
        parts = []
        for group, move in zip(isets, strategy.assignment):
            parts.append("*" if move is None else group.moves[move])
        return "".join(parts)

    def to_strategic_form(self) -> BimatrixGame:
        """Reduced strategic form with exact chance-expected payoffs."""
        personal = self.personal_players()
        if any(p > 2 for p in personal):
            raise UnsupportedGameError("strategic form supports two personal players")
        self.validate_for_solving()
        for player in (1, 2):
            if not self.check_perfect_recall(player):
                raise UnsupportedGameError(f"player {player} has imperfect recall")
        rows = self.reduced_strategies(1)
        cols = self.reduced_strategies(2)
        maps = []
        for player, strategies in ((1, rows), (2, cols)):
            index_of = {g.sid: k for k, g in enumerate(self.player_isets(player))}
            maps.append((index_of, strategies))

        def walk(nid, choice1, choice2):
            node = self.nodes[nid]
            if node.is_leaf:
                pay = node.payoffs
                return pay[0], (pay[1] if len(pay) > 1 else Fraction(0))
            if node.owner == CHANCE:
                total1 = total2 = Fraction(0)
                for prob, child in zip(node.probs, node.children):
                    if prob:
                        a, b = walk(child, choice1, choice2)
                        total1 += prob * a
                        total2 += prob * b
                return total1, total2
            index_of, _ = maps[node.owner - 1]
            choice = choice1 if node.owner == 1 else choice2
            move = choice[index_of[node.iset]]
            assert move is not None, "reached an unspecified information set"
            return walk(node.children[move], choice1, choice2)

        a = []
        b = []
        for r in rows:
            row_a = []
            row_b = []
            for c in cols:
                pa, pb = walk(self.root, r.assignment, c.assignment)
                row_a.append(pa)
                row_b.append(pb)
            a.append(row_a)
            b.append(row_b)
        return new_game(
            a,
            b,
            [self.strategy_name(r) for r in rows],
            [self.strategy_name(c) for c in cols],
        )

    def mixed_from_behavior(self, player: int, behavior) -> MixedStrategy:
        """Kuhn's mapping: product of local probabilities over specified sets.

        ``behavior`` maps information-set id to a tuple of move probabilities.
        """
        strategies = self.reduced_strategies(player)
        isets = self.player_isets(player)
        probs = []
        for strat in strategies:
            p = Fraction(1)
            for group, move in zip(isets, strat.assignment):
                if move is not None:
                    p *= behavior[group.sid][move]
            probs.append(p)
        return MixedStrategy(player, tuple(probs))

    # -- structural identity -----------------------------------------------------

    def signature(self):
        """Canonical nested-tuple form; equal signatures = same logical tree."""
        iset_key = {}
        for player in range(1, len(self.players) + 1):
            for k, group in enumerate(self.player_isets(player)):
                iset_key[group.sid] = (player, k)

        def rec(nid):
            node = self.nodes[nid]
            if node.is_leaf:
                return ("leaf", tuple(node.payoffs))
            if node.owner == CHANCE:
                return (
                    "chance",
                    tuple(node.probs),
                    tuple(rec(c) for c in node.children),
                )
            moves = tuple(self.isets[node.iset].moves) if node.iset is not None else ()
            return (
                "node",
                node.owner,
                iset_key.get(node.iset),
                moves,
                tuple(rec(c) for c in node.children),
            )

        return (
            tuple(self.players),
            tuple(sorted(self.settings.items())),
            rec(self.root),
        )
