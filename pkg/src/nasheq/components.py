"""Equilibrium components: connected subgraphs and maximal bipartite cliques.

Extreme equilibria form the edges of a bipartite graph on the distinct
strategy identifiers of the two players.  Each connected component is one
topologically connected set of equilibria, described completely by its
maximal bicliques U x V: every pair in U x V is an extreme equilibrium and
any convex combination of U against any convex combination of V is Nash.

Bicliques are enumerated with Bron-Kerbosch (with pivoting) on the crossing
graph that joins all left-left and all right-right pairs, under which
maximal bicliques are exactly the maximal cliques touching both sides.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Component:
    edges: frozenset[tuple[int, int]]  # (idx1, idx2) extreme equilibria
    cliques: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def left(self):
        return tuple(sorted({i for i, _ in self.edges}))

    @property
    def right(self):
        return tuple(sorted({j for _, j in self.edges}))


def bron_kerbosch(adjacency):
    """Maximal cliques of an undirected graph given as {node: set(neighbors)}."""
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(adjacency[v] & p))
        for v in sorted(p - adjacency[pivot]):
            expand(r | {v}, p & adjacency[v], x & adjacency[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), set(adjacency), set())
    return cliques


def maximal_bicliques(edges):
    """All maximal bicliques (U, V) of a bipartite edge set {(i, j)}."""
    lefts = sorted({i for i, _ in edges})
    rights = sorted({j for _, j in edges})
    edge_set = set(edges)
    nodes = [("L", i) for i in lefts] + [("R", j) for j in rights]
    adjacency = {}
    for node in nodes:
        side, idx = node
        neigh = set()
        for other in nodes:
            if other == node:
                continue
            if other[0] == side:
                neigh.add(other)
            elif side == "L" and (idx, other[1]) in edge_set:
                neigh.add(other)
            elif side == "R" and (other[1], idx) in edge_set:
                neigh.add(other)
        adjacency[node] = neigh
    result = []
    for clique in bron_kerbosch(adjacency):
        u = tuple(sorted(idx for side, idx in clique if side == "L"))
        v = tuple(sorted(idx for side, idx in clique if side == "R"))
        if u and v:
            result.append((u, v))
    result.sort()
    return result


def maximal_cliques(component: Component):
    return list(component.cliques)


def connected_components(equilibria) -> list[Component]:
    """Partition extreme equilibria into graph-connected components.

    Components are ordered by their smallest (idx1, idx2) pair; cliques within
    a component are sorted lexicographically by (U, V).
    """
    edges = [(ee.idx1, ee.idx2) for ee in equilibria]
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i, j in edges:
        parent.setdefault(("L", i), ("L", i))
        parent.setdefault(("R", j), ("R", j))
        union(("L", i), ("R", j))
    groups: dict = {}
    for i, j in edges:
        groups.setdefault(find(("L", i)), []).append((i, j))
    comps = []
    for group_edges in groups.values():
        cliques = tuple(maximal_bicliques(group_edges))
        comps.append(Component(frozenset(group_edges), cliques))
    comps.sort(key=lambda c: min(c.edges))
    return comps
