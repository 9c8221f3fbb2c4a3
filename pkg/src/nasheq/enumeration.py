"""All extreme equilibria of a bimatrix game via the one-sided face method.

Only the vertices of P are generated; for each vertex its set L of missing
labels identifies the face Q(L) of the other polyhedron, and every vertex of
a nonempty Q(L) completes an extreme equilibrium.  Strategy identifiers are
assigned per player in order of first appearance, with exactly equal
probability vectors sharing an identifier.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .polyhedra import (
    HPolyhedron,
    LabeledVertex,
    all_strategy_labels,
    build_best_response_polyhedra,
    enumerate_vertices,
)
from .strategic import BimatrixGame, MixedStrategy, expected_payoffs


@dataclass(frozen=True)
class ExtremeEquilibrium:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    u: Fraction  # expected payoff to player 1
    v: Fraction  # expected payoff to player 2
    idx1: int = 0
    idx2: int = 0

    def mixed(self):
        return MixedStrategy(1, self.x), MixedStrategy(2, self.y)


def face_of(poly: HPolyhedron, labels) -> HPolyhedron:
    """The face of ``poly`` where every constraint tagged in ``labels`` is tight."""
    wanted = set(labels)
    ineqs = []
    eqs = list(poly.eqs)
    for row in poly.ineqs:
        if row.label in wanted:
            eqs.append((row.coeffs, row.rhs))
        ineqs.append(row)
    for v in range(poly.n_vars):
        if poly.var_labels[v] in wanted:
            coeffs = tuple(
                Fraction(1) if w == v else Fraction(0) for w in range(poly.n_vars)
            )
            eqs.append((coeffs, Fraction(0)))
    return HPolyhedron(
        n_vars=poly.n_vars,
        ineqs=ineqs,
        eqs=eqs,
        free_vars=poly.free_vars,
        var_labels=poly.var_labels,
        objective=poly.objective,
    )


def face_vertices(poly: HPolyhedron, labels, should_stop=None):
    """Vertices of the face of ``poly`` carrying all of ``labels`` tight.

    Labels of the returned vertices are computed against the full polyhedron,
    so degenerate face vertices keep their extra labels.
    """
    out = []
    for vertex in enumerate_vertices(face_of(poly, labels), should_stop=should_stop):
        out.append(replace(vertex, labels=poly.labels_at(vertex.coords)))
    return out


def enumerate_extreme_equilibria(game: BimatrixGame, should_stop=None):
    """All completely labeled vertex pairs of P x Q, indexed and ordered.

    Output is sorted by (idx1, idx2) where identifiers follow first discovery;
    the order of discovery itself walks the reverse-search tree of P.
    """
    p, q = build_best_response_polyhedra(game)
    labels = all_strategy_labels(game)
    m = game.m
    found = []
    seen = set()
    for px in enumerate_vertices(p, should_stop=should_stop):
        missing = labels - px.labels
        x = px.coords[:m]
        v = px.coords[m]
        for qy in face_vertices(q, missing, should_stop=should_stop):
            y = qy.coords[: game.n]
            u = qy.coords[game.n]
            key = (x, y)
            if key in seen:
                continue
            seen.add(key)
            found.append(ExtremeEquilibrium(x=x, y=y, u=u, v=v))
    return _index_and_sort(found)


def _index_and_sort(eqs):
    ids1: dict = {}
    ids2: dict = {}
    indexed = []
    for ee in eqs:
        i1 = ids1.setdefault(ee.x, len(ids1) + 1)
        i2 = ids2.setdefault(ee.y, len(ids2) + 1)
        indexed.append(replace(ee, idx1=i1, idx2=i2))
    indexed.sort(key=lambda e: (e.idx1, e.idx2))
    return indexed


def check_complementarity(game: BimatrixGame, ee: ExtremeEquilibrium) -> bool:
    """Exact slack complementarity x_i r_i = 0, y_j s_j = 0 (condition (3))."""
    for i in range(game.m):
        r_i = ee.u - sum(
            (game.a[i][j] * ee.y[j] for j in range(game.n)), Fraction(0)
        )
        if r_i < 0 or ee.x[i] * r_i != 0:
            return False
    for j in range(game.n):
        s_j = ee.v - sum(
            (game.b[i][j] * ee.x[i] for i in range(game.m)), Fraction(0)
        )
        if s_j < 0 or ee.y[j] * s_j != 0:
            return False
    u, v = expected_payoffs(game, MixedStrategy(1, ee.x), MixedStrategy(2, ee.y))
    return u == ee.u and v == ee.v
