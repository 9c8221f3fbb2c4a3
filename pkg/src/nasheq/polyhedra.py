"""Labeled H-polyhedra and lexicographic reverse-search vertex enumeration.

A polyhedron is given by inequality rows ``c.x <= b`` (optionally labeled),
equality rows, and per-variable sign information (nonnegative variables may
also carry labels; free variables never do).  For a bimatrix game the two
best response polyhedra are built here with strategy labels wired to the
tight-inequality/zero-variable convention.

Enumeration works on a slack-form dictionary: equalities are eliminated
exactly, the free coordinates are swept into the basis, and reverse search
walks the tree of lexicographically positive bases induced by Bland's
least-index entering rule and the lexicographic leaving rule (perturbation
by the columns of the basis inverse).  The search is rooted at the basis
reached by a phase-1 feasibility step followed, when the polyhedron carries
an objective, by a phase-2 simplex minimizing it.  A degenerate vertex is
reported only from its lexicographically minimal basis, so every vertex
streams out exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ComputationCancelled, PolyhedronError
from .lp import feasible_point
from .strategic import BimatrixGame
from .tableau import IntegerTableau, integerize_rows


@dataclass(frozen=True)
class Inequality:
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    label: object = None


@dataclass
class HPolyhedron:
    """c.x <= b rows plus equalities over partially sign-restricted variables."""

    n_vars: int
    ineqs: list[Inequality]
    eqs: list[tuple[tuple[Fraction, ...], Fraction]] = field(default_factory=list)
    free_vars: frozenset[int] = frozenset()
    var_labels: tuple = ()
    objective: tuple[Fraction, ...] | None = None  # minimized to pick the root vertex

    def __post_init__(self):
        if not self.var_labels:
            self.var_labels = tuple(None for _ in range(self.n_vars))

    def labels_at(self, coords) -> frozenset:
        """Labels of a point: tight labeled rows plus zero labeled variables."""
        found = set()
        for row in self.ineqs:
            if row.label is None:
                continue
            value = sum((c * x for c, x in zip(row.coeffs, coords)), Fraction(0))
            if value == row.rhs:
                found.add(row.label)
        for v in range(self.n_vars):
            if v in self.free_vars or self.var_labels[v] is None:
                continue
            if coords[v] == 0:
                found.add(self.var_labels[v])
        return frozenset(found)

    def contains(self, coords) -> bool:
        for row in self.ineqs:
            if sum((c * x for c, x in zip(row.coeffs, coords)), Fraction(0)) > row.rhs:
                return False
        for coeffs, rhs in self.eqs:
            if sum((c * x for c, x in zip(coeffs, coords)), Fraction(0)) != rhs:
                return False
        return all(
            coords[v] >= 0 for v in range(self.n_vars) if v not in self.free_vars
        )


@dataclass(frozen=True)
class LabeledVertex:
    coords: tuple[Fraction, ...]
    labels: frozenset
    basis: tuple[int, ...]  # tight reduced-system rows defining the vertex


def _eliminate_equalities(poly: HPolyhedron):
    """Solve the equality system exactly: x = x0 + N t over parameters t.

    Returns (x0, columns, params) where columns[k] is the coefficient vector
    of parameter k in x, or None when the system is inconsistent.
    """
    n = poly.n_vars
    rows = [list(coeffs) + [rhs] for coeffs, rhs in poly.eqs]
    pivots = []  # (row, col)
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, len(rows)) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[row], rows[sel] = rows[sel], rows[row]
        inv = Fraction(1) / rows[row][col]
        rows[row] = [v * inv for v in rows[row]]
        for r in range(len(rows)):
            if r != row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [u - f * v for u, v in zip(rows[r], rows[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, len(rows)):
        if rows[r][n] != 0:
            return None
    pivot_cols = {c for _, c in pivots}
    params = [c for c in range(n) if c not in pivot_cols]
    x0 = [Fraction(0)] * n
    columns = [[Fraction(0)] * n for _ in params]
    for r, c in pivots:
        x0[c] = rows[r][n]
    for k, p in enumerate(params):
        columns[k][p] = Fraction(1)
        for r, c in pivots:
            columns[k][c] = -rows[r][p]
    return x0, columns, params


def _reduced_rows(poly: HPolyhedron, x0, columns):
    """Inequalities of the reduced parameter space; None when clearly empty."""
    d = len(columns)
    rows = []
    rhs = []

    def add(coeffs, bound):
        c_t = [
            sum((coeffs[v] * columns[k][v] for v in range(poly.n_vars)), Fraction(0))
            for k in range(d)
        ]
        b_t = bound - sum(
            (coeffs[v] * x0[v] for v in range(poly.n_vars)), Fraction(0)
        )
        if all(v == 0 for v in c_t):
            return b_t >= 0
        rows.append(c_t)
        rhs.append(b_t)
        return True

    for row in poly.ineqs:
        if not add(row.coeffs, row.rhs):
            return None
    for v in range(poly.n_vars):
        if v in poly.free_vars:
            continue
        coeffs = [Fraction(0)] * poly.n_vars
        coeffs[v] = Fraction(-1)
        if not add(coeffs, Fraction(0)):
            return None
    return rows, rhs


class _Dictionary:
    """Slack-form tableau over the reduced parameters with lex bookkeeping."""

    def __init__(self, rows, rhs, d):
        self.d = d
        self.k = len(rows)
        full = [list(r) + [1 if s == i else 0 for s in range(self.k)] for i, r in enumerate(rows)]
        self.t = IntegerTableau(full, rhs, basis=[d + i for i in range(self.k)])
        self.tie_cols = tuple(d + i for i in range(self.k))  # basis-inverse columns

    def slack_rows(self):
        return [r for r in range(self.k) if self.t.basis[r] >= self.d]

    def nonbasic_slacks(self):
        basic = set(self.t.basis)
        return [v for v in range(self.d, self.d + self.k) if v not in basic]

    def lex_feasible(self) -> bool:
        return all(self.t.lex_positive_row(r, self.tie_cols) for r in self.slack_rows())


def enumerate_vertices(poly: HPolyhedron, should_stop=None):
    """Stream every vertex of a pointed polyhedron exactly once.

    Infeasible systems yield nothing; an unbounded line raises
    PolyhedronError since the polyhedron is then not pointed.
    """
    elim = _eliminate_equalities(poly)
    if elim is None:
        return
    x0, columns, _params = elim
    d = len(columns)

    def rebuild(t_values):
        coords = list(x0)
        for k in range(d):
            tv = t_values[k]
            if tv:
                col = columns[k]
                for v in range(poly.n_vars):
                    coords[v] += tv * col[v]
        return tuple(coords)

    if d == 0:
        point = rebuild([])
        if poly.contains(point):
            yield LabeledVertex(point, poly.labels_at(point), ())
        return

    reduced = _reduced_rows(poly, x0, columns)
    if reduced is None:
        return
    rows, rhs = reduced
    if not rows:
        raise PolyhedronError("polyhedron is not pointed (no constraints bind)")

    start = feasible_point(rows, rhs, d)
    if start is None:
        return
    shifted_rhs = [
        b - sum((c * s for c, s in zip(row, start)), Fraction(0))
        for row, b in zip(rows, rhs)
    ]
    assert all(b >= 0 for b in shifted_rhs)
    int_rows, int_rhs = integerize_rows(rows, shifted_rhs)

    dic = _Dictionary(int_rows, int_rhs, d)
    t = dic.t
    flips = [Fraction(1)] * d

    # sweep the free parameters into the basis, lex-preserving
    for j in range(d):
        row = t.lex_ratio_row(j, dic.slack_rows(), dic.tie_cols)
        if row is None:
            for r in range(t.n_rows):
                t.m[r][j] = -t.m[r][j]
            flips[j] = Fraction(-1)
            row = t.lex_ratio_row(j, dic.slack_rows(), dic.tie_cols)
        if row is None:
            raise PolyhedronError("polyhedron is not pointed (free direction)")
        t.pivot(row, j)

    if poly.objective is not None:
        obj_t = {}
        for k in range(d):
            coeff = sum(
                (poly.objective[v] * columns[k][v] for v in range(poly.n_vars)),
                Fraction(0),
            ) * flips[k]
            if coeff:
                obj_t[k] = coeff
        _phase2(dic, obj_t, should_stop)

    def vertex_from_basis():
        t_values = [flips[j] * t.value_of(j) + start[j] for j in range(d)]
        coords = rebuild(t_values)
        basis = tuple(sorted(v - d for v in dic.nonbasic_slacks()))
        return LabeledVertex(coords, poly.labels_at(coords), basis)

    yield from _reverse_search(dic, vertex_from_basis, should_stop)


def _phase2(dic: _Dictionary, cost, should_stop):
    t = dic.t
    guard = 0
    while True:
        if should_stop is not None and should_stop():
            raise ComputationCancelled("vertex enumeration interrupted")
        entering = None
        for j in dic.nonbasic_slacks():
            rc = Fraction(cost.get(j, 0)) * t.scale
            for r in range(t.n_rows):
                cb = cost.get(t.basis[r])
                if cb:
                    rc -= cb * t.m[r][j]
            if rc < 0:
                entering = j
                break
        if entering is None:
            return
        row = t.lex_ratio_row(entering, dic.slack_rows(), dic.tie_cols)
        if row is None:
            raise PolyhedronError("root objective is unbounded on the polyhedron")
        t.pivot(row, entering)
        guard += 1
        if guard > 1_000_000:
            raise PolyhedronError("phase-2 simplex did not terminate")


def _reverse_search(dic: _Dictionary, vertex_from_basis, should_stop):
    t = dic.t
    root_nonbasic = set(dic.nonbasic_slacks())
    cost = {v: 1 for v in root_nonbasic}

    def reduced_cost(j):
        rc = (1 if j in root_nonbasic else 0) * t.scale
        for r in range(t.n_rows):
            if t.basis[r] in root_nonbasic:
                rc -= t.m[r][j]
        return rc

    def forward_move():
        """The simplex move the pivot rule would take from the current basis."""
        entering = None
        for j in sorted(dic.nonbasic_slacks()):
            if reduced_cost(j) < 0:
                entering = j
                break
        if entering is None:
            return None
        row = t.lex_ratio_row(entering, dic.slack_rows(), dic.tie_cols)
        if row is None:  # cannot happen: objective bounded below by 0
            raise PolyhedronError("unbounded reverse-search objective")
        return entering, row

    def is_lexmin():
        nonbasic = sorted(dic.nonbasic_slacks())
        for r in dic.slack_rows():
            if t.rhs[r] != 0:
                continue
            b = t.basis[r]
            for nb in nonbasic:
                if nb >= b:
                    break
                if t.m[r][nb] != 0:
                    return False
        return True

    def candidates():
        pairs = []
        for nb in sorted(dic.nonbasic_slacks()):
            for r in sorted(dic.slack_rows()):
                pairs.append((nb, r))
        return pairs

    if is_lexmin():
        yield vertex_from_basis()

    stack = [[candidates(), 0, None]]  # per level: pairs, cursor, undo move
    while stack:
        if should_stop is not None and should_stop():
            raise ComputationCancelled("vertex enumeration interrupted")
        pairs, cursor, undo = stack[-1]
        if cursor >= len(pairs):
            stack.pop()
            if undo is not None:
                t.pivot(undo[1], undo[0])
            continue
        stack[-1][1] += 1
        nb, row = pairs[cursor]
        if t.m[row][nb] == 0:
            continue
        leaving = t.basis[row]
        t.pivot(row, nb)
        ok = dic.lex_feasible()
        if ok:
            move = forward_move()
            ok = move is not None and move[0] == leaving and move[1] == row
        if not ok:
            t.pivot(row, leaving)
            continue
        if is_lexmin():
            yield vertex_from_basis()
        stack.append([candidates(), 0, (leaving, row)])


# -- best response polyhedra ------------------------------------------------


def all_strategy_labels(game: BimatrixGame) -> frozenset:
    return frozenset(
        [(1, i) for i in range(game.m)] + [(2, j) for j in range(game.n)]
    )


def build_best_response_polyhedra(game: BimatrixGame):
    """The polyhedra P over (x, v) and Q over (y, u) with strategy labels.

    A row of P says strategy j of player 2 earns at most v against x and is
    labeled (2, j); coordinate x_i carries label (1, i) when zero.  Q mirrors
    this with the roles exchanged.  Both carry a minimize-the-bound objective
    used to root vertex enumeration deterministically.
    """
    m, n = game.m, game.n
    p_rows = []
    for j in range(n):
        coeffs = tuple(game.b[i][j] for i in range(m)) + (Fraction(-1),)
        p_rows.append(Inequality(coeffs, Fraction(0), (2, j)))
    p = HPolyhedron(
        n_vars=m + 1,
        ineqs=p_rows,
        eqs=[(tuple([Fraction(1)] * m + [Fraction(0)]), Fraction(1))],
        free_vars=frozenset({m}),
        var_labels=tuple([(1, i) for i in range(m)] + [None]),
        objective=tuple([Fraction(0)] * m + [Fraction(1)]),
    )
    q_rows = []
    for i in range(m):
        coeffs = tuple(game.a[i][j] for j in range(n)) + (Fraction(-1),)
        q_rows.append(Inequality(coeffs, Fraction(0), (1, i)))
    q = HPolyhedron(
        n_vars=n + 1,
        ineqs=q_rows,
        eqs=[(tuple([Fraction(1)] * n + [Fraction(0)]), Fraction(1))],
        free_vars=frozenset({n}),
        var_labels=tuple([(2, j) for j in range(n)] + [None]),
        objective=tuple([Fraction(0)] * n + [Fraction(1)]),
    )
    return p, q
