"""Small exact linear-programming helpers over Fractions.

A plain two-phase simplex with Bland's rule: slow but exact and cycle-free,
which is all the callers need (feasibility probes, best-reply bases for the
tracing start, convex-hull membership in tests).  Problems are given in
standard form: min c.x subject to A x = b, x >= 0.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class LpResult:
    def __init__(self, status, x=None, basis=None, objective=None, duals=None):
        self.status = status
        self.x = x
        self.basis = basis
        self.objective = objective
        self.duals = duals


def _pivot(rows, rhs, basis, r, c):
    p = rows[r][c]
    inv = Fraction(1) / p
    rows[r] = [v * inv for v in rows[r]]
    rhs[r] = rhs[r] * inv
    for i in range(len(rows)):
        if i == r:
            continue
        f = rows[i][c]
        if f:
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            rhs[i] = rhs[i] - f * rhs[r]
    basis[r] = c


def _bland(rows, rhs, basis, cost):
    """Run simplex to optimality with Bland's rule.  Returns status."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    while True:
        # reduced costs via basic cost substitution
        y = [cost[basis[r]] for r in range(m)]
        entering = None
        for j in range(n):
            if j in basis:
                continue
            rc = cost[j] - sum(y[r] * rows[r][j] for r in range(m))
            if rc < 0:
                entering = j
                break
        if entering is None:
            return OPTIMAL
        leave = None
        best = None
        for r in range(m):
            a = rows[r][entering]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            return UNBOUNDED
        _pivot(rows, rhs, basis, leave, entering)


def solve_lp(c, a, b) -> LpResult:
    """min c.x  s.t.  a x = b, x >= 0, all Fractions.  Two-phase simplex."""
    m = len(a)
    n = len(c)
    rows = [[Fraction(v) for v in row] for row in a]
    rhs = [Fraction(v) for v in b]
    for r in range(m):
        if rhs[r] < 0:
            rows[r] = [-v for v in rows[r]]
            rhs[r] = -rhs[r]
    # phase 1: artificials n..n+m-1
    for r in range(m):
        rows[r] = rows[r] + [Fraction(1 if i == r else 0) for i in range(m)]
    basis = list(range(n, n + m))
    cost1 = [Fraction(0)] * n + [Fraction(1)] * m
    _bland(rows, rhs, basis, cost1)
    infeas = sum(rhs[r] for r in range(m) if basis[r] >= n)
    if infeas > 0:
        return LpResult(INFEASIBLE)
    # drive zero-level artificials out of the basis
    drop_rows = []
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if rows[r][j] != 0), None)
            if col is None:
                drop_rows.append(r)  # redundant constraint
            else:
                _pivot(rows, rhs, basis, r, col)
    if drop_rows:
        keep = [r for r in range(m) if r not in drop_rows]
        rows = [rows[r] for r in keep]
        rhs = [rhs[r] for r in keep]
        basis = [basis[r] for r in keep]
        m = len(rows)
    rows = [row[:n] for row in rows]
    cost2 = [Fraction(v) for v in c]
    status = _bland(rows, rhs, basis, cost2)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for r in range(m):
        x[basis[r]] = rhs[r]
    obj = sum(cost2[j] * x[j] for j in range(n))
    return LpResult(OPTIMAL, x=x, basis=sorted(basis), objective=obj)


def lp_duals(c, a, basis):
    """Dual vector y = c_B B^-1 for an optimal basis of min c.x, Ax=b.

    Solves y B = c_B exactly by Gaussian elimination.
    """
    m = len(a)
    cols = list(basis)
    mat = [[Fraction(a[r][j]) for r in range(m)] for j in cols]  # B^T rows
    rhs = [Fraction(c[j]) for j in cols]
    n = m
    # gaussian elimination on (B^T | c_B)
    piv_cols = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, n) if mat[r][col] != 0), None)
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        rhs[row], rhs[sel] = rhs[sel], rhs[row]
        inv = Fraction(1) / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        rhs[row] *= inv
        for r in range(n):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [u - f * v for u, v in zip(mat[r], mat[row])]
                rhs[r] -= f * rhs[row]
        piv_cols.append(col)
        row += 1
        if row == n:
            break
    y = [Fraction(0)] * n
    for r, col in enumerate(piv_cols):
        y[col] = rhs[r]
    return y


def feasible_point(ineq_rows, ineq_rhs, n_vars) -> list | None:
    """A point with C x <= d over free variables x, or None if empty.

    Encoded in standard form with x = x+ - x- and slack variables.
    """
    k = len(ineq_rows)
    n = 2 * n_vars + k
    a = []
    for r in range(k):
        row = []
        for j in range(n_vars):
            row.append(Fraction(ineq_rows[r][j]))
        for j in range(n_vars):
            row.append(-Fraction(ineq_rows[r][j]))
        for s in range(k):
            row.append(Fraction(1 if s == r else 0))
        a.append(row)
    res = solve_lp([Fraction(0)] * n, a, [Fraction(v) for v in ineq_rhs])
    if res.status != OPTIMAL:
        return None
    return [res.x[j] - res.x[n_vars + j] for j in range(n_vars)]


def in_convex_hull(point, generators) -> bool:
    """Exact test: is point a convex combination of the generator vectors?"""
    if not generators:
        return False
    d = len(point)
    k = len(generators)
    a = [[Fraction(g[i]) for g in generators] for i in range(d)]
    a.append([Fraction(1)] * k)
    b = [Fraction(v) for v in point] + [Fraction(1)]
    res = solve_lp([Fraction(0)] * k, a, b)
    return res.status == OPTIMAL
