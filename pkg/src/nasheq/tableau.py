"""Integer-pivoting simplex tableau.

The tableau stores, for the current basis B of an integer system [A | b],
the integer matrix ``scale * B^-1 [A | b]`` together with the positive
integer ``scale = |det B|``.  Dividing entries by ``scale`` recovers the
rational simplex tableau for the same basis, and every division performed
during a pivot is exact (the result is ``+/-adj(B')[A | b]``, an integer
matrix).  This is the classic economical alternative to keeping rational
entries throughout.

Rows whose basic variable is sign-free are exempt from ratio tests; the
lexicographic ratio rule breaks ties with the columns of the tableau that
held the initial basis, which keeps every pivot sequence finite even on
degenerate systems.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ComputationCancelled, PivotError


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integerize_rows(rows, rhs):
    """Scale rational rows by positive factors so all entries are ints.

    Returns (int_rows, int_rhs).  Each row is multiplied by the lcm of its
    denominators and divided by the gcd of the resulting integers, both
    positive operations, so equation and inequality senses are preserved.
    """
    int_rows = []
    int_rhs = []
    for row, b in zip(rows, rhs):
        entries = [Fraction(x) for x in row] + [Fraction(b)]
        mult = 1
        for e in entries:
            mult = _lcm(mult, e.denominator)
        ints = [int(e * mult) for e in entries]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        int_rows.append(ints[:-1])
        int_rhs.append(ints[-1])
    return int_rows, int_rhs


class IntegerTableau:
    """Simplex tableau over integers scaled by the basis determinant.

    Variables are identified by column index into the original system
    matrix.  ``basis[r]`` is the variable currently basic in row r (None
    until a variable has been pivoted onto that row).
    """

    def __init__(self, rows, rhs, basis=None):
        self.m = [list(map(int, row)) for row in rows]
        self.rhs = [int(b) for b in rhs]
        self.scale = 1
        self.n_rows = len(self.m)
        self.n_cols = len(self.m[0]) if self.m else 0
        self.basis: list = list(basis) if basis is not None else [None] * self.n_rows
        self.row_of = {v: r for r, v in enumerate(self.basis) if v is not None}

    def clone(self) -> "IntegerTableau":
        t = IntegerTableau.__new__(IntegerTableau)
        t.m = [row[:] for row in self.m]
        t.rhs = self.rhs[:]
        t.scale = self.scale
        t.n_rows = self.n_rows
        t.n_cols = self.n_cols
        t.basis = self.basis[:]
        t.row_of = dict(self.row_of)
        return t

    # -- values ----------------------------------------------------------

    def value_of(self, var) -> Fraction:
        r = self.row_of.get(var)
        if r is None:
            return Fraction(0)
        return Fraction(self.rhs[r], self.scale)

    def rational_entry(self, r: int, c: int) -> Fraction:
        return Fraction(self.m[r][c], self.scale)

    def rational_rhs(self, r: int) -> Fraction:
        return Fraction(self.rhs[r], self.scale)

    # -- pivoting ---------------------------------------------------------

    def pivot(self, row: int, col: int) -> None:
        """Exchange basis[row] for the variable of column ``col``.

        The new scale is |pivot element|; all divisions are exact.
        """
        p = self.m[row][col]
        if p == 0:
            raise PivotError(f"zero pivot element at row {row}, column {col}")
        sgn = 1 if p > 0 else -1
        s = self.scale
        prow = self.m[row]
        prhs = self.rhs[row]
        for r in range(self.n_rows):
            if r == row:
                continue
            f = self.m[r][col]
            mr = self.m[r]
            if f == 0:
                if sgn < 0:
                    self.m[r] = [(-p * x) // s for x in mr]
                    self.rhs[r] = (-p * self.rhs[r]) // s
                else:
                    self.m[r] = [(p * x) // s for x in mr]
                    self.rhs[r] = (p * self.rhs[r]) // s
            else:
                self.m[r] = [
                    sgn * (p * mr[c] - f * prow[c]) // s for c in range(self.n_cols)
                ]
                self.rhs[r] = sgn * (p * self.rhs[r] - f * prhs) // s
        if sgn < 0:
            self.m[row] = [-x for x in prow]
            self.rhs[row] = -prhs
        self.scale = abs(p)
        leaving = self.basis[row]
        if leaving is not None:
            del self.row_of[leaving]
        self.basis[row] = col
        self.row_of[col] = row

    # -- lexicographic ratio test ------------------------------------------

    def lex_ratio_row(self, col: int, eligible_rows, tie_cols) -> int | None:
        """Row of the lexicographic minimum ratio for entering column ``col``.

        Considers rows in ``eligible_rows`` with a positive entry in the
        column; compares (rhs, tie columns...) / entry lexicographically.
        Returns None when no entry is positive (unbounded direction).
        """
        best = None
        best_entry = 0
        for r in eligible_rows:
            e = self.m[r][col]
            if e <= 0:
                continue
            if best is None:
                best, best_entry = r, e
                continue
            # compare rhs[r]/e vs rhs[best]/best_entry, then tie columns
            a = self.rhs[r] * best_entry
            b = self.rhs[best] * e
            if a < b:
                best, best_entry = r, e
                continue
            if a > b:
                continue
            for tc in tie_cols:
                a = self.m[r][tc] * best_entry
                b = self.m[best][tc] * e
                if a < b:
                    best, best_entry = r, e
                    break
                if a > b:
                    break
            else:
                raise PivotError("lexicographic tie: dependent tie columns")
        return best

    def lex_positive_row(self, r: int, tie_cols) -> bool:
        """Row r is lexicographically positive w.r.t. (rhs, tie columns)."""
        if self.rhs[r] != 0:
            return self.rhs[r] > 0
        for tc in tie_cols:
            v = self.m[r][tc]
            if v != 0:
                return v > 0
        return False


def tableau_for_basis(int_rows, int_rhs, basis_vars) -> IntegerTableau:
    """Build the tableau of an explicitly chosen basis by Gauss-Jordan pivots.

    ``basis_vars`` must index an invertible column subset; each variable is
    pivoted onto some still-unassigned row holding a nonzero entry.
    """
    t = IntegerTableau(int_rows, int_rhs)
    taken = [False] * t.n_rows
    for var in basis_vars:
        row = None
        for r in range(t.n_rows):
            if not taken[r] and t.m[r][var] != 0:
                row = r
                break
        if row is None:
            raise PivotError(f"singular basis: no pivot row for variable {var}")
        t.pivot(row, var)
        taken[row] = True
    return t


def simplex_min(
    t: IntegerTableau,
    cost: dict,
    ratio_rows,
    tie_cols,
    entering_pool,
    should_stop=None,
    max_pivots: int | None = None,
) -> None:
    """Minimize sum(cost[v] * v) in place with Bland entering + lex leaving.

    ``ratio_rows()`` yields the rows whose basic variable is sign-restricted;
    ``entering_pool()`` yields candidate nonbasic variables in index order.
    Raises PivotError on an unbounded improving direction.
    """
    pivots = 0
    while True:
        if should_stop is not None and should_stop():
            raise ComputationCancelled("simplex interrupted")
        entering = None
        for j in entering_pool():
            rc = cost.get(j, 0) * t.scale
            for r in range(t.n_rows):
                b = t.basis[r]
                cb = cost.get(b, 0)
                if cb:
                    rc -= cb * t.m[r][j]
            if rc < 0:
                entering = j
                break
        if entering is None:
            return
        row = t.lex_ratio_row(entering, ratio_rows(), tie_cols)
        if row is None:
            raise PivotError("unbounded objective in simplex phase")
        t.pivot(row, entering)
        pivots += 1
        if max_pivots is not None and pivots > max_pivots:
            raise PivotError("pivot budget exceeded (cycling?)")
