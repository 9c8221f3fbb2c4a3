import random
from fractions import Fraction

import pytest

from nasheq.errors import PivotError
from nasheq.tableau import IntegerTableau, integerize_rows, tableau_for_basis


class RationalTableau:
    """Plain Fraction-arithmetic mirror used as the oracle."""

    def __init__(self, rows, rhs):
        self.m = [[Fraction(v) for v in row] for row in rows]
        self.rhs = [Fraction(v) for v in rhs]

    def pivot(self, row, col):
        p = self.m[row][col]
        self.m[row] = [v / p for v in self.m[row]]
        self.rhs[row] /= p
        for r in range(len(self.m)):
            if r == row:
                continue
            f = self.m[r][col]
            if f:
                self.m[r] = [a - f * b for a, b in zip(self.m[r], self.m[row])]
                self.rhs[r] -= f * self.rhs[row]


def assert_matches_oracle(tab: IntegerTableau, oracle: RationalTableau):
    for r in range(tab.n_rows):
        assert Fraction(tab.rhs[r], tab.scale) == oracle.rhs[r]
        for c in range(tab.n_cols):
            assert Fraction(tab.m[r][c], tab.scale) == oracle.m[r][c]


def test_identity_pivot_is_noop():
    tab = IntegerTableau([[1, 0], [0, 1]], [3, 5])
    tab.pivot(0, 0)
    assert tab.scale == 1
    assert tab.m == [[1, 0], [0, 1]]
    assert tab.rhs == [3, 5]


def test_zero_pivot_rejected():
    tab = IntegerTableau([[1, 0], [0, 1]], [3, 5])
    with pytest.raises(PivotError):
        tab.pivot(0, 1)


def test_two_pivots_and_reversals_restore():
    rng = random.Random(5)
    for _ in range(50):
        rows = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(4)]
        for r in range(4):
            rows[r][r + 2] = 1  # embed a slack identity block in columns 2..5
            for rr in range(4):
                if rr != r:
                    rows[rr][r + 2] = 0
        rhs = [rng.randint(0, 9) for _ in range(4)]
        tab = IntegerTableau(rows, rhs, basis=[2, 3, 4, 5])
        if tab.m[0][0] == 0 or tab.m[1][1] == 0:
            continue
        original = ([row[:] for row in tab.m], tab.rhs[:], tab.scale)
        tab.pivot(0, 0)
        if tab.m[1][1] == 0:
            continue
        tab.pivot(1, 1)
        tab.pivot(1, 3)
        tab.pivot(0, 2)
        assert (tab.m, tab.rhs, tab.scale) == original


def test_random_pivot_sequences_match_rational_oracle():
    """matrix/scale equals the pure-Fraction tableau after every pivot."""
    rng = random.Random(42)
    checked = 0
    while checked < 1000:
        n_rows = rng.randint(2, 5)
        n_cols = n_rows + rng.randint(1, 4)
        rows = [[rng.randint(-7, 7) for _ in range(n_cols)] for _ in range(n_rows)]
        rhs = [rng.randint(-9, 9) for _ in range(n_rows)]
        tab = IntegerTableau(rows, rhs)
        oracle = RationalTableau(rows, rhs)
        for _ in range(rng.randint(2, 6)):
            choices = [
                (r, c)
                for r in range(n_rows)
                for c in range(n_cols)
                if tab.m[r][c] != 0
            ]
            if not choices:
                break
            r, c = choices[rng.randrange(len(choices))]
            tab.pivot(r, c)
            oracle.pivot(r, c)
            assert_matches_oracle(tab, oracle)
            checked += 1
    assert checked >= 1000


def test_random_4x6_pivot_example():
    rng = random.Random(7)
    rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(4)]
    rhs = [rng.randint(-9, 9) for _ in range(4)]
    tab = IntegerTableau(rows, rhs)
    oracle = RationalTableau(rows, rhs)
    tab.pivot(2, 1)
    oracle.pivot(2, 1)
    assert_matches_oracle(tab, oracle)


def test_tableau_for_basis_builds_requested_basis():
    rows = [
        [2, 1, 1, 0],
        [1, 3, 0, 1],
    ]
    rhs = [4, 6]
    tab = tableau_for_basis(rows, rhs, [0, 1])
    assert sorted(tab.basis) == [0, 1]
    # solves the 2x2 system exactly
    assert tab.value_of(0) == Fraction(6, 5)
    assert tab.value_of(1) == Fraction(8, 5)


def test_integerize_rows_scales_each_row_positively():
    rows = [[Fraction(1, 2), Fraction(-1, 3)], [Fraction(2), Fraction(4)]]
    out_rows, out_rhs = integerize_rows(rows, [Fraction(1, 6), Fraction(0)])
    assert out_rows[0] == [3, -2] and out_rhs[0] == 1
    assert out_rows[1] == [1, 2] and out_rhs[1] == 0


def test_lex_ratio_prefers_lexicographically_smaller_row():
    # equal plain ratios; tie broken by the tie columns
    tab = IntegerTableau(
        [[1, 1, 0], [1, 0, 1]],
        [2, 2],
        basis=[1, 2],
    )
    row = tab.lex_ratio_row(0, [0, 1], tie_cols=(1, 2))
    assert row == 1  # column 1 entries: row0 has 1, row1 has 0 -> row1 smaller
