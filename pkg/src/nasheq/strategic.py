"""Bimatrix games: model, input modes, expected payoffs, best responses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .rational import is_rational_token, rational


def default_names(count: int, upper: bool) -> tuple[str, ...]:
    """A, B, C, ... / a, b, c, ..., doubling letters once the alphabet runs out."""
    letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    if not upper:
        letters = letters.lower()
    names = []
    for i in range(count):
        letter = letters[i % 26]
        names.append(letter * (i // 26 + 1))
    return tuple(names)


@dataclass(frozen=True)
class BimatrixGame:
    """Two-player strategic form: payoff matrices A (player 1) and B (player 2)."""

    a: tuple[tuple[Fraction, ...], ...]
    b: tuple[tuple[Fraction, ...], ...]
    row_names: tuple[str, ...]
    col_names: tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.a[0])

    def payoffs(self, i: int, j: int) -> tuple[Fraction, Fraction]:
        return self.a[i][j], self.b[i][j]


@dataclass(frozen=True)
class MixedStrategy:
    player: int  # 1 or 2
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.player not in (1, 2):
            raise InputError("player must be 1 or 2")
        if any(p < 0 for p in self.probs):
            raise InputError("mixed strategy has a negative probability")
        if sum(self.probs, Fraction(0)) != 1:
            raise InputError("mixed strategy probabilities must sum to 1")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)


def _to_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    matrix = tuple(tuple(rational(v) for v in row) for row in rows)
    if not matrix or not matrix[0]:
        raise InputError("payoff matrix must have at least one row and column")
    width = len(matrix[0])
    if any(len(row) != width for row in matrix):
        raise InputError("payoff matrix rows differ in length")
    return matrix


def new_game(a, b, row_names=None, col_names=None) -> BimatrixGame:
    """Build a bimatrix game; names default to A,B,C,... and a,b,c,..."""
    ma = _to_matrix(a)
    mb = _to_matrix(b)
    if len(ma) != len(mb) or len(ma[0]) != len(mb[0]):
        raise InputError("payoff matrices must have identical dimensions")
    rn = tuple(row_names) if row_names is not None else default_names(len(ma), True)
    cn = tuple(col_names) if col_names is not None else default_names(len(ma[0]), False)
    if len(rn) != len(ma) or len(cn) != len(ma[0]):
        raise InputError("strategy name count does not match matrix shape")
    if len(set(rn)) != len(rn) or len(set(cn)) != len(cn):
        raise InputError("strategy names must be unique per player")
    return BimatrixGame(ma, mb, rn, cn)


def make_zero_sum(a, row_names=None, col_names=None) -> BimatrixGame:
    """Zero-sum input mode: player 2's payoffs are the negated matrix."""
    ma = _to_matrix(a)
    mb = tuple(tuple(-v for v in row) for row in ma)
    return new_game(ma, mb, row_names, col_names)


def make_symmetric(a, row_names=None, col_names=None) -> BimatrixGame:
    """Symmetric input mode: B is the transpose of the (square) matrix A."""
    ma = _to_matrix(a)
    if len(ma) != len(ma[0]):
        raise InputError("symmetric mode requires a square matrix")
    mb = tuple(tuple(ma[j][i] for j in range(len(ma))) for i in range(len(ma)))
    return new_game(ma, mb, row_names, col_names)


def expected_payoffs(game: BimatrixGame, x: MixedStrategy, y: MixedStrategy):
    """Exact (x^T A y, x^T B y)."""
    if x.player != 1 or y.player != 2:
        raise InputError("expected_payoffs needs a (player 1, player 2) pair")
    if len(x.probs) != game.m or len(y.probs) != game.n:
        raise InputError("strategy length does not match the game")
    u = Fraction(0)
    v = Fraction(0)
    for i in range(game.m):
        xi = x.probs[i]
        if not xi:
            continue
        for j in range(game.n):
            yj = y.probs[j]
            if yj:
                u += xi * yj * game.a[i][j]
                v += xi * yj * game.b[i][j]
    return u, v


def pure_payoffs_against(game: BimatrixGame, player: int, opponent: MixedStrategy):
    """Vector of expected payoffs of each own pure strategy vs the opponent mix."""
    if player == 1:
        return [
            sum((game.a[i][j] * opponent.probs[j] for j in range(game.n)), Fraction(0))
            for i in range(game.m)
        ]
    return [
        sum((game.b[i][j] * opponent.probs[i] for i in range(game.m)), Fraction(0))
        for j in range(game.n)
    ]


def is_equilibrium(game: BimatrixGame, x: MixedStrategy, y: MixedStrategy) -> bool:
    """Best response condition: every support strategy attains the maximum."""
    if len(x.probs) != game.m or len(y.probs) != game.n:
        raise InputError("strategy length does not match the game")
    row_pay = pure_payoffs_against(game, 1, y)
    best1 = max(row_pay)
    if any(x.probs[i] > 0 and row_pay[i] != best1 for i in range(game.m)):
        return False
    col_pay = pure_payoffs_against(game, 2, x)
    best2 = max(col_pay)
    return not any(y.probs[j] > 0 and col_pay[j] != best2 for j in range(game.n))


# -- text matrix format --------------------------------------------------
#
# Whitespace-separated rationals (integer, a/b, or exact decimal), one row
# per line, blocks separated by blank lines.  A block may carry names the
# way the printed payoff blocks do: an optional leading line of column
# names, and an optional leading name token per row.


def _parse_block(lines):
    col_names = None
    row_names = []
    rows = []
    body = list(lines)
    if body and all(not is_rational_token(tok) for tok in body[0].split()):
        col_names = body[0].split()
        body = body[1:]
    for line in body:
        toks = line.split()
        if not toks:
            continue
        if is_rational_token(toks[0]):
            row_names.append(None)
            rows.append([rational(t) for t in toks])
        else:
            row_names.append(toks[0])
            rows.append([rational(t) for t in toks[1:]])
    if not rows:
        raise InputError("empty payoff block")
    named = [r for r in row_names if r is not None]
    if named and len(named) != len(row_names):
        raise InputError("either all rows or no rows may carry a name")
    return rows, (row_names if named else None), col_names


def parse_matrix_blocks(text: str):
    """Split text into payoff blocks; returns a list of (rows, row_names, col_names)."""
    blocks = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise InputError("no payoff data found")
    return [_parse_block(b) for b in blocks]


def game_from_text(text: str, zero_sum=False, symmetric=False) -> BimatrixGame:
    """Parse the text matrix format into a game.

    One block with --zero-sum/--symmetric, otherwise two blocks for A and B.
    """
    blocks = parse_matrix_blocks(text)
    if zero_sum and symmetric:
        raise InputError("choose at most one of zero-sum and symmetric modes")
    if zero_sum or symmetric:
        if len(blocks) != 1:
            raise InputError("single-matrix input mode expects exactly one block")
        rows, row_names, col_names = blocks[0]
        maker = make_zero_sum if zero_sum else make_symmetric
        return maker(rows, row_names, col_names)
    if len(blocks) != 2:
        raise InputError(f"expected two payoff blocks, found {len(blocks)}")
    (rows_a, rn_a, cn_a), (rows_b, rn_b, cn_b) = blocks
    row_names = rn_a or rn_b
    col_names = cn_a or cn_b
    if rn_a and rn_b and rn_a != rn_b:
        raise InputError("row names differ between the two payoff blocks")
    if cn_a and cn_b and cn_a != cn_b:
        raise InputError("column names differ between the two payoff blocks")
    return new_game(rows_a, rows_b, row_names, col_names)
