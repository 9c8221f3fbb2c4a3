import itertools
import random
from fractions import Fraction

import pytest

from nasheq.errors import InputError
from nasheq.strategic import (
    MixedStrategy,
    expected_payoffs,
    game_from_text,
    is_equilibrium,
    make_symmetric,
    make_zero_sum,
    new_game,
)

from .conftest import random_game


def test_new_game_default_names():
    g = new_game([[0, 1], [2, 3], [4, 5]], [[0, 0], [0, 0], [0, 0]])
    assert g.row_names == ("A", "B", "C")
    assert g.col_names == ("a", "b")


def test_new_game_rejects_shape_mismatch():
    with pytest.raises(InputError):
        new_game([[1, 2]], [[1], [2]])
    with pytest.raises(InputError):
        new_game([[1, 2]], [[1, 2]], row_names=["X", "Y"])
    with pytest.raises(InputError):
        new_game([[1, 2], [3, 4]], [[1, 2], [3, 4]], row_names=["X", "X"])


def test_zero_sum_mode():
    g = make_zero_sum([[1, -2], [0, 3]])
    assert g.b == ((Fraction(-1), Fraction(2)), (Fraction(0), Fraction(-3)))
    trivial = make_zero_sum([[0]])
    assert trivial.b == ((Fraction(0),),)


def test_symmetric_mode():
    g = make_symmetric([[-1, 0], [0, -1]])
    assert g.b == g.a
    anti = make_symmetric([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert anti.b == anti.a
    with pytest.raises(InputError):
        make_symmetric([[1, 2, 3], [4, 5, 6]])


def test_mixed_strategy_validation():
    with pytest.raises(InputError):
        MixedStrategy(1, (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(InputError):
        MixedStrategy(1, (Fraction(3, 2), Fraction(-1, 2)))


def test_expected_payoffs_simultaneous(simultaneous_game):
    x = MixedStrategy(1, (Fraction(0), Fraction(1)))
    y = MixedStrategy(2, (Fraction(0), Fraction(1)))
    assert expected_payoffs(simultaneous_game, x, y) == (4, 4)


def test_expected_payoffs_anticoordination(anticoordination_game):
    third = Fraction(1, 3)
    x = MixedStrategy(1, (third, third, third))
    y = MixedStrategy(2, (third, third, third))
    assert expected_payoffs(anticoordination_game, x, y) == (
        Fraction(-1, 3),
        Fraction(-1, 3),
    )


def test_pure_profiles_read_matrix_entries():
    rng = random.Random(3)
    g = random_game(rng)
    for i in range(g.m):
        for j in range(g.n):
            x = MixedStrategy(1, tuple(Fraction(int(k == i)) for k in range(g.m)))
            y = MixedStrategy(2, tuple(Fraction(int(k == j)) for k in range(g.n)))
            assert expected_payoffs(g, x, y) == (g.a[i][j], g.b[i][j])


def test_is_equilibrium_simultaneous(simultaneous_game):
    b, r = (Fraction(0), Fraction(1)), (Fraction(0), Fraction(1))
    t, l = (Fraction(1), Fraction(0)), (Fraction(1), Fraction(0))
    assert is_equilibrium(simultaneous_game, MixedStrategy(1, b), MixedStrategy(2, r))
    assert not is_equilibrium(simultaneous_game, MixedStrategy(1, t), MixedStrategy(2, l))


def test_is_equilibrium_commitment(commitment_game):
    x = MixedStrategy(1, (Fraction(0), Fraction(1)))
    y = MixedStrategy(2, (Fraction(0), Fraction(1, 2), Fraction(0), Fraction(1, 2)))
    assert is_equilibrium(commitment_game, x, y)


def brute_force_is_equilibrium(game, x, y):
    """Check only pure-strategy deviations, directly from the definition."""
    u, v = expected_payoffs(game, x, y)
    for i in range(game.m):
        pure = MixedStrategy(1, tuple(Fraction(int(k == i)) for k in range(game.m)))
        if expected_payoffs(game, pure, y)[0] > u:
            return False
    for j in range(game.n):
        pure = MixedStrategy(2, tuple(Fraction(int(k == j)) for k in range(game.n)))
        if expected_payoffs(game, x, pure)[1] > v:
            return False
    return True


def test_is_equilibrium_matches_pure_deviation_check():
    rng = random.Random(11)
    agree = 0
    while agree < 1000:
        g = random_game(rng, max_m=6, max_n=6, lo=-4, hi=4)
        denom = rng.randint(1, 4)
        x_raw = [rng.randint(0, denom) for _ in range(g.m)]
        y_raw = [rng.randint(0, denom) for _ in range(g.n)]
        if sum(x_raw) == 0 or sum(y_raw) == 0:
            continue
        x = MixedStrategy(1, tuple(Fraction(v, sum(x_raw)) for v in x_raw))
        y = MixedStrategy(2, tuple(Fraction(v, sum(y_raw)) for v in y_raw))
        assert is_equilibrium(g, x, y) == brute_force_is_equilibrium(g, x, y)
        agree += 1


def test_matrix_text_two_blocks_with_names():
    text = "  l r\nT 5 3\nB 6 4\n\n  l r\nT 2 1\nB 3 4\n"
    g = game_from_text(text)
    assert g.row_names == ("T", "B")
    assert g.col_names == ("l", "r")
    assert g.a[1][0] == 6


def test_matrix_text_bare_numbers_and_decimals():
    g = game_from_text("0.5 1\n2 3\n\n1 1\n1 1\n")
    assert g.a[0][0] == Fraction(1, 2)
    assert g.row_names == ("A", "B")


def test_matrix_text_single_block_modes():
    g = game_from_text("1 -2\n0 3\n", zero_sum=True)
    assert g.b[0][1] == 2
    g = game_from_text("-1 0\n0 -1\n", symmetric=True)
    assert g.b == g.a
    with pytest.raises(InputError):
        game_from_text("1 2\n\n3 4\n", zero_sum=True)
    with pytest.raises(InputError):
        game_from_text("1 2\n3 4\n")
