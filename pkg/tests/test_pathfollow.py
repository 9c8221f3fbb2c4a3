import random
import time
from fractions import Fraction

import pytest

from nasheq.components import connected_components
from nasheq.enumeration import enumerate_extreme_equilibria
from nasheq.errors import InputError
from nasheq.lp import in_convex_hull
from nasheq.pathfollow import (
    lemke_howson,
    lemke_prior,
    random_mixed_prior,
    random_prior,
    trace_equilibrium,
)
from nasheq.seqform import build_sequence_form, sequence_form_of_game, uniform_behavior
from nasheq.strategic import MixedStrategy, is_equilibrium, new_game

from .conftest import random_game


def all_labels(game):
    return [(1, i) for i in range(game.m)] + [(2, j) for j in range(game.n)]


def test_every_label_reaches_the_unique_equilibrium(simultaneous_game):
    for label in all_labels(simultaneous_game):
        ee = lemke_howson(simultaneous_game, label)
        assert (ee.x, ee.y) == ((0, 1), (0, 1))
        assert (ee.u, ee.v) == (4, 4)


def test_one_by_one_game():
    g = new_game([[7]], [[9]])
    ee = lemke_howson(g, (1, 0))
    assert ee.x == (1,) and ee.y == (1,)
    x, y = lemke_prior(g)
    assert x.probs == (1,) and y.probs == (1,)


def test_bad_labels_rejected(simultaneous_game):
    with pytest.raises(InputError):
        lemke_howson(simultaneous_game, (1, 5))
    with pytest.raises(InputError):
        lemke_howson(simultaneous_game, (3, 0))


def test_lemke_howson_sound_on_random_games():
    rng = random.Random(314)
    for _ in range(25):
        g = random_game(rng, max_m=10, max_n=10, lo=-9, hi=9)
        for label in all_labels(g):
            ee = lemke_howson(g, label)
            assert is_equilibrium(g, MixedStrategy(1, ee.x), MixedStrategy(2, ee.y))


def test_tracing_uniform_prior_simultaneous(simultaneous_game):
    x, y = lemke_prior(simultaneous_game)
    assert (x.probs, y.probs) == ((0, 1), (0, 1))


def test_tracing_random_priors_land_in_component_cliques(commitment_game):
    ees = enumerate_extreme_equilibria(commitment_game)
    comps = connected_components(ees)
    x_of = {e.idx1: e.x for e in ees}
    y_of = {e.idx2: e.y for e in ees}
    hulls = [
        ([x_of[i] for i in u], [y_of[j] for j in v])
        for comp in comps
        for u, v in comp.cliques
    ]
    for seed in range(40):
        prior1, prior2 = random_mixed_prior(commitment_game, seed)
        x, y = lemke_prior(commitment_game, prior1, prior2)
        assert is_equilibrium(commitment_game, x, y)
        assert any(
            in_convex_hull(x.probs, xs) and in_convex_hull(y.probs, ys)
            for xs, ys in hulls
        )


def test_tracing_sound_on_random_games():
    rng = random.Random(999)
    for trial in range(30):
        g = random_game(rng, max_m=6, max_n=6)
        prior1, prior2 = random_mixed_prior(g, trial * 7 + 1)
        x, y = lemke_prior(g, prior1, prior2)
        assert is_equilibrium(g, x, y)


def test_tracing_on_degenerate_games():
    rng = random.Random(555)
    for trial in range(15):
        g0 = random_game(rng, max_m=4, max_n=4, lo=-3, hi=3)
        rows = [list(r) for r in g0.a] + [list(g0.a[0])]
        rows_b = [list(r) for r in g0.b] + [list(g0.b[0])]
        g = new_game(rows, rows_b)
        x, y = lemke_prior(g, *random_mixed_prior(g, trial))
        assert is_equilibrium(g, x, y)


def test_sequence_form_tracing_noisy_tree(noisy_tree):
    sf = build_sequence_form(noisy_tree)
    b1, b2 = lemke_prior(sf, uniform_behavior(sf, 1), uniform_behavior(sf, 2))
    game = noisy_tree.to_strategic_form()
    x = noisy_tree.mixed_from_behavior(1, b1.local)
    y = noisy_tree.mixed_from_behavior(2, b2.local)
    assert is_equilibrium(game, x, y)


def test_strategic_and_sequence_runs_agree_on_payoffs(noisy_tree):
    game = noisy_tree.to_strategic_form()
    sf = build_sequence_form(noisy_tree)
    from nasheq.strategic import expected_payoffs

    # corresponding priors: uniform behavior vs its induced mixed strategy
    b1 = uniform_behavior(sf, 1)
    b2 = uniform_behavior(sf, 2)
    mixed_prior1 = noisy_tree.mixed_from_behavior(1, b1.local)
    mixed_prior2 = noisy_tree.mixed_from_behavior(2, b2.local)
    bb1, bb2 = lemke_prior(sf, b1, b2)
    sx = noisy_tree.mixed_from_behavior(1, bb1.local)
    sy = noisy_tree.mixed_from_behavior(2, bb2.local)
    gx, gy = lemke_prior(game, mixed_prior1, mixed_prior2)
    assert expected_payoffs(game, sx, sy) == expected_payoffs(game, gx, gy)


def test_trace_matches_enumerated_set_small_games():
    rng = random.Random(31337)
    for trial in range(10):
        g = random_game(rng, max_m=4, max_n=4)
        ees = enumerate_extreme_equilibria(g)
        comps = connected_components(ees)
        x_of = {e.idx1: e.x for e in ees}
        y_of = {e.idx2: e.y for e in ees}
        x, y = lemke_prior(g, *random_mixed_prior(g, trial + 100))
        ok = any(
            in_convex_hull(x.probs, [x_of[i] for i in u])
            and in_convex_hull(y.probs, [y_of[j] for j in v])
            for comp in comps
            for u, v in comp.cliques
        )
        assert ok


def test_random_prior_is_exact_distribution():
    rng = random.Random(8)
    for size in (1, 2, 5):
        probs = random_prior(size, rng)
        assert sum(probs, Fraction(0)) == 1
        assert all(p >= 0 for p in probs)
    # seeded repeatability
    a = random_prior(4, random.Random(99))
    b = random_prior(4, random.Random(99))
    assert a == b


def test_fifteen_by_fifteen_terminates_quickly():
    rng = random.Random(1)
    a = [[Fraction(rng.randint(-50, 50)) for _ in range(15)] for _ in range(15)]
    b = [[Fraction(rng.randint(-50, 50)) for _ in range(15)] for _ in range(15)]
    g = new_game(a, b)
    start = time.perf_counter()
    ee = lemke_howson(g, (1, 0))
    x, y = lemke_prior(g)
    elapsed = time.perf_counter() - start
    assert is_equilibrium(g, MixedStrategy(1, ee.x), MixedStrategy(2, ee.y))
    assert is_equilibrium(g, x, y)
    assert elapsed < 20


def test_cancellation(simultaneous_game):
    from nasheq.errors import ComputationCancelled

    with pytest.raises(ComputationCancelled):
        lemke_prior(simultaneous_game, should_stop=lambda: True)
