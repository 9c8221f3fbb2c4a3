"""Single-equilibrium solvers by complementary pivoting.

``lemke_howson`` runs the classic algorithm on the strategic form: the two
scaled best-response polytopes are kept as integer tableaus, the dropped
label's strategy variable enters first, and pivoting alternates between the
tableaus by entering the complement of each leaving variable until the
dropped label is picked back up.

``lemke_prior`` follows the path of Lemke's algorithm with a covering vector
built from an arbitrary prior (the linear tracing procedure), formulated on
the sequence form: while the auxiliary variable z0 carries the prior's
weight, each player's variable part is a best response against
prior-weight * prior + own-opponent's variable part.  The start basis holds
the exact best-reply bases against the prior, and the path ends when z0
leaves the basis, i.e. when the prior's weight reaches zero.  Bimatrix games
run through the same machinery as one-information-set sequence forms.

Both solvers use the lexicographic leaving rule (ties broken by the columns
of the start basis), so they terminate on degenerate games; a ray
termination would be an internal invariant violation and raises.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .enumeration import ExtremeEquilibrium
from .errors import ComputationCancelled, InputError, PivotError, RayTerminationError
from .lp import OPTIMAL, solve_lp
from .seqform import (
    BehaviorStrategy,
    RealizationPlan,
    SequenceForm,
    behavior_to_realization,
    realization_to_behavior,
    sequence_form_of_game,
    uniform_behavior,
)
from .strategic import BimatrixGame, MixedStrategy, expected_payoffs
from .tableau import IntegerTableau, integerize_rows, tableau_for_basis

_PIVOT_GUARD = 1 << 22


class LcpSystem:
    """Tracing-procedure tableau with its variable map, for inspection."""

    def __init__(self, tableau, var_names, z0, complements, free_ids, tie_cols):
        self.tableau = tableau
        self.var_names = var_names
        self.z0 = z0
        self.complements = complements
        self.free_ids = free_ids
        self.tie_cols = tie_cols


def _scale_matrix_to_ints(matrix):
    """One positive multiplier for the whole matrix: strategically neutral."""
    mult = 1
    for row in matrix:
        for v in row:
            mult = mult * v.denominator // gcd(mult, v.denominator)
    return [[int(v * mult) for v in row] for row in matrix]


def _positive_integer_matrices(game: BimatrixGame):
    """Shift payoffs positive and clear denominators (equilibria unchanged)."""
    shift_a = min(v for row in game.a for v in row) - 1
    shift_b = min(v for row in game.b for v in row) - 1
    a = [[v - shift_a for v in row] for row in game.a]
    b = [[v - shift_b for v in row] for row in game.b]
    return _scale_matrix_to_ints(a), _scale_matrix_to_ints(b)


def lemke_howson(game: BimatrixGame, missing_label, should_stop=None) -> ExtremeEquilibrium:
    """One exact equilibrium from the path that drops ``missing_label``.

    The label is a (player, strategy index) pair naming a pure strategy of
    either player.
    """
    player, idx = missing_label
    m, n = game.m, game.n
    if player == 1 and not 0 <= idx < m or player == 2 and not 0 <= idx < n:
        raise InputError(f"no pure strategy {missing_label}")
    if player not in (1, 2):
        raise InputError("label names player 1 or 2")
    a_int, b_int = _positive_integer_matrices(game)

    # tableau Q: rows i.  r_i + sum_j a_ij y'_j = 1;   y'_j = j, r_i = n + i
    tq = IntegerTableau(
        [a_int[i] + [1 if k == i else 0 for k in range(m)] for i in range(m)],
        [1] * m,
        basis=[n + i for i in range(m)],
    )
    # tableau P: rows j.  s_j + sum_i b_ij x'_i = 1;   x'_i = i, s_j = m + j
    tp = IntegerTableau(
        [
            [b_int[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)]
            for j in range(n)
        ],
        [1] * n,
        basis=[m + j for j in range(n)],
    )
    tie_q = tuple(range(n, n + m))
    tie_p = tuple(range(m, m + n))

    def label_in_q(var):
        return (2, var) if var < n else (1, var - n)

    def label_in_p(var):
        return (1, var) if var < m else (2, var - m)

    if player == 1:
        side, entering = "P", idx
    else:
        side, entering = "Q", idx
    steps = 0
    while True:
        if should_stop is not None and should_stop():
            raise ComputationCancelled("Lemke-Howson interrupted")
        if side == "P":
            row = tp.lex_ratio_row(entering, range(n), tie_p)
            if row is None:
                raise RayTerminationError("Lemke-Howson left the polytope")
            leaving = tp.basis[row]
            tp.pivot(row, entering)
            label = label_in_p(leaving)
            entering = (leaving - m) if leaving >= m else (n + leaving)
            side = "Q"
        else:
            row = tq.lex_ratio_row(entering, range(m), tie_q)
            if row is None:
                raise RayTerminationError("Lemke-Howson left the polytope")
            leaving = tq.basis[row]
            tq.pivot(row, entering)
            label = label_in_q(leaving)
            entering = (leaving - n) if leaving >= n else (m + leaving)
            side = "P"
        steps += 1
        if label == missing_label:
            break
        if steps > _PIVOT_GUARD:
            raise PivotError("Lemke-Howson pivot guard exceeded")

    x_scaled = [tp.value_of(i) for i in range(m)]
    y_scaled = [tq.value_of(j) for j in range(n)]
    total_x = sum(x_scaled, Fraction(0))
    total_y = sum(y_scaled, Fraction(0))
    assert total_x > 0 and total_y > 0, "terminated at the artificial solution"
    x = tuple(v / total_x for v in x_scaled)
    y = tuple(v / total_y for v in y_scaled)
    u, v = expected_payoffs(game, MixedStrategy(1, x), MixedStrategy(2, y))
    return ExtremeEquilibrium(x=x, y=y, u=u, v=v, idx1=1, idx2=1)


# -- tracing procedure --------------------------------------------------------


def _dense_payoffs(sf: SequenceForm):
    m, n = len(sf.seqs1), len(sf.seqs2)
    a = [[Fraction(0)] * n for _ in range(m)]
    b = [[Fraction(0)] * n for _ in range(m)]
    for (i, j), val in sf.payoff1.items():
        a[i][j] = val
    for (i, j), val in sf.payoff2.items():
        b[i][j] = val
    return a, b


def _best_reply_basis(cons, scores):
    """Optimal basis and plan of max scores.x s.t. constraints, x >= 0."""
    rows, rhs = cons
    res = solve_lp([-s for s in scores], rows, rhs)
    if res.status != OPTIMAL:
        raise PivotError("best-reply LP failed on a valid sequence form")
    return res.basis, res.x


def build_tracing_lcp(sf: SequenceForm, plan1: RealizationPlan, plan2: RealizationPlan) -> LcpSystem:
    a, b = _dense_payoffs(sf)
    m, n = len(sf.seqs1), len(sf.seqs2)
    e_rows, e_rhs = sf.cons1
    f_rows, f_rhs = sf.cons2
    k1, k2 = len(e_rows), len(f_rows)
    p_hat = plan1.weights
    q_hat = plan2.weights

    x0 = 0
    y0 = m
    u0 = m + n
    v0 = u0 + k1
    r0 = v0 + k2
    s0 = r0 + m
    z0 = s0 + n
    width = z0 + 1

    rows = []
    rhs = []
    a_q = [
        sum((a[i][j] * q_hat[j] for j in range(n)), Fraction(0)) for i in range(m)
    ]
    bt_p = [
        sum((b[i][j] * p_hat[i] for i in range(m)), Fraction(0)) for j in range(n)
    ]
    for i in range(m):  # r_i - (E^T u)_i + (A yhat)_i + (A qhat)_i z0 = 0
        row = [Fraction(0)] * width
        row[r0 + i] = Fraction(1)
        for c in range(k1):
            row[u0 + c] = -e_rows[c][i]
        for j in range(n):
            row[y0 + j] = a[i][j]
        row[z0] = a_q[i]
        rows.append(row)
        rhs.append(Fraction(0))
    for j in range(n):  # s_j - (F^T v)_j + (B^T xhat)_j + (B^T phat)_j z0 = 0
        row = [Fraction(0)] * width
        row[s0 + j] = Fraction(1)
        for c in range(k2):
            row[v0 + c] = -f_rows[c][j]
        for i in range(m):
            row[x0 + i] = b[i][j]
        row[z0] = bt_p[j]
        rows.append(row)
        rhs.append(Fraction(0))
    for c in range(k1):  # (E xhat)_c + e_c z0 = e_c
        row = [Fraction(0)] * width
        for i in range(m):
            row[x0 + i] = e_rows[c][i]
        row[z0] = e_rhs[c]
        rows.append(row)
        rhs.append(e_rhs[c])
    for c in range(k2):
        row = [Fraction(0)] * width
        for j in range(n):
            row[y0 + j] = f_rows[c][j]
        row[z0] = f_rhs[c]
        rows.append(row)
        rhs.append(f_rhs[c])

    basis1, _x_star = _best_reply_basis(sf.cons1, a_q)
    basis2, _y_star = _best_reply_basis(sf.cons2, bt_p)
    assert 0 in basis1 and 0 in basis2  # the empty sequence has weight one

    order = (
        [x0 + i for i in basis1 if i != 0]
        + [y0 + j for j in basis2]
        + [u0 + c for c in range(k1)]
        + [v0 + c for c in range(k2)]
        + [z0]
        + [r0 + i for i in range(m) if i not in basis1]
        + [s0 + j for j in range(n) if j not in basis2]
    )
    int_rows, int_rhs = integerize_rows(rows, rhs)
    tableau = tableau_for_basis(int_rows, int_rhs, order)

    complements = {}
    for i in range(m):
        complements[x0 + i] = r0 + i
        complements[r0 + i] = x0 + i
    for j in range(n):
        complements[y0 + j] = s0 + j
        complements[s0 + j] = y0 + j
    free_ids = set(range(u0, r0))
    names = (
        [f"x[{sf.names1[i]}]" for i in range(m)]
        + [f"y[{sf.names2[j]}]" for j in range(n)]
        + [f"u{c}" for c in range(k1)]
        + [f"v{c}" for c in range(k2)]
        + [f"r[{sf.names1[i]}]" for i in range(m)]
        + [f"s[{sf.names2[j]}]" for j in range(n)]
        + ["z0"]
    )
    return LcpSystem(tableau, names, z0, complements, free_ids, tuple(order))


def _as_plan(sf: SequenceForm, player: int, prior) -> RealizationPlan:
    if prior is None:
        return behavior_to_realization(sf, uniform_behavior(sf, player))
    if isinstance(prior, RealizationPlan):
        plan = prior
    elif isinstance(prior, BehaviorStrategy):
        plan = behavior_to_realization(sf, prior)
    elif isinstance(prior, MixedStrategy):
        weights = (Fraction(1),) + tuple(prior.probs)
        plan = RealizationPlan(player, weights)
    else:
        raise InputError(f"cannot use {prior!r} as a prior")
    if plan.player != player:
        raise InputError("prior assigned to the wrong player")
    if not sf.check_plan(plan):
        raise InputError("prior is not a valid realization plan")
    return plan


def trace_equilibrium(sf: SequenceForm, prior1=None, prior2=None, should_stop=None):
    """Run the tracing path; returns the pair of realization plans."""
    plan1 = _as_plan(sf, 1, prior1)
    plan2 = _as_plan(sf, 2, prior2)
    lcp = build_tracing_lcp(sf, plan1, plan2)
    t = lcp.tableau
    m, n = len(sf.seqs1), len(sf.seqs2)
    assert t.value_of(lcp.z0) == 1

    def ratio_rows():
        return [r for r in range(t.n_rows) if t.basis[r] not in lcp.free_ids]

    entering = 0  # x[empty sequence]: its pair is the one doubly missing label
    steps = 0
    while True:
        if should_stop is not None and should_stop():
            raise ComputationCancelled("tracing interrupted")
        row = t.lex_ratio_row(entering, ratio_rows(), lcp.tie_cols)
        if row is None:
            raise RayTerminationError(
                "tracing path hit a ray; this violates the algorithm's invariant"
            )
        leaving = t.basis[row]
        t.pivot(row, entering)
        if __debug__:
            assert all(t.rhs[r] >= 0 for r in ratio_rows()), "lost feasibility"
        if leaving == lcp.z0:
            break
        entering = lcp.complements[leaving]
        steps += 1
        if steps > _PIVOT_GUARD:
            raise PivotError("tracing pivot guard exceeded")

    weights1 = tuple(t.value_of(i) for i in range(m))
    weights2 = tuple(t.value_of(m + j) for j in range(n))
    out1 = RealizationPlan(1, weights1)
    out2 = RealizationPlan(2, weights2)
    assert sf.check_plan(out1) and sf.check_plan(out2)
    return out1, out2


def lemke_prior(game_or_sf, prior1=None, prior2=None, should_stop=None):
    """Tracing-procedure equilibrium from an arbitrary prior.

    For a bimatrix game the priors are MixedStrategy values (uniform when
    omitted) and a (MixedStrategy, MixedStrategy) equilibrium is returned.
    For a SequenceForm the priors are behavior strategies or realization
    plans and the result is a pair of behavior strategies.
    """
    if isinstance(game_or_sf, BimatrixGame):
        game = game_or_sf
        sf = sequence_form_of_game(game)
        plan1, plan2 = trace_equilibrium(sf, prior1, prior2, should_stop)
        x = MixedStrategy(1, plan1.weights[1:])
        y = MixedStrategy(2, plan2.weights[1:])
        return x, y
    sf = game_or_sf
    plan1, plan2 = trace_equilibrium(sf, prior1, prior2, should_stop)
    return (
        realization_to_behavior(sf, plan1),
        realization_to_behavior(sf, plan2),
    )


def random_prior(size: int, rng: random.Random, resolution: int = 32):
    """Uniform point of the probability simplex with exact rational entries.

    Gaps between sorted uniform draws; the draws come from the documented
    pseudo-random generator so seeded runs are reproducible.
    """
    if size == 1:
        return (Fraction(1),)
    cuts = sorted(Fraction(rng.getrandbits(resolution), 1 << resolution) for _ in range(size - 1))
    points = [Fraction(0)] + cuts + [Fraction(1)]
    return tuple(points[k + 1] - points[k] for k in range(size))


def random_mixed_prior(game: BimatrixGame, seed: int):
    rng = random.Random(seed)
    x = MixedStrategy(1, random_prior(game.m, rng))
    y = MixedStrategy(2, random_prior(game.n, rng))
    return x, y
