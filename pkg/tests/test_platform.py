import dataclasses

import numpy as np
import pytest

from liabstaff import (
    BASELINE,
    InfeasibleError,
    Mode,
    UnstableError,
    cost_breakdown,
    optimize_platform,
    optimize_regime,
    optimize_social,
    social_cost,
    theta_optimal,
    theta_unconstrained,
)

from oracles import (
    brute_force_platform,
    brute_force_regime,
    brute_force_social,
    random_valid_params,
    total_cost_direct,
)


def test_cost_breakdown_headline_policy():
    cb = cost_breakdown(0.40, 5, Mode.A, BASELINE)
    assert cb.risk == pytest.approx(6000.0)
    assert cb.staffing == pytest.approx(1000.0)
    assert cb.compliance == pytest.approx(2000.0)
    assert cb.congestion == pytest.approx(1090.0, abs=1.0)
    assert cb.total == pytest.approx(total_cost_direct(0.40, 5, Mode.A, BASELINE), rel=1e-12)
    assert cb.total == pytest.approx(10090.0, abs=1.0)


def test_cost_breakdown_boundary_shares():
    cb0 = cost_breakdown(0.0, 10, Mode.I, BASELINE)
    assert cb0.compliance == 0.0
    cb1 = cost_breakdown(1.0, 10, Mode.I, BASELINE)
    assert cb1.risk == 0.0
    assert cb1.compliance == pytest.approx(BASELINE.kappa * 10)


def test_cost_breakdown_components_sum_and_nonnegative():
    rng = np.random.default_rng(5)
    for _ in range(30):
        p = random_valid_params(rng)
        m = Mode.A if rng.random() < 0.5 else Mode.I
        mu = p.mu_a if m is Mode.A else p.mu_i
        n = int(np.ceil(p.lam / mu)) + rng.integers(1, 10)
        cb = cost_breakdown(float(rng.uniform(0, 1)), n, m, p)
        parts = cb.risk + cb.congestion + cb.staffing + cb.compliance
        assert cb.total == pytest.approx(parts, rel=1e-9)
        assert min(cb.risk, cb.congestion, cb.staffing, cb.compliance) >= 0


def test_cost_breakdown_unstable_names_min_staffing():
    with pytest.raises(UnstableError, match="at least 9"):
        cost_breakdown(0.5, 8, Mode.I, BASELINE)


def test_theta_unconstrained_examples():
    assert theta_unconstrained(Mode.A, 5, BASELINE) == pytest.approx(0.40, abs=1e-12)
    assert theta_unconstrained(Mode.I, 10, BASELINE) == pytest.approx(0.10, abs=1e-12)


def test_theta_unconstrained_vanishes_with_huge_compliance_cost():
    p = dataclasses.replace(BASELINE, kappa=1e15)
    assert theta_unconstrained(Mode.A, 5, p) == pytest.approx(0.0, abs=1e-6)


def test_theta_optimal_clamping():
    assert theta_optimal(Mode.A, 5, 0.0, 0.60, BASELINE) == pytest.approx(0.40)
    assert theta_optimal(Mode.A, 5, 0.0, 0.30, BASELINE) == pytest.approx(0.30)
    assert theta_optimal(Mode.I, 10, 0.601, 1.0, BASELINE) == pytest.approx(0.601)
    with pytest.raises(InfeasibleError):
        theta_optimal(Mode.A, 5, 0.7, 0.3, BASELINE)


def test_theta_optimal_matches_grid_argmin():
    rng = np.random.default_rng(6)
    for _ in range(50):
        p = random_valid_params(rng)
        m = Mode.A if rng.random() < 0.5 else Mode.I
        mu = p.mu_a if m is Mode.A else p.mu_i
        n = int(np.ceil(p.lam / mu)) + int(rng.integers(1, 8))
        lo = float(rng.uniform(0, 0.5))
        hi = float(rng.uniform(lo, 1.0))
        grid = np.linspace(lo, hi, 10_001)
        totals = [cost_breakdown(float(t), n, m, p).total for t in grid]
        best_grid = float(grid[int(np.argmin(totals))])
        step = (hi - lo) / 10_000 if hi > lo else 0.0
        assert abs(theta_optimal(m, n, lo, hi, p) - best_grid) <= step + 1e-12


def test_second_difference_equals_convexity_constant():
    rng = np.random.default_rng(7)
    delta = 1e-3
    for _ in range(100):
        p = random_valid_params(rng)
        m = Mode.A if rng.random() < 0.5 else Mode.I
        mu = p.mu_a if m is Mode.A else p.mu_i
        n = int(np.ceil(p.lam / mu)) + int(rng.integers(1, 8))
        theta = float(rng.uniform(delta, 1 - delta))
        f = lambda t: cost_breakdown(t, n, m, p).total
        second = f(theta + delta) - 2 * f(theta) + f(theta - delta)
        assert second == pytest.approx(2 * p.kappa * n * delta**2, rel=1e-6)


def test_optimize_regime_a_baseline():
    res = optimize_regime(Mode.A, 0.0, 0.60, BASELINE)
    assert res.feasible
    assert res.best.theta == pytest.approx(0.40, abs=1e-9)
    assert res.best.n == 5
    assert res.cost.total == pytest.approx(10090.11, abs=0.01)
    bf_theta, bf_n, bf_total = brute_force_regime(Mode.A, 0.0, 0.60, BASELINE)
    assert res.best.n == bf_n
    assert abs(res.best.theta - bf_theta) <= 0.60 / 2000
    assert res.cost.total <= bf_total + 1e-9


def test_optimize_regime_i_clamps_low():
    res = optimize_regime(Mode.I, 0.600001, 1.0, BASELINE)
    assert res.feasible
    assert res.best.theta == pytest.approx(0.600001, abs=1e-12)
    _, bf_n, _ = brute_force_regime(Mode.I, 0.600001, 1.0, BASELINE)
    assert res.best.n == bf_n
    assert res.best.n >= 9


def test_optimize_regime_degenerate_interval():
    res = optimize_regime(Mode.A, 0.0, 0.0, BASELINE)
    assert res.feasible
    assert res.best.theta == 0.0


def test_optimize_regime_empty_interval_flagged():
    res = optimize_regime(Mode.A, 0.7, 0.6, BASELINE)
    assert not res.feasible
    assert res.best is None


def test_optimize_platform_baseline_headline():
    sol = optimize_platform(BASELINE)
    assert sol.winner.regime is Mode.A
    assert sol.winner.best.theta == pytest.approx(0.40, abs=1e-9)
    assert sol.winner.best.n == 5


def test_optimize_platform_high_loss_prefers_independent():
    p = dataclasses.replace(BASELINE, big_l=5000.0)
    assert optimize_platform(p).winner.regime is Mode.I


def test_optimize_platform_interval_above_threshold():
    sol = optimize_platform(BASELINE, 0.7, 1.0)
    assert not sol.regime_a.feasible
    assert sol.winner.regime is Mode.I


def test_optimize_platform_fully_infeasible():
    # the whole interval sits inside regime A's range but excludes regime I,
    # and a theta_lo above 1 is rejected earlier; force emptiness via bounds
    p = dataclasses.replace(BASELINE, big_l=80.0)  # theta_d = 15 > 1
    sol = optimize_platform(p, 0.0, 1.0)
    assert not sol.regime_i.feasible  # regime I unreachable for any share
    assert sol.winner.regime is Mode.A


def test_optimize_platform_matches_brute_force():
    rng = np.random.default_rng(8)
    for p in [BASELINE] + [random_valid_params(rng) for _ in range(20)]:
        sol = optimize_platform(p)
        bf_mode, bf_theta, bf_n, bf_total = brute_force_platform(p)
        assert sol.winner.regime is bf_mode
        assert sol.winner.best.n == bf_n
        assert abs(sol.winner.best.theta - bf_theta) <= 1.0 / 2000
        assert sol.winner.cost.total <= bf_total + 1e-9


def test_winner_interior_at_baseline():
    sol = optimize_platform(BASELINE)
    assert 0.0 < sol.winner.best.theta < 0.60


def test_social_cost_examples():
    cb = social_cost(11, Mode.I, BASELINE)
    assert cb.total == pytest.approx(8590.45, abs=0.01)
    assert cb.compliance == 0.0
    assert social_cost(5, Mode.A, BASELINE).risk == pytest.approx(10000.0)


def test_social_risk_is_share_independent():
    # full internalization: no theta anywhere in the social objective
    cb = social_cost(11, Mode.I, BASELINE)
    assert cb.risk == pytest.approx(BASELINE.lam * BASELINE.big_l * 0.05)


def test_optimize_social_baseline():
    pol, cb = optimize_social(BASELINE)
    assert pol.mode is Mode.I
    assert cb.total == pytest.approx(8590.45, abs=0.01)
    bf_mode, bf_n, bf_total = brute_force_social(BASELINE)
    assert pol.mode is bf_mode and pol.n == bf_n
    assert cb.total == pytest.approx(bf_total, rel=1e-12)


def test_optimize_social_cheap_errors_prefer_throughput():
    p = dataclasses.replace(BASELINE, big_l=200.0)
    pol, _ = optimize_social(p)
    assert pol.mode is Mode.A


def test_optimize_social_matches_brute_force_random():
    rng = np.random.default_rng(9)
    for _ in range(15):
        p = random_valid_params(rng)
        pol, cb = optimize_social(p)
        bf_mode, bf_n, bf_total = brute_force_social(p)
        assert (pol.mode, pol.n) == (bf_mode, bf_n)
        assert cb.total == pytest.approx(bf_total, rel=1e-12)
