"""The five policy scenarios as constrained instances of the optimizers.

S0  human-only benchmark: Mode I administratively forced at theta = 0.5
S1  flexible contracting: free (theta, N) with endogenous mode response
S2  minimum platform liability: theta <= 1 - alpha
S3  minimum physician liability: theta >= theta_floor
S4  social welfare benchmark: social objective, mode and N free
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleError, UnstableError
from .params import Mode, ModelParams
from .platform_opt import (
    MAX_STAFFING,
    CostBreakdown,
    Policy,
    cost_breakdown,
    min_staffing,
    mode_attrs,
    optimize_platform,
    optimize_social,
)

SCENARIO_IDS = ("S0", "S1", "S2", "S3", "S4")

# Conventions for unspecified regulatory strengths; CLI-overridable.
DEFAULT_ALPHA = 0.5
DEFAULT_THETA_FLOOR = 0.3

S0_THETA = 0.5


@dataclass(frozen=True)
class ScenarioSpec:
    """One scenario's constraint set."""

    id: str
    theta_lo: float = 0.0
    theta_hi: float = 1.0
    theta_fixed: float | None = None
    mode_forced: Mode | None = None
    objective: str = "platform"  # "platform" or "social"
    alpha: float | None = None
    theta_floor: float | None = None


@dataclass(frozen=True)
class ScenarioResult:
    id: str
    feasible: bool
    policy: Policy | None
    cost: CostBreakdown | None
    regime: Mode | None  # None when the mode is forced or moot
    reason: str | None = None


def make_scenario(
    scenario_id: str,
    alpha: float = DEFAULT_ALPHA,
    theta_floor: float = DEFAULT_THETA_FLOOR,
) -> ScenarioSpec:
    """Build the spec for one of S0..S4."""
    if scenario_id == "S0":
        return ScenarioSpec(id="S0", theta_fixed=S0_THETA, mode_forced=Mode.I)
    if scenario_id == "S1":
        return ScenarioSpec(id="S1")
    if scenario_id == "S2":
        if not 0.0 < alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
        return ScenarioSpec(id="S2", theta_hi=1.0 - alpha, alpha=alpha)
    if scenario_id == "S3":
        if not 0.0 < theta_floor <= 1.0:
            raise ValueError(f"theta_floor must lie in (0, 1], got {theta_floor!r}")
        return ScenarioSpec(id="S3", theta_lo=theta_floor, theta_floor=theta_floor)
    if scenario_id == "S4":
        return ScenarioSpec(id="S4", objective="social")
    raise ValueError(f"unknown scenario {scenario_id!r}; expected one of {SCENARIO_IDS}")


def _optimize_forced_mode(theta: float, m: Mode, p: ModelParams) -> tuple[Policy, CostBreakdown]:
    """Staffing-only optimization at a fixed share and administratively
    forced mode (best response suspended)."""
    mu, _, _ = mode_attrs(m, p)
    n = min_staffing(p.lam, mu)
    best: tuple[Policy, CostBreakdown] | None = None
    while True:
        if n > MAX_STAFFING:
            raise InfeasibleError(f"staffing enumeration exceeded {MAX_STAFFING} servers")
        cost = cost_breakdown(theta, n, m, p)
        if best is None or cost.total < best[1].total:
            best = (Policy(theta=theta, n=n, mode=m), cost)
        if p.c_n * (n + 1) > best[1].total:
            break
        n += 1
    return best


def run_scenario(spec: ScenarioSpec, p: ModelParams) -> ScenarioResult:
    """Solve one scenario's constrained problem."""
    try:
        if spec.objective == "social":
            policy, cost = optimize_social(p)
            return ScenarioResult(spec.id, True, policy, cost, regime=None)
        if spec.mode_forced is not None:
            theta = spec.theta_fixed if spec.theta_fixed is not None else spec.theta_lo
            policy, cost = _optimize_forced_mode(theta, spec.mode_forced, p)
            return ScenarioResult(spec.id, True, policy, cost, regime=None)
        sol = optimize_platform(p, spec.theta_lo, spec.theta_hi)
        win = sol.winner
        return ScenarioResult(spec.id, True, win.best, win.cost, regime=win.regime)
    except (InfeasibleError, UnstableError) as exc:
        return ScenarioResult(spec.id, False, None, None, None, reason=str(exc))


@dataclass(frozen=True)
class ScenarioRow:
    """One comparison-table row; pct_vs_s1 is None when S1 is absent."""

    result: ScenarioResult
    pct_vs_s1: float | None


def compare_scenarios(specs: list[ScenarioSpec], p: ModelParams) -> list[ScenarioRow]:
    """Run scenarios and tabulate totals relative to S1, ordered by id."""
    if not specs:
        raise ValueError("need at least one scenario")
    results = {s.id: run_scenario(s, p) for s in specs}
    s1 = results.get("S1")
    s1_total = s1.cost.total if s1 is not None and s1.feasible else None
    rows = []
    for sid in sorted(results):
        res = results[sid]
        pct = None
        if s1_total is not None and res.feasible:
            pct = 100.0 * (res.cost.total - s1_total) / s1_total
        rows.append(ScenarioRow(result=res, pct_vs_s1=pct))
    return rows
