"""Platform-side optimization: cost evaluation, per-regime search, composition.

The total hourly cost of a (theta, N, mode) policy has four components:
risk borne by the platform, congestion, staffing, and the quadratic
compliance cost of shifting liability. For fixed (N, mode) the cost is
strictly convex in theta, so the per-regime optimum is a clamp of the
unconstrained stationary point followed by a finite staffing enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleError, UnstableError
from .params import Mode, ModelParams, mode_attrs
from .physician import threshold
from .queueing import min_staffing, queue_metrics

# Lowest liability share that still induces independent mode; the regime-I
# interval is open at the threshold, so the search closes it at this offset.
REGIME_I_EPS = 1e-6

# Safety valve: a staffing enumeration should terminate long before this.
MAX_STAFFING = 10_000


@dataclass(frozen=True)
class Policy:
    """A (liability share, staffing, mode) decision."""

    theta: float
    n: int
    mode: Mode


@dataclass(frozen=True)
class CostBreakdown:
    risk: float
    congestion: float
    staffing: float
    compliance: float
    total: float


@dataclass(frozen=True)
class RegimeResult:
    """Outcome of optimizing within one induced-mode regime."""

    regime: Mode
    feasible: bool
    best: Policy | None
    cost: CostBreakdown | None
    theta_unconstrained: float | None  # stationary point at the winning N
    n_searched: tuple[int, int] | None  # inclusive staffing range enumerated


@dataclass(frozen=True)
class PlatformSolution:
    regime_a: RegimeResult
    regime_i: RegimeResult
    winner: RegimeResult


def cost_breakdown(theta: float, n: int, m: Mode, p: ModelParams) -> CostBreakdown:
    """Evaluate the four cost components at a fixed policy."""
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
    mu, err_prob, _ = mode_attrs(m, p)
    if p.lam >= n * mu:
        raise UnstableError(
            f"{n} servers cannot cover arrival rate {p.lam:g} at service rate "
            f"{mu:g}; need at least {min_staffing(p.lam, mu)}"
        )
    metrics = queue_metrics(p.lam, mu, n)
    risk = p.lam * (1.0 - theta) * p.big_l * err_prob
    congestion = p.lam * p.c_w * metrics.t_total
    staffing = p.c_n * n
    compliance = p.kappa * theta * theta * n
    return CostBreakdown(
        risk=risk,
        congestion=congestion,
        staffing=staffing,
        compliance=compliance,
        total=risk + congestion + staffing + compliance,
    )


def theta_unconstrained(m: Mode, n: int, p: ModelParams) -> float:
    """Stationary point lam * L * P_m / (2 kappa N) of the cost in theta."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _, err_prob, _ = mode_attrs(m, p)
    return p.lam * p.big_l * err_prob / (2.0 * p.kappa * n)


def theta_optimal(m: Mode, n: int, lo: float, hi: float, p: ModelParams) -> float:
    """Minimizer of the cost in theta over [lo, hi]: clamp of the stationary
    point, unique by strict convexity."""
    if lo > hi:
        raise InfeasibleError(f"empty theta interval [{lo:g}, {hi:g}]")
    return min(max(theta_unconstrained(m, n, p), lo), hi)


def optimize_regime(
    regime: Mode, theta_lo: float, theta_hi: float, p: ModelParams
) -> RegimeResult:
    """Minimize cost over stable staffing levels within one regime.

    Enumerates N upward from minimum stable staffing; stops once the staffing
    component alone exceeds the incumbent total, a valid lower bound since
    every component is nonnegative.
    """
    if theta_lo > theta_hi:
        return RegimeResult(regime, False, None, None, None, None)
    mu, _, _ = mode_attrs(regime, p)
    n_lo = min_staffing(p.lam, mu)
    best_policy = None
    best_cost = None
    best_unc = None
    n = n_lo
    while True:
        if n > MAX_STAFFING:
            raise InfeasibleError(
                f"staffing enumeration exceeded {MAX_STAFFING} servers"
            )
        theta = theta_optimal(regime, n, theta_lo, theta_hi, p)
        cost = cost_breakdown(theta, n, regime, p)
        if best_cost is None or cost.total < best_cost.total:
            best_policy = Policy(theta=theta, n=n, mode=regime)
            best_cost = cost
            best_unc = theta_unconstrained(regime, n, p)
        if p.c_n * (n + 1) > best_cost.total:
            break
        n += 1
    return RegimeResult(
        regime=regime,
        feasible=True,
        best=best_policy,
        cost=best_cost,
        theta_unconstrained=best_unc,
        n_searched=(n_lo, n),
    )


def optimize_platform(
    p: ModelParams,
    theta_lo: float = 0.0,
    theta_hi: float = 1.0,
    eps: float = REGIME_I_EPS,
) -> PlatformSolution:
    """Solve both regimes on their induced-mode intervals and pick the winner.

    Regime A is searched on [theta_lo, min(theta_hi, theta_d)], Regime I on
    [max(theta_lo, theta_d + eps), theta_hi]; ties go to Regime A.
    """
    if not 0.0 <= theta_lo <= theta_hi <= 1.0:
        raise ValueError(f"need 0 <= theta_lo <= theta_hi <= 1, got [{theta_lo!r}, {theta_hi!r}]")
    theta_d = threshold(p).theta_d
    res_a = optimize_regime(Mode.A, theta_lo, min(theta_hi, theta_d), p)
    res_i = optimize_regime(Mode.I, max(theta_lo, theta_d + eps), theta_hi, p)
    if not res_a.feasible and not res_i.feasible:
        raise InfeasibleError(
            f"no feasible policy in [{theta_lo:g}, {theta_hi:g}] "
            f"(threshold {theta_d:g})"
        )
    if not res_i.feasible:
        winner = res_a
    elif not res_a.feasible:
        winner = res_i
    else:
        winner = res_a if res_a.cost.total <= res_i.cost.total else res_i
    return PlatformSolution(regime_a=res_a, regime_i=res_i, winner=winner)


def social_cost(n: int, m: Mode, p: ModelParams) -> CostBreakdown:
    """Social objective: full internalized loss plus congestion and staffing.

    The liability split is moot socially, so risk uses the full loss and the
    compliance friction drops out.
    """
    mu, err_prob, _ = mode_attrs(m, p)
    if p.lam >= n * mu:
        raise UnstableError(
            f"{n} servers cannot cover arrival rate {p.lam:g} at service rate "
            f"{mu:g}; need at least {min_staffing(p.lam, mu)}"
        )
    metrics = queue_metrics(p.lam, mu, n)
    risk = p.lam * p.big_l * err_prob
    congestion = p.lam * p.c_w * metrics.t_total
    staffing = p.c_n * n
    return CostBreakdown(
        risk=risk,
        congestion=congestion,
        staffing=staffing,
        compliance=0.0,
        total=risk + congestion + staffing,
    )


def optimize_social(p: ModelParams) -> tuple[Policy, CostBreakdown]:
    """Minimize the social objective over mode and stable staffing.

    The reported theta is 0: it does not enter the social objective. Ties
    break toward Mode A, then toward smaller N.
    """
    best: tuple[Policy, CostBreakdown] | None = None
    for m in (Mode.A, Mode.I):
        mu, _, _ = mode_attrs(m, p)
        n = min_staffing(p.lam, mu)
        while True:
            if n > MAX_STAFFING:
                raise InfeasibleError(
                    f"staffing enumeration exceeded {MAX_STAFFING} servers"
                )
            cost = social_cost(n, m, p)
            if best is None or cost.total < best[1].total:
                best = (Policy(theta=0.0, n=n, mode=m), cost)
            if p.c_n * (n + 1) > best[1].total:
                break
            n += 1
    return best
