"""Parameter sweeps and plot-data emitters.

Every sweep row is a full, independent re-optimization at the perturbed
parameters; no incremental shortcuts. No rendering here: these functions
emit plot-ready tables only.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .params import Mode, ModelParams, validate
from .physician import physician_utility, threshold
from .platform_opt import optimize_platform, optimize_regime, optimize_social
from .queueing import erlang_c, min_staffing

# Parameters exposed to sensitivity sweeps; "lambda" maps to the lam field.
SWEEPABLE = {
    "kappa": "kappa",
    "c_n": "c_n",
    "big_l": "big_l",
    "q": "q",
    "c_w": "c_w",
    "lambda": "lam",
}


@dataclass(frozen=True)
class RegimeCell:
    """One point of the demand-risk regime map."""

    lam: float
    big_l: float
    winner: Mode | None
    theta_star: float | None
    n_star: int | None
    total: float | None
    error: str | None = None


@dataclass(frozen=True)
class SweepRow:
    param_name: str
    param_value: float
    theta_star: float
    n_star: int
    total: float
    winner: Mode


def _solve_cell(args: tuple[ModelParams, float, float]) -> RegimeCell:
    p, lam, big_l = args
    try:
        sol = optimize_platform(validate(dataclasses.replace(p, lam=lam, big_l=big_l)))
        win = sol.winner
        return RegimeCell(lam, big_l, win.regime, win.best.theta, win.best.n, win.cost.total)
    except ValueError as exc:
        return RegimeCell(lam, big_l, None, None, None, None, error=str(exc))


def regime_map(
    p: ModelParams,
    lambda_grid: list[float],
    l_grid: list[float],
    jobs: int = 1,
) -> list[RegimeCell]:
    """Optimal-mode map over the (lambda, L) plane, row-major in the grids.

    Per-cell optimizer errors are recorded in the cell; the sweep continues.
    """
    if not lambda_grid or not l_grid:
        raise ValueError("grids must be non-empty")
    tasks = [(p, lam, big_l) for lam in lambda_grid for big_l in l_grid]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_solve_cell, tasks, chunksize=16))
    return [_solve_cell(t) for t in tasks]


@dataclass(frozen=True)
class BoundaryPoint:
    lam: float
    l_boundary: float


def _winner_at(p: ModelParams, lam: float, big_l: float) -> Mode:
    sol = optimize_platform(validate(dataclasses.replace(p, lam=lam, big_l=big_l)))
    return sol.winner.regime


def regime_boundary(
    p: ModelParams,
    lambda_grid: list[float],
    l_lo: float,
    l_hi: float,
    tol: float = 1.0,
    prescan: int = 20,
) -> list[BoundaryPoint]:
    """Bisect the loss-severity axis for the regime flip at each lambda.

    A pre-scan detects multiple crossings; every detected crossing is emitted
    rather than assuming the single-crossing shape. Columns whose endpoints
    share a winner contribute no points.
    """
    points: list[BoundaryPoint] = []
    for lam in lambda_grid:
        scan_l = np.linspace(l_lo, l_hi, prescan)
        winners = [_winner_at(p, lam, big_l) for big_l in scan_l]
        for i in range(prescan - 1):
            if winners[i] is winners[i + 1]:
                continue
            lo, hi = float(scan_l[i]), float(scan_l[i + 1])
            w_lo = winners[i]
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                if _winner_at(p, lam, mid) is w_lo:
                    lo = mid
                else:
                    hi = mid
            points.append(BoundaryPoint(lam=lam, l_boundary=0.5 * (lo + hi)))
    return points


def monotone_violations(points: list[BoundaryPoint]) -> list[tuple[BoundaryPoint, BoundaryPoint]]:
    """Adjacent boundary pairs where L decreases as lambda increases."""
    return [
        (a, b)
        for a, b in zip(points, points[1:])
        if b.lam > a.lam and b.l_boundary < a.l_boundary
    ]


def sensitivity_sweep(p: ModelParams, name: str, grid: list[float]) -> list[SweepRow]:
    """Re-optimize the platform at each value of one swept parameter."""
    if name not in SWEEPABLE:
        raise ValueError(
            f"unknown sweep parameter {name!r}; valid: {', '.join(sorted(SWEEPABLE))}"
        )
    field = SWEEPABLE[name]
    rows = []
    for value in grid:
        sol = optimize_platform(validate(dataclasses.replace(p, **{field: value})))
        win = sol.winner
        rows.append(
            SweepRow(
                param_name=name,
                param_value=float(value),
                theta_star=win.best.theta,
                n_star=win.best.n,
                total=win.cost.total,
                winner=win.regime,
            )
        )
    return rows


def welfare_curve(
    p: ModelParams, l_grid: list[float]
) -> list[tuple[float, float, float, float, float]]:
    """(L, platform-optimal total, social-optimal total, gap, gap % of social).

    The percentage uses the social total as denominator; the raw totals are
    all present so any other ratio can be formed downstream.
    """
    out = []
    for big_l in l_grid:
        pl = validate(dataclasses.replace(p, big_l=big_l))
        s1 = optimize_platform(pl).winner.cost.total
        s4 = optimize_social(pl)[1].total
        gap = s1 - s4
        out.append((float(big_l), s1, s4, gap, 100.0 * gap / s4))
    return out


FIGURE_IDS = ("fig1", "fig2", "fig3a", "fig3b", "fig4")


def figure_data(
    which: str, p: ModelParams, options: dict | None = None
) -> tuple[list[str], list[tuple]]:
    """Plot-ready (header, rows) tables for the expository figures.

    fig1  delay probability vs utilization for N in {6, 10, 15}
    fig2  physician utilities of both modes over theta in [0, 1]
    fig3a threshold vs loss severity
    fig3b threshold vs disutility gap
    fig4  staffing by mode vs arrival rate; options["criterion"] selects
          "cost-optimal" (default) or "min-stable"
    """
    opts = dict(options or {})
    npoints = int(opts.get("npoints", 101))
    if which == "fig1":
        rows = []
        utils = np.linspace(float(opts.get("rho_lo", 0.05)), float(opts.get("rho_hi", 0.99)), npoints)
        for n in (6, 10, 15):
            for rho in utils:
                rows.append((n, float(rho), erlang_c(n, rho * n)))
        return ["n", "utilization", "delay_prob"], rows
    if which == "fig2":
        thetas = np.linspace(0.0, 1.0, npoints)
        rows = [
            (float(t), physician_utility(Mode.A, float(t), p), physician_utility(Mode.I, float(t), p))
            for t in thetas
        ]
        return ["theta", "utility_a", "utility_i"], rows
    if which == "fig3a":
        l_grid = np.linspace(float(opts.get("l_lo", 800.0)), float(opts.get("l_hi", 5000.0)), npoints)
        rows = [
            (float(big_l), threshold(dataclasses.replace(p, big_l=float(big_l))).theta_d)
            for big_l in l_grid
        ]
        return ["big_l", "theta_d"], rows
    if which == "fig3b":
        dk_grid = np.linspace(float(opts.get("dk_lo", 20.0)), float(opts.get("dk_hi", 150.0)), npoints)
        rows = [
            (float(dk), threshold(dataclasses.replace(p, k_i=p.k_a + float(dk))).theta_d)
            for dk in dk_grid
        ]
        return ["delta_k", "theta_d"], rows
    if which == "fig4":
        criterion = opts.get("criterion", "cost-optimal")
        lam_grid = np.linspace(float(opts.get("lam_lo", 25.0)), float(opts.get("lam_hi", 90.0)), int(opts.get("npoints", 14)))
        rows = []
        for lam in lam_grid:
            pl = validate(dataclasses.replace(p, lam=float(lam)))
            if criterion == "min-stable":
                n_a = min_staffing(pl.lam, pl.mu_a)
                n_i = min_staffing(pl.lam, pl.mu_i)
            elif criterion == "cost-optimal":
                theta_d = threshold(pl).theta_d
                n_a = optimize_regime(Mode.A, 0.0, min(1.0, theta_d), pl).best.n
                res_i = optimize_regime(Mode.I, min(1.0, theta_d + 1e-6), 1.0, pl)
                n_i = res_i.best.n if res_i.feasible else min_staffing(pl.lam, pl.mu_i)
            else:
                raise ValueError(f"unknown staffing criterion {criterion!r}")
            rows.append((float(lam), n_a, n_i))
        return ["lam", "n_star_a", "n_star_i"], rows
    raise ValueError(f"unknown figure id {which!r}; valid: {', '.join(FIGURE_IDS)}")
