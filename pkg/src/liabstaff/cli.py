"""Command-line entry point.

Exit codes: 0 success, 1 domain errors (infeasible constraint sets, unstable
queues), 2 usage and config-parse errors. All currency output is dollars per
hour unless --thousands is given.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

import numpy as np

from . import __version__
from .analysis import (
    FIGURE_IDS,
    figure_data,
    monotone_violations,
    regime_boundary,
    regime_map,
    sensitivity_sweep,
    welfare_curve,
)
from .errors import InfeasibleError, ParameterError, UnstableError
from .output import render_csv, write_csv, write_manifest
from .params import BASELINE, ModelParams, load_params
from .physician import threshold
from .platform_opt import RegimeResult, optimize_platform
from .queueing import queue_metrics
from .scenario import (
    DEFAULT_ALPHA,
    DEFAULT_THETA_FLOOR,
    SCENARIO_IDS,
    compare_scenarios,
    make_scenario,
)
from .simulator import SimConfig, simulate

CONFIG_ENV_VAR = "LIABSTAFF_CONFIG"

SCENARIO_CSV_HEADER = [
    "id",
    "mode",
    "theta",
    "n",
    "risk",
    "congestion",
    "staffing",
    "compliance",
    "total",
    "pct_vs_s1",
]


class _UsageError(Exception):
    """Raised for argument-level problems detected after argparse."""


def _resolve_params(args) -> ModelParams:
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return BASELINE
    if not os.path.exists(path):
        raise _UsageError(f"config file not found: {path}")
    return load_params(path)


def _parse_grid(spec: str) -> tuple[str, list[float]]:
    """Parse ``name=lo:hi:npoints`` into (name, linspace)."""
    try:
        name, _, rng = spec.partition("=")
        lo_s, hi_s, n_s = rng.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError:
        raise _UsageError(
            f"bad grid spec {spec!r}; expected name=lo:hi:npoints"
        ) from None
    if n < 1:
        raise _UsageError(f"grid {spec!r} needs at least one point")
    return name.strip(), [float(v) for v in np.linspace(lo, hi, n)]


def _money(value: float, thousands: bool) -> str:
    if thousands:
        return f"{value / 1000.0:.6g}k"
    return f"{value:.6g}"


def _emit(args, header, rows, command: str, params: ModelParams, options: dict) -> None:
    """Write CSV + manifest when --out is given, else print CSV to stdout."""
    if getattr(args, "out", None):
        write_csv(args.out, header, rows)
        write_manifest(args.out, command, args.argv, params, options, __version__)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(render_csv(header, rows))


def _regime_summary(label: str, res: RegimeResult, thousands: bool) -> list[str]:
    if not res.feasible:
        return [f"{label}: infeasible (empty liability interval)"]
    b, c = res.best, res.cost
    return [
        f"{label}: theta={b.theta:.6g}, N={b.n}, total={_money(c.total, thousands)}",
        f"  risk={_money(c.risk, thousands)} congestion={_money(c.congestion, thousands)}"
        f" staffing={_money(c.staffing, thousands)} compliance={_money(c.compliance, thousands)}",
    ]


def _cmd_solve(args) -> int:
    p = _resolve_params(args)
    sol = optimize_platform(p, args.theta_lo, args.theta_hi)
    rep = threshold(p)
    win, lose = sol.winner, (sol.regime_i if sol.winner is sol.regime_a else sol.regime_a)
    if args.json:
        print(json.dumps(_solution_dict(sol, rep), indent=2, sort_keys=True))
        return 0
    print(f"winner: Regime {win.regime.value}, theta={win.best.theta:.6g}, N={win.best.n}")
    for line in _regime_summary(f"Regime {win.regime.value} (winner)", win, args.thousands):
        print(line)
    for line in _regime_summary(f"Regime {lose.regime.value} (runner-up)", lose, args.thousands):
        print(line)
    print(f"physician threshold theta_d={rep.theta_d:.6g}")
    return 0


def _solution_dict(sol, rep) -> dict:
    def reg(r: RegimeResult) -> dict:
        if not r.feasible:
            return {"regime": r.regime.value, "feasible": False}
        return {
            "regime": r.regime.value,
            "feasible": True,
            "theta": r.best.theta,
            "n": r.best.n,
            "cost": dataclasses.asdict(r.cost),
            "theta_unconstrained": r.theta_unconstrained,
            "n_searched": list(r.n_searched),
        }

    return {
        "winner": sol.winner.regime.value,
        "regime_a": reg(sol.regime_a),
        "regime_i": reg(sol.regime_i),
        "theta_d": rep.theta_d,
    }


def _cmd_threshold(args) -> int:
    p = _resolve_params(args)
    rep = threshold(p)
    if args.json:
        print(json.dumps(dataclasses.asdict(rep), indent=2, sort_keys=True))
        return 0
    print(f"theta_d = {rep.theta_d:.12g}")
    print(f"d/dq      = {rep.d_dq:.12g}")
    print(f"d/dh      = {rep.d_dh:.12g}")
    print(f"d/dL      = {rep.d_dl:.12g}")
    print(f"d/ddelta_k = {rep.d_ddelta_k:.12g}")
    return 0


def _cmd_scenario(args) -> int:
    p = _resolve_params(args)
    ids = [s.strip().upper() for s in args.scenarios.split(",") if s.strip()]
    for sid in ids:
        if sid not in SCENARIO_IDS:
            raise _UsageError(f"unknown scenario {sid!r}; valid: {', '.join(SCENARIO_IDS)}")
    specs = [make_scenario(sid, alpha=args.alpha, theta_floor=args.theta_floor) for sid in ids]
    rows = compare_scenarios(specs, p)
    csv_rows = []
    for row in rows:
        r = row.result
        if r.feasible:
            csv_rows.append(
                (
                    r.id,
                    r.policy.mode,
                    r.policy.theta,
                    r.policy.n,
                    r.cost.risk,
                    r.cost.congestion,
                    r.cost.staffing,
                    r.cost.compliance,
                    r.cost.total,
                    row.pct_vs_s1,
                )
            )
        else:
            csv_rows.append((r.id, None, None, None, None, None, None, None, None, None))
    if args.json:
        payload = [
            {
                "id": row.result.id,
                "feasible": row.result.feasible,
                "reason": row.result.reason,
                "policy": dataclasses.asdict(row.result.policy) if row.result.feasible else None,
                "cost": dataclasses.asdict(row.result.cost) if row.result.feasible else None,
                "pct_vs_s1": row.pct_vs_s1,
            }
            for row in rows
        ]
        for item in payload:
            if item["policy"]:
                item["policy"]["mode"] = item["policy"]["mode"].value
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    options = {"scenarios": ids, "alpha": args.alpha, "theta_floor": args.theta_floor}
    _emit(args, SCENARIO_CSV_HEADER, csv_rows, "scenario", p, options)
    _print_scenario_notes(rows, args.thousands)
    return 0


def _print_scenario_notes(rows, thousands: bool) -> None:
    by_id = {row.result.id: row.result for row in rows}
    s1, s4 = by_id.get("S1"), by_id.get("S4")
    if s1 and s4 and s1.feasible and s4.feasible:
        gap = s1.cost.total - s4.cost.total
        print(
            f"note: welfare gap S1-S4 = {_money(gap, thousands)} "
            f"({100 * gap / s1.cost.total:.1f}% of S1, {100 * gap / s4.cost.total:.1f}% of S4)",
            file=sys.stderr,
        )
    s0 = by_id.get("S0")
    if s0 and s0.feasible:
        print(
            "note: S0 is the cost-model value at the cost-minimizing staffing for a "
            "forced independent mode at theta=0.5; it is not calibrated to any "
            "externally published benchmark figure.",
            file=sys.stderr,
        )


def _cmd_regime_map(args) -> int:
    p = _resolve_params(args)
    grids = {"lambda": None, "big_l": None}
    for spec in args.grid or []:
        name, values = _parse_grid(spec)
        if name not in grids:
            raise _UsageError(f"regime-map grids must be lambda=... or big_l=..., got {name!r}")
        grids[name] = values
    lam_grid = grids["lambda"] or [float(v) for v in np.linspace(25, 90, 25)]
    l_grid = grids["big_l"] or [float(v) for v in np.linspace(800, 5000, 25)]
    cells = regime_map(p, lam_grid, l_grid, jobs=args.jobs)
    header = ["lambda", "big_l", "winner", "theta_star", "n_star", "total", "error"]
    rows = [
        (c.lam, c.big_l, c.winner, c.theta_star, c.n_star, c.total, c.error or "")
        for c in cells
    ]
    options = {"lambda_grid": lam_grid, "l_grid": l_grid, "jobs": args.jobs}
    _emit(args, header, rows, "regime-map", p, options)
    if args.boundary_out:
        points = regime_boundary(p, lam_grid, min(l_grid), max(l_grid), tol=args.tol)
        write_csv(args.boundary_out, ["lambda", "l_boundary"], [(pt.lam, pt.l_boundary) for pt in points])
        write_manifest(args.boundary_out, "regime-map-boundary", args.argv, p, options, __version__)
        for a, b in monotone_violations(points):
            print(
                f"warning: boundary not nondecreasing between lambda={a.lam:g} "
                f"(L={a.l_boundary:g}) and lambda={b.lam:g} (L={b.l_boundary:g})",
                file=sys.stderr,
            )
        print(f"wrote {args.boundary_out}")
    return 0


def _cmd_sweep(args) -> int:
    p = _resolve_params(args)
    name, values = _parse_grid(args.grid)
    rows = sensitivity_sweep(p, name, values)
    header = ["param_name", "param_value", "theta_star", "n_star", "total", "winner"]
    csv_rows = [
        (r.param_name, r.param_value, r.theta_star, r.n_star, r.total, r.winner)
        for r in rows
    ]
    _emit(args, header, csv_rows, "sweep", p, {"grid": {name: values}})
    return 0


def _cmd_welfare(args) -> int:
    p = _resolve_params(args)
    if args.grid:
        name, values = _parse_grid(args.grid)
        if name != "big_l":
            raise _UsageError(f"welfare sweeps big_l only, got {name!r}")
    else:
        values = [float(v) for v in np.linspace(800, 5000, 25)]
    rows = welfare_curve(p, values)
    header = ["big_l", "s1_total", "s4_total", "gap", "gap_pct_of_s4"]
    _emit(args, header, rows, "welfare", p, {"l_grid": values})
    return 0


def _cmd_figure(args) -> int:
    p = _resolve_params(args)
    options = {"npoints": args.npoints, "criterion": args.criterion}
    header, rows = figure_data(args.which, p, options)
    _emit(args, header, rows, "figure", p, {"which": args.which, **options})
    return 0


def _cmd_simulate(args) -> int:
    cfg = SimConfig(
        lam=args.lam,
        mu=args.mu,
        n=args.n,
        customers=args.customers,
        seed=args.seed,
        warmup=args.warmup,
        error_prob=args.error_prob,
    )
    result = simulate(cfg)
    analytic = queue_metrics(cfg.lam, cfg.mu, cfg.n)
    header = [
        "mean_wait",
        "wait_stderr",
        "mean_system_time",
        "system_time_stderr",
        "utilization",
        "utilization_stderr",
        "error_rate",
        "error_rate_stderr",
        "customers_counted",
        "analytic_w_q",
        "analytic_rho",
        "rng_algorithm",
        "seed",
    ]
    row = (
        result.mean_wait,
        result.wait_stderr,
        result.mean_system_time,
        result.system_time_stderr,
        result.utilization,
        result.utilization_stderr,
        result.error_rate,
        result.error_rate_stderr,
        result.customers_counted,
        analytic.w_q,
        analytic.rho,
        result.rng_algorithm,
        args.seed,
    )
    options = dataclasses.asdict(cfg)
    if args.out:
        write_csv(args.out, header, [row])
        write_manifest(args.out, "simulate", args.argv, BASELINE, options, __version__)
        print(f"wrote {args.out}")
    else:
        print(f"mean_wait = {result.mean_wait:.6g} +- {result.wait_stderr:.2g} h "
              f"(analytic {analytic.w_q:.6g} h)")
        print(f"utilization = {result.utilization:.4g} (analytic {analytic.rho:.4g})")
        print(f"error_rate = {result.error_rate:.4g} +- {result.error_rate_stderr:.2g}")
    return 0


_VALIDATE_CONFIGS = ((50.0, 12.0, 5), (50.0, 6.0, 10))


def _cmd_validate(args) -> int:
    ok = True
    print(f"{'lambda':>8} {'mu':>6} {'n':>3} {'sim_wq':>10} {'analytic':>10} {'stderr':>9}  result")
    for lam, mu, n in _VALIDATE_CONFIGS:
        cfg = SimConfig(lam=lam, mu=mu, n=n, customers=args.customers, seed=args.seed)
        res = simulate(cfg)
        wq = queue_metrics(lam, mu, n).w_q
        passed = abs(res.mean_wait - wq) <= 3.0 * res.wait_stderr
        ok = ok and passed
        print(
            f"{lam:8g} {mu:6g} {n:3d} {res.mean_wait:10.5f} {wq:10.5f} "
            f"{res.wait_stderr:9.5f}  {'PASS' if passed else 'FAIL'}"
        )
    return 0 if ok else 1


def _cmd_rerun(args) -> int:
    with open(args.manifest) as fh:
        manifest = json.load(fh)
    return main(manifest["argv"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liabstaff",
        description="Liability-share and staffing optimization for AI-assisted "
        "consultation platforms.",
    )
    parser.add_argument("--version", action="version", version=f"liabstaff {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, thousands=False):
        sp.add_argument(
            "--config",
            help=f"key = value parameter file (default: ${CONFIG_ENV_VAR} or built-in baseline)",
        )
        if thousands:
            sp.add_argument(
                "--thousands",
                action="store_true",
                help="display currency in thousands of dollars",
            )

    sp = sub.add_parser("solve", help="optimal liability share, staffing, and regime")
    common(sp, thousands=True)
    sp.add_argument("--theta-lo", type=float, default=0.0, help="lower liability bound (default 0)")
    sp.add_argument("--theta-hi", type=float, default=1.0, help="upper liability bound (default 1)")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("threshold", help="physician indifference share and sensitivities")
    common(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_threshold)

    sp = sub.add_parser("scenario", help="run policy scenarios S0..S4")
    common(sp, thousands=True)
    sp.add_argument("--scenarios", default=",".join(SCENARIO_IDS), help="comma list, e.g. S0,S1,S4")
    sp.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                    help=f"minimum platform liability fraction for S2 (default {DEFAULT_ALPHA})")
    sp.add_argument("--theta-floor", type=float, default=DEFAULT_THETA_FLOOR,
                    help=f"minimum physician share for S3 (default {DEFAULT_THETA_FLOOR})")
    sp.add_argument("--out", help="CSV output path (default: print to stdout)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_scenario)

    sp = sub.add_parser("regime-map", help="optimal-mode map over the (lambda, L) plane")
    common(sp)
    sp.add_argument("--grid", action="append",
                    help="lambda=lo:hi:n or big_l=lo:hi:n (repeatable; defaults 25:90:25, 800:5000:25)")
    sp.add_argument("--out", help="CSV output path")
    sp.add_argument("--boundary-out", help="also bisect and write the regime boundary CSV")
    sp.add_argument("--tol", type=float, default=1.0, help="boundary bisection tolerance in dollars")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                    help="parallel workers for the sweep (default: machine parallelism)")
    sp.set_defaults(func=_cmd_regime_map)

    sp = sub.add_parser("sweep", help="one-parameter sensitivity sweep")
    common(sp)
    sp.add_argument("--grid", required=True, help="name=lo:hi:n, e.g. q=0.80:0.94:15")
    sp.add_argument("--out", help="CSV output path")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("welfare", help="platform-vs-social cost gap across loss severity")
    common(sp)
    sp.add_argument("--grid", help="big_l=lo:hi:n (default 800:5000:25)")
    sp.add_argument("--out", help="CSV output path")
    sp.set_defaults(func=_cmd_welfare)

    sp = sub.add_parser("figure", help="plot-ready data tables for the expository figures")
    common(sp)
    sp.add_argument("--which", required=True, choices=FIGURE_IDS)
    sp.add_argument("--npoints", type=int, default=101)
    sp.add_argument("--criterion", default="cost-optimal", choices=("cost-optimal", "min-stable"),
                    help="staffing criterion for fig4")
    sp.add_argument("--out", help="CSV output path")
    sp.set_defaults(func=_cmd_figure)

    sp = sub.add_parser("simulate", help="seeded discrete-event M/M/N replication")
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--mu", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--customers", type=int, default=200_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--error-prob", type=float, default=0.0)
    sp.add_argument("--warmup", type=int, default=None, help="customers discarded (default 10%%)")
    sp.add_argument("--out", help="CSV output path")
    sp.set_defaults(func=_cmd_simulate)

    sp = sub.add_parser("validate", help="simulated waits vs analytic formulas, pass/fail table")
    sp.add_argument("--customers", type=int, default=200_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("rerun", help="re-run a command from an output manifest")
    sp.add_argument("--manifest", required=True)
    sp.set_defaults(func=_cmd_rerun)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except (_UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleError, UnstableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
