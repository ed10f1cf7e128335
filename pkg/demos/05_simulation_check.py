"""Discrete-event simulation versus closed-form queue predictions.

Replays the solved optimum through a seeded M/M/N simulator and checks that
the empirical wait, utilization, and error rate land on the analytic values
within a few standard errors.
"""

from liabstaff import (
    BASELINE,
    SimConfig,
    mode_attrs,
    optimize_platform,
    queue_metrics,
    simulate,
    simulate_policy,
)

sol = optimize_platform(BASELINE)
pol = sol.winner.best
cost = sol.winner.cost
mu, err_prob, _ = mode_attrs(pol.mode, BASELINE)
analytic = queue_metrics(BASELINE.lam, mu, pol.n)

cfg = SimConfig(
    lam=BASELINE.lam,
    mu=mu,
    n=pol.n,
    customers=200_000,
    seed=42,
    error_prob=err_prob,
)
res = simulate(cfg)

print(f"Optimal policy: mode {pol.mode.value}, N = {pol.n}, theta = {pol.theta:.2f}")
print()
print(f"{'quantity':<16} {'analytic':>10} {'simulated':>10} {'stderr':>9}")
rows = [
    ("mean wait", analytic.w_q, res.mean_wait, res.wait_stderr),
    ("system time", analytic.t_total, res.mean_system_time, res.system_time_stderr),
    ("utilization", analytic.rho, res.utilization, res.utilization_stderr),
    ("error rate", err_prob, res.error_rate, res.error_rate_stderr),
]
for name, truth, est, se in rows:
    z = abs(est - truth) / se if se > 0 else float("nan")
    print(f"{name:<16} {truth:10.5f} {est:10.5f} {se:9.5f}  ({z:.1f} se)")

emp = simulate_policy(pol, BASELINE, customers=200_000, seed=42)
print()
print(f"Empirical hourly cost: {emp.breakdown.total:.2f} +- {emp.total_stderr:.2f}")
print(f"Analytic  hourly cost: {cost.total:.2f}")

again = simulate(cfg)
print()
print(f"Same seed reproduces bit-identical output: {again == res}")
