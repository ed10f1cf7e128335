"""Platform optimization and the policy scenarios.

The platform trades off retained risk (decreasing in the liability share)
against quadratic compliance cost (increasing in it), separately within the
two behavioral regimes, then picks the cheaper regime.
"""

from liabstaff import (
    BASELINE,
    compare_scenarios,
    cost_breakdown,
    make_scenario,
    optimize_platform,
)

sol = optimize_platform(BASELINE)
win = sol.winner
print(f"Winner: Regime {win.regime.value} with theta* = {win.best.theta:.3f}, N* = {win.best.n}")
c = win.cost
print(
    f"  risk {c.risk:.0f} + congestion {c.congestion:.0f} + staffing {c.staffing:.0f} "
    f"+ compliance {c.compliance:.0f} = {c.total:.0f} $/h"
)
lose = sol.regime_i if win is sol.regime_a else sol.regime_a
print(
    f"Runner-up Regime {lose.regime.value}: theta = {lose.best.theta:.3f}, "
    f"N = {lose.best.n}, total {lose.cost.total:.0f} $/h"
)

print()
print("Cost along the liability axis at N=5, AI-assisted mode:")
for theta in (0.0, 0.2, 0.4, 0.6):
    print(f"  theta {theta:.1f}: total {cost_breakdown(theta, 5, win.regime, BASELINE).total:.0f} $/h")

print()
print("Scenario comparison (totals in $/h):")
rows = compare_scenarios([make_scenario(s) for s in ("S0", "S1", "S2", "S3", "S4")], BASELINE)
print(f"{'id':>3} {'mode':>4} {'theta':>7} {'N':>3} {'total':>9} {'vs S1':>8}")
for row in rows:
    r = row.result
    pct = f"{row.pct_vs_s1:+.1f}%" if row.pct_vs_s1 is not None else ""
    print(
        f"{r.id:>3} {r.policy.mode.value:>4} {r.policy.theta:7.3f} "
        f"{r.policy.n:3d} {r.cost.total:9.0f} {pct:>8}"
    )
