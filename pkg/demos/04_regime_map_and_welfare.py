"""Regime structure on the demand-risk plane and the welfare gap.

High demand favors the fast AI-assisted mode; high loss severity favors the
accurate independent mode. The boundary between the two regimes slopes
upward in (arrival rate, loss severity) space.
"""

import numpy as np

from liabstaff import BASELINE, regime_boundary, regime_map, welfare_curve

lam_grid = [float(v) for v in np.linspace(25, 90, 14)]
l_grid = [float(v) for v in np.linspace(800, 5000, 15)]
cells = regime_map(BASELINE, lam_grid, l_grid)

print("Regime map (rows: loss severity high->low, cols: arrival rate low->high):")
by_coord = {(c.lam, c.big_l): c for c in cells}
for big_l in reversed(l_grid):
    line = "".join(by_coord[(lam, big_l)].winner.value for lam in lam_grid)
    print(f"  L={big_l:6.0f}  {line}")
print(f"            {'^':>1} lambda from {lam_grid[0]:.0f} to {lam_grid[-1]:.0f}")

print()
print("Boundary (bisected to +-$1):")
for pt in regime_boundary(BASELINE, [35.0, 50.0, 65.0, 80.0], 800.0, 5000.0):
    print(f"  lambda = {pt.lam:5.1f}: regime flips at L ~= {pt.l_boundary:7.1f}")

print()
print("Platform vs social optimum across loss severity ($/h):")
print(f"{'L':>6} {'platform':>9} {'social':>9} {'gap':>8}")
for big_l, s1, s4, gap, _ in welfare_curve(BASELINE, [1000.0, 2000.0, 3000.0, 4000.0]):
    print(f"{big_l:6.0f} {s1:9.0f} {s4:9.0f} {gap:8.0f}")
print()
print("Note the sign flip at high L: once the platform switches to the safer")
print("regime, its objective (which excludes the physician-borne loss share)")
print("can fall below the fully internalized social total.")
