"""Physician mode choice as a function of the liability share.

With low liability exposure, the effort savings of confirming AI
recommendations dominate; past a critical share the extra expected liability
of the faster-but-riskier mode outweighs them and physicians switch to
independent diagnosis.
"""

import dataclasses

from liabstaff import BASELINE, Mode, best_response, physician_utility, threshold

rep = threshold(BASELINE)
print(f"Indifference share theta_d = {rep.theta_d:.4f}")
print()
print(f"{'theta':>6} {'U(A)':>8} {'U(I)':>8}  chosen mode")
for theta in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
    ua = physician_utility(Mode.A, theta, BASELINE)
    ui = physician_utility(Mode.I, theta, BASELINE)
    print(f"{theta:6.2f} {ua:8.1f} {ui:8.1f}  {best_response(theta, BASELINE).value}")

print()
print("Sensitivity of the threshold:")
print(f"  d/dq = {rep.d_dq:+.4f}   (better AI -> larger AI-assisted region)")
print(f"  d/dh = {rep.d_dh:+.4f}   (better physicians -> smaller)")
print(f"  d/dL = {rep.d_dl:+.6f} (costlier errors -> smaller)")
print(f"  d/d(k_i - k_a) = {rep.d_ddelta_k:+.4f} (harder independent work -> larger)")

print()
print("Loss severity moves the threshold hyperbolically:")
for big_l in (1000, 2000, 4000):
    p = dataclasses.replace(BASELINE, big_l=float(big_l))
    print(f"  L = {big_l}: theta_d = {threshold(p).theta_d:.3f}")
