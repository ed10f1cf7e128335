"""How congestion amplifies small service-rate changes.

The delay probability of an M/M/N queue stays modest up to ~80% utilization
and then rises sharply. That nonlinearity is why a mode switch that halves
the per-physician service rate can blow up waiting costs unless staffing
moves with it.
"""

from liabstaff import erlang_c, min_staffing, queue_metrics

print("Delay probability C(N, rho) by utilization:")
print(f"{'rho':>6} {'N=6':>8} {'N=10':>8} {'N=15':>8}")
for rho in (0.5, 0.7, 0.8, 0.9, 0.95, 0.99):
    row = [erlang_c(n, rho * n) for n in (6, 10, 15)]
    print(f"{rho:6.2f} {row[0]:8.4f} {row[1]:8.4f} {row[2]:8.4f}")

print()
print("Baseline demand: 50 patients/hour.")
print(f"AI-assisted mode (12/h per physician): min stable staffing = {min_staffing(50, 12)}")
print(f"Independent mode  (6/h per physician): min stable staffing = {min_staffing(50, 6)}")

print()
print("Performance at the headline configurations:")
for lam, mu, n, label in [(50, 12, 5, "AI-assisted, N=5"), (50, 6, 10, "independent, N=10")]:
    m = queue_metrics(lam, mu, n)
    print(
        f"  {label}: utilization {m.rho:.3f}, P(wait) {m.delay_prob:.3f}, "
        f"W_q {60 * m.w_q:.2f} min, total time {60 * m.t_total:.2f} min"
    )
