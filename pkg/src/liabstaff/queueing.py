"""M/M/N performance measures: delay probability, waits, minimum staffing."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UnstableError

# Utilization this close to 1 produces waits dominated by rounding noise;
# treat as unstable rather than returning huge finite values.
_RHO_CEILING = 1.0 - 1e-9


@dataclass(frozen=True)
class QueueMetrics:
    """Steady-state measures for one (lambda, mu, N) configuration."""

    rho: float        # utilization, lambda / (N mu)
    delay_prob: float  # probability an arrival must wait
    w_q: float        # expected queue wait (hours)
    t_total: float    # expected system time, w_q + 1/mu (hours)


def min_staffing(lam: float, mu: float) -> int:
    """Smallest N with lam/(N mu) < 1, i.e. floor(lam/mu) + 1."""
    if lam <= 0 or mu <= 0:
        raise ValueError("rates must be positive")
    return math.floor(lam / mu) + 1


def erlang_c(n: int, offered_load: float) -> float:
    """Probability an arrival waits in an M/M/N queue with offered load a.

    Uses the Erlang-B recurrence B_k = a B_{k-1} / (k + a B_{k-1}) and the
    identity C = B_N / (1 - rho (1 - B_N)), which avoids the factorial
    overflow of the direct sum while being mathematically identical.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if offered_load < 0:
        raise ValueError("offered load must be nonnegative")
    rho = offered_load / n
    if rho > _RHO_CEILING:
        raise UnstableError(
            f"system unstable: offered load {offered_load:g} with {n} servers"
        )
    b = 1.0
    for k in range(1, n + 1):
        b = offered_load * b / (k + offered_load * b)
    return b / (1.0 - rho * (1.0 - b))


def queue_metrics(lam: float, mu: float, n: int) -> QueueMetrics:
    """Full steady-state metrics; raises UnstableError if lam >= n mu."""
    a = lam / mu
    c = erlang_c(n, a)
    w_q = c / (n * mu - lam)
    return QueueMetrics(rho=a / n, delay_prob=c, w_q=w_q, t_total=w_q + 1.0 / mu)
