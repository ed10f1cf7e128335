"""Shared exception types."""


class ParameterError(ValueError):
    """A model parameter violates its required ordering or sign."""


class UnstableError(ValueError):
    """Offered load meets or exceeds capacity; the queue has no steady state."""


class InfeasibleError(ValueError):
    """The requested constraint set admits no feasible policy."""
