"""Exception types raised by computations (as opposed to input validation)."""


class ComputationError(Exception):
    """Base class for errors arising inside a computation."""


class UnsupportedCase(ComputationError):
    """The closed-form evaluator has no formula for this Gauss sum."""


class UnsupportedOrder(ComputationError):
    """The index-selection construction only covers p prime or twice an odd prime."""


class RankDeficient(ComputationError):
    """The coefficient matrix does not have full column rank."""


class Inconsistent(ComputationError):
    """The linear system has no solution."""


class UnderDetermined(ComputationError):
    """Too few samples for the requested exponent window."""


class BadConditioning(ComputationError):
    """Interpolation residual exceeds the tolerance."""
