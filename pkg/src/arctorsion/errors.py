"""Exception types shared across the package."""


class InvalidArc(ValueError):
    """An integer pair (m, n) with n - m < 2."""


class PreconditionError(ValueError):
    """An operation was called outside its hypothesis (e.g. a precover of a non-precovering set)."""


class TheoremViolation(AssertionError):
    """A classification branch that the underlying theorems rule out was reached.

    Reaching it means a bug in the engine, never bad input.
    """
