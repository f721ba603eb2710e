"""Exception types shared across the package."""


class DomainError(ValueError):
    """A function was applied on an interval outside its domain.

    The usual trigger is a reciprocal-style correlation over an interval
    that contains zero.
    """


class MonotonicityError(ValueError):
    """A correlation function failed a strict monotonicity check."""
