"""Exception types shared across the package."""


class PolyParseError(ValueError):
    """Raised when polynomial text cannot be parsed."""


class HypothesisError(ValueError):
    """Raised when an input violates a stated hypothesis.

    Examples: factor exponents not pairwise coprime, a factor that is
    required to be primitive but is not, a polynomial with zero
    constant term where the order is undefined.
    """


class CapError(RuntimeError):
    """Raised when a computation would exceed a size or budget cap."""
