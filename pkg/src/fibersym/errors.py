"""Exception hierarchy shared by all fibersym modules."""

from __future__ import annotations


class FibersymError(ValueError):
    """Base class for every error raised by this package."""


class ShapeError(FibersymError):
    """A matrix or vector has the wrong shape for the operation."""


class DimensionError(FibersymError):
    """Two subspaces live in ambient spaces of different dimension."""


class ParseError(FibersymError):
    """A monodromy word could not be tokenized or validated."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegenerateBasisError(FibersymError):
    """The chosen fibering vector gives det(v1, v2, v3) = 0."""


class DegenerateGeometryError(FibersymError):
    """Two strands overlap along a whole segment instead of crossing."""


class InvalidFibrationError(FibersymError):
    """(m1, m2) violates the graph-link fibration condition at some index."""

    def __init__(self, n: int, m1: int, m2: int, index: int):
        super().__init__(
            f"(m1, m2) = ({m1}, {m2}) is not a fibration of K^({2 * n}): "
            f"condition fails at i = {index}"
        )
        self.index = index


class InconsistentProductError(FibersymError):
    """A cyclotomic quotient that should be a polynomial is not one."""
