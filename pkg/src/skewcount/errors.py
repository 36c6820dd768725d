"""Exception types shared across the library."""


class SkewCountError(Exception):
    """Base class for all skewcount errors."""


class ShapeError(SkewCountError, ValueError):
    """Invalid partition or skew-shape input (bad grammar included)."""


class NonMonotoneError(ShapeError):
    """Partition parts are not weakly decreasing."""


class NegativePartError(ShapeError):
    """A partition part is negative."""


class NotContainedError(ShapeError):
    """The inner partition is not contained in the outer one."""


class RowOutOfRangeError(SkewCountError, IndexError):
    """Row index outside 1..n."""


class NotSquareError(SkewCountError, ValueError):
    """Determinant requested for a non-square matrix."""


class CapExceededError(SkewCountError, RuntimeError):
    """An enumeration produced more items than the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded cap of {cap} items")
        self.cap = cap


class WrongEndpointsError(SkewCountError, ValueError):
    """Path endpoints do not match the shape's corners."""


class NotAdmissibleError(SkewCountError, ValueError):
    """Path is not contained between the shape's boundary profiles."""


class MalformedFamilyError(SkewCountError, ValueError):
    """A rhombus-path family does not have the structure an operation requires."""


class DegenerateBoundaryError(SkewCountError, RuntimeError):
    """Internal invariant violation: a region boundary walk self-intersects."""


class ComplementNotPairableError(SkewCountError, RuntimeError):
    """Internal invariant violation: leftover triangles do not pair into cells."""


class BadIndexError(SkewCountError, ValueError):
    """Requested item index outside the enumerated range."""
