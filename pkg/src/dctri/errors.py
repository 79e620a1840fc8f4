"""Shared exception types."""


class DegenerateInputError(ValueError):
    """Input violates a non-degeneracy requirement (e.g. all points collinear)."""


class IdenticalLinesError(ValueError):
    """The two lines coincide, so they have no unique intersection."""


class PreconditionError(ValueError):
    """A documented operation precondition does not hold."""


class NotSimplePolygonError(ValueError):
    """Polygon edges cross, so the vertex list does not bound a simple polygon."""


class SweepDegeneracyError(RuntimeError):
    """The event sweep hit coinciding event times; caller should fall back."""


class InfeasibleSplitError(RuntimeError):
    """No admissible split point exists (should not happen for valid inputs)."""


class MalformedFileError(ValueError):
    """A data file does not match its documented layout."""


class SizeBoundError(ValueError):
    """Requested computation exceeds a configured size bound."""


class SwapInvariantError(RuntimeError):
    """A swap produced a pair of triangles that still intersect."""
