"""Exception hierarchy.

Everything raised on invalid input derives from :class:`TilingError` so the
CLI can map it to exit status 1.
"""


class TilingError(ValueError):
    """Base class for all validation failures."""


# -- construction -----------------------------------------------------------

class NonManifoldEdge(TilingError):
    pass


class NonManifoldVertex(TilingError):
    pass


class OrientationMismatch(TilingError):
    pass


class DanglingVertex(TilingError):
    pass


class TopologyError(TilingError):
    """Face structure is not a closed disk (outer face count, Euler relation)."""


class GeometryError(TilingError):
    """Coordinates do not describe an embedding of the face structure."""


class NonSimplePolygon(GeometryError):
    pass


class MissingCoordinates(TilingError):
    pass


class EmptyPatch(TilingError):
    pass


# -- normalization / dual ---------------------------------------------------

class DegreeBelowThree(TilingError):
    pass


class NotEdgeToEdge(TilingError):
    pass


class NotNormalized(TilingError):
    pass


class OriginNotInterior(TilingError):
    pass


# -- cover simulator --------------------------------------------------------

class InvalidDegree(TilingError):
    pass


class NegativeIndex(TilingError):
    pass


class SlotOutOfRange(TilingError):
    pass


class DefectsUnbounded(TilingError):
    pass


# -- bound ------------------------------------------------------------------

class NonPositiveInput(TilingError):
    pass


class InconsistentAD(TilingError):
    """Area exceeds what any set of the given diameter can enclose."""


class HypothesisViolation(TilingError):
    pass


class FewerThanSixSides(HypothesisViolation):
    pass


class NonConvexTile(HypothesisViolation):
    pass


# -- layout / io ------------------------------------------------------------

class LayoutDiverged(TilingError):
    """Raised on request when layout fails; carries the best effort result."""

    def __init__(self, message, tiling=None, report=None):
        super().__init__(message)
        self.tiling = tiling
        self.report = report


class SchemaError(TilingError):
    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path
