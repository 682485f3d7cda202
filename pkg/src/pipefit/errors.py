"""Exception types raised by pipefit."""


class PipefitError(ValueError):
    """Base class for domain errors (bad geometry, impossible fittings)."""


class InfeasibleVertexError(PipefitError):
    """Edges cannot meet symmetrically with the requested face angle."""


class ArityMismatchError(PipefitError):
    """Hub arm count differs from the number of edges at the vertex."""


class DegenerateJointError(PipefitError):
    """Joint geometry collapses (edge-to-axis angle of zero)."""


class BendRangeError(PipefitError):
    """Elbow bend pushes the edge direction outside the realizable range."""


class NonPositiveCutError(PipefitError):
    """A computed pipe cut length is zero or negative."""


class CatalogError(PipefitError):
    """Catalog document could not be parsed or failed validation."""


class EmptyCatalogError(CatalogError):
    """Operation needs at least one elbow but the catalog has none."""
