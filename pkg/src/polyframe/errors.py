"""Exception hierarchy for polyframe."""


class PolyframeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(PolyframeError, ValueError):
    pass


class ArityError(PolyframeError, ValueError):
    pass


class DegeneracyError(PolyframeError, ValueError):
    pass


class OrderingError(PolyframeError, ValueError):
    pass


class ContainmentError(PolyframeError, ValueError):
    """A point that must be interior (usually the origin) is not."""


class ParameterError(PolyframeError, ValueError):
    pass


class FamilyError(PolyframeError, ValueError):
    pass


class NotAFrameError(PolyframeError, ValueError):
    """The vectors do not span the ambient space."""


class SizeError(PolyframeError, ValueError):
    """An enumeration would exceed its guard."""


class ApplicabilityError(PolyframeError, ValueError):
    """An inequality was requested for a polytope it does not apply to."""


class ConsistencyError(PolyframeError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class SamplingError(PolyframeError, RuntimeError):
    pass


class PolytopeFormatError(PolyframeError, ValueError):
    """Malformed polytope JSON."""
