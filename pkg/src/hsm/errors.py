"""Exception types shared by all modules.

Every error raised on purpose by this package derives from HsmError, so
callers (and the command line driver) can distinguish expected failure
modes from genuine bugs.
"""


class HsmError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(HsmError):
    """Malformed carrier data: wrong shape, wrong symmetry, bad descriptor."""


class NotIdempotent(HsmError):
    """The supplied element does not square to itself within tolerance."""


class NotTripotent(HsmError):
    """The supplied element is not a tripotent within tolerance."""


class Singular(HsmError):
    """An inverse was requested at a point where none exists."""


class FrameSearchFailed(HsmError):
    """Frame construction could not certify maximality or orthogonality."""


class Unsupported(HsmError):
    """The operation is not available for this variant, by design."""


class UnsupportedType(HsmError):
    """The operation is restricted to a subset of the domain types."""


class UnsupportedRank(HsmError):
    """Boundary rank index out of the admissible range."""


class NonpositiveParameter(HsmError):
    """A parameter that must be positive was not."""


class IncompatiblePair(HsmError):
    """Two structures fail the compatibility conditions linking them."""


class DegenerateH(HsmError):
    """The sesquilinear coefficient map has a singular base form."""


class NotSymmetric(HsmError):
    """The Siegel data fails the symmetry criteria."""


class NotPrincipal(HsmError):
    """The tripotent has a Peirce-zero part, so it is not principal."""


class RelationViolation(HsmError):
    """A matrix fails the defining relations of its tagged group or algebra."""


class UnknownType(HsmError):
    """Classification tag not present in the atlas."""


class Inconclusive(HsmError):
    """A numerical limit classification did not meet any decision rule."""
