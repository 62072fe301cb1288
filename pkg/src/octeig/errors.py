"""Exception types shared across the package."""


class OcteigError(Exception):
    """Base class for all package-specific errors."""


class DegenerateFamily(OcteigError):
    """The associator vanishes, so the two family labels collapse."""


class NotQuaternionic(OcteigError):
    """Operation requires entries inside one quaternionic subalgebra."""


class AmbiguousSubalgebra(OcteigError):
    """Matrix is complex (or real): the containing quaternionic subalgebra is not unique."""


class SingularChange(OcteigError):
    """Requested change of off-diagonal basis has vanishing determinant."""


class ComplexRoots(OcteigError):
    """Cubic discriminant is negative beyond tolerance; the supplied r is inconsistent."""


class ExtractionFailure(OcteigError):
    """Eigenvector nullspace has the wrong numerical rank."""


class FamilyMismatch(OcteigError):
    """Vector is not in the K-eigenspace required by the projection identity."""


class ComplexProjector(OcteigError):
    """Rank-one projector is complex; the family membership predicate is undefined."""
