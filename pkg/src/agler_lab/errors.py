"""Exception hierarchy shared by all agler_lab modules."""


class AglerLabError(Exception):
    """Base class for all errors raised by this package."""


class NonHermitianInput(AglerLabError):
    """Matrix deviates from Hermitian symmetry beyond tolerance."""


class DimensionMismatch(AglerLabError):
    """Operands have incompatible dimensions."""


class DomainMismatch(AglerLabError):
    """Point and family (or kernel) live on different domains."""


class NotInDisc(AglerLabError):
    """A coordinate lies outside the open unit disc."""


class SingularDenominator(AglerLabError):
    """Magic-function denominator vanished; the point is invalid."""


class DuplicatePoints(AglerLabError):
    """Two configuration points coincide within resolution."""


class AdmissibilityFailure(AglerLabError):
    """A candidate kernel failed its admissibility check."""


class DegenerateDiagonal(AglerLabError):
    """Kernel diagonal entry too small to normalize."""


class PointMismatch(AglerLabError):
    """Kernel sample and problem are on different point sets."""


class FamilyMismatch(AglerLabError):
    """Colligations built over different test-function families."""


class SingularResolvent(AglerLabError):
    """I - A*rho(E(x)) is numerically singular at the given point."""


class ConfigError(AglerLabError):
    """CLI configuration is malformed; message names the offending field."""


class SpecError(AglerLabError):
    """Sequence specification parameter out of range."""
