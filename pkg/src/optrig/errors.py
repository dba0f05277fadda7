"""Exception hierarchy shared by all optrig modules."""


class OptrigError(Exception):
    """Base class for all optrig-specific errors."""


class DimensionMismatch(OptrigError):
    """Operands have incompatible shapes."""


class ZeroOperator(OptrigError):
    """An operation requires a nonzero operator."""


class ZeroRelativeOperator(OptrigError):
    """The reference operator of a center-of-mass computation is zero."""


class NonFiniteObjective(OptrigError):
    """An objective returned NaN or -inf at an evaluated point."""


class NotAccretive(OptrigError):
    """The operator is not strongly accretive (Hermitian part not positive definite)."""


class SingularOperator(OptrigError):
    """The operator has a nontrivial kernel where invertibility is required."""


class ZeroImage(OptrigError):
    """The image of the supplied vector is (numerically) zero."""


class WitnessNotFound(OptrigError):
    """No unit vector meets the orthogonality witness tolerance."""


class RouteDisagreement(OptrigError):
    """Two independent computation routes produced conflicting verdicts."""
