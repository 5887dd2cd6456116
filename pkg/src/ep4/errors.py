"""Exception hierarchy shared by all ep4 modules."""


class EP4Error(Exception):
    """Base class for every error raised by ep4."""


class DegreeMismatch(EP4Error, ValueError):
    pass


class NonpositiveGamma(EP4Error, ValueError):
    """gamma <= 0: the point cannot lie in the physical domain."""


class BetaOutOfRange(EP4Error, ValueError):
    pass


class DeltaTooLarge(EP4Error, ValueError):
    pass


class InvalidGrid(EP4Error, ValueError):
    pass


class NotAnEigenvalue(EP4Error, ValueError):
    pass


class NotFullEPN(EP4Error, ValueError):
    """The Jordan structure at the requested energy is not one full block."""


class ChainSolveFailure(EP4Error, ArithmeticError):
    pass


class SingularTransition(EP4Error, ArithmeticError):
    pass


class NearDefective(EP4Error, ArithmeticError):
    """Eigenvalues too close to an exceptional point for a biorthogonal basis."""


class ComplexSpectrum(EP4Error, ValueError):
    """No positive-definite metric exists for a non-real spectrum."""


class InvalidMetric(EP4Error, ValueError):
    pass
