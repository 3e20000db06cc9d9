"""Exception hierarchy for chebalg."""


class ChebAlgError(Exception):
    """Base class for every error raised by this package."""


class ZeroPolynomial(ChebAlgError, ValueError):
    pass


class BothZero(ChebAlgError, ValueError):
    pass


class NotDivisible(ChebAlgError, ArithmeticError):
    pass


class UnsupportedKind(ChebAlgError, ValueError):
    pass


class NonIntegralCoefficient(ChebAlgError, ArithmeticError):
    """A rescaled polynomial that must be integral turned out not to be (a bug)."""


class MismatchedDiscriminant(ChebAlgError, ValueError):
    pass


class ZeroDivisor(ChebAlgError, ZeroDivisionError):
    pass


class ExcludedPoint(ChebAlgError, ValueError):
    pass


class InternalNonRationalResult(ChebAlgError, ArithmeticError):
    """A value that must be rational kept a nonzero sqrt(d) component (a bug)."""


class NotSquarefree(ChebAlgError, ValueError):
    pass


class EndpointIsRoot(ChebAlgError, ValueError):
    pass
