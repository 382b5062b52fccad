"""Exception hierarchy.

Most of these signal a broken internal invariant rather than bad input;
they are raised instead of returning partial results.
"""


class KLSchurError(Exception):
    """Base class for all errors raised by the package."""


class NotDivisible(KLSchurError, ArithmeticError):
    pass


class DenominatorVanishes(KLSchurError, ArithmeticError):
    pass


class NonUniqueExtremum(KLSchurError):
    pass


class IdentityCheckFailed(KLSchurError):
    pass


class SingularGram(KLSchurError):
    pass


class ClassSplitsTwoSidedCell(KLSchurError):
    pass


class LinearDependence(KLSchurError):
    pass


class NonIntegralEntry(KLSchurError):
    pass


class NotMonomial(KLSchurError):
    pass


class NoSuitableImage(KLSchurError, ValueError):
    pass


class SizeGuardExceeded(KLSchurError, ValueError):
    pass
