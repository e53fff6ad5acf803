"""Exceptions raised by ksymp operations"""

from typing import Any


class KSympError(Exception):
    """Base class for all ksymp errors"""


class InputError(KSympError):
    """Malformed input document"""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


class NonSymmetric(KSympError):
    """Matrix expected to be symmetric is not"""


class NotAntisymmetric(KSympError):
    """Matrix expected to be antisymmetric is not"""


class OddDimension(KSympError):
    """Pfaffian requested for an odd-dimensional matrix"""


class NonInvertible(KSympError):
    """Matrix is singular"""


class SignatureMismatch(KSympError):
    """Multivectors from different Clifford algebras were combined"""


class NotUnitVector(KSympError):
    """Element is not a grade-1 vector squaring to -1"""


class NotOrthogonal(KSympError):
    """Element does not lie in the subalgebra of the orthogonal complement"""


class NotNegativeDefinite(KSympError):
    """Clifford module gram matrix is not negative definite"""


class NotSkewAdjoint(KSympError):
    """A generator is not skew-adjoint for the supplied metric"""


class DimensionNotMultipleOf4(KSympError):
    """Underlying space dimension is not of the form 4n"""


class NotAPower(KSympError):
    """Polynomial is not a constant times the n-th power of a quadric"""

    def __init__(self, message: str, monomial: tuple[int, ...] | None, residual: Any) -> None:
        super().__init__(message)
        self.monomial = monomial
        self.residual = residual


class AmbiguousFactor(KSympError):
    """Quadric extraction found more than one independent candidate"""

    def __init__(self, message: str, nullity: int) -> None:
        super().__init__(message)
        self.nullity = nullity


class NotReal(KSympError):
    """Operation requires a real structure"""


class DegenerateOmega1(KSympError):
    """The chosen form is null for q"""


class RankDeficient(KSympError):
    """Coefficient matrix does not have full row rank"""


class DegenerateInput(KSympError):
    """Input form is degenerate or not antisymmetric"""


class SignAmbiguous(KSympError):
    """The sign of the extracted form cannot be fixed"""


class NoNonNullAlpha(KSympError):
    """No class with q(alpha, alpha) != 0 was found"""


class MissingMultilinearData(KSympError):
    """Intersection model has no multilinear evaluator"""


class NoExactNullPoint(KSympError):
    """No exact null vector of the quadric was found over Q(i)"""
