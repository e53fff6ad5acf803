"""Scalars: exact rationals (optionally Gaussian) or float64, real or complex"""

import dataclasses
import enum
import math
import numbers
from fractions import Fraction
from typing import Any, Union

from sympy.polys.domains import QQ, QQ_I

RANK_RTOL = 1e-8
IDENTITY_RTOL = 1e-9


@dataclasses.dataclass(frozen=True)
class GaussianRational:
    """An element of Q(i) wrapping a sympy `QQ_I` domain element

    Arithmetic runs in `QQ_I`; results with a zero imaginary part come back
    as plain Fractions. Instances are only created through `gaussian` and
    `from_domain`.
    """

    element: Any

    @property
    def re(self) -> Fraction:
        """Real part"""
        return _fraction(self.element.x)

    @property
    def im(self) -> Fraction:
        """Imaginary part"""
        return _fraction(self.element.y)

    real = re
    imag = im

    def conjugate(self) -> "ExactScalar":
        """Complex conjugate"""
        return from_domain(QQ_I(self.element.x, -self.element.y))

    def norm(self) -> Fraction:
        """Squared absolute value"""
        return _fraction(self.element.x**2 + self.element.y**2)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self) -> bool:
        return bool(self.element)

    def __neg__(self) -> "ExactScalar":
        return from_domain(-self.element)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: Any) -> "ExactScalar":
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        return from_domain(self.element + other_element)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ExactScalar":
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        return from_domain(self.element - other_element)

    def __rsub__(self, other: Any) -> "ExactScalar":
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        return from_domain(other_element - self.element)

    def __mul__(self, other: Any) -> "ExactScalar":
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        return from_domain(self.element * other_element)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "ExactScalar":
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        if not other_element:
            raise ZeroDivisionError("division by zero in Q(i)")
        return from_domain(self.element / other_element)

    def __rtruediv__(self, other: Any) -> "ExactScalar":
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        return from_domain(other_element / self.element)

    def __pow__(self, exponent: int) -> "ExactScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return from_domain(QQ_I.one / self.element ** (-exponent))
        return from_domain(self.element**exponent)

    def __eq__(self, other: object) -> bool:
        other_element = _gaussian_element(other)
        if other_element is None:
            return NotImplemented
        return self.element.x == other_element.x and self.element.y == other_element.y

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


ExactScalar = Union[Fraction, GaussianRational]
Scalar = Union[Fraction, GaussianRational, float, complex]


def _fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _rational_element(value: Fraction) -> Any:
    return QQ(value.numerator, value.denominator)


def _gaussian_element(value: Any) -> Any | None:
    if isinstance(value, GaussianRational):
        return value.element
    if isinstance(value, numbers.Rational):
        return QQ_I(_rational_element(Fraction(value)), QQ.zero)
    return None


def to_domain(value: ExactScalar, domain: Any) -> Any:
    """An exact scalar as an element of the sympy domain QQ or QQ_I"""
    if domain == QQ:
        if isinstance(value, GaussianRational):
            raise ValueError(f"{value} is not rational")
        return _rational_element(Fraction(value))
    return _gaussian_element(value)


def from_domain(element: Any) -> ExactScalar:
    """A QQ or QQ_I element as a Fraction, or a GaussianRational when it is not real"""
    if QQ_I.of_type(element):
        if not element.y:
            return _fraction(element.x)
        return GaussianRational(element)
    return _fraction(element)


def gaussian(re: Any, im: Any = 0) -> ExactScalar:
    """Build an exact scalar, collapsing to a Fraction when the imaginary part is 0"""
    re_frac, im_frac = Fraction(re), Fraction(im)
    if im_frac == 0:
        return re_frac
    return GaussianRational(QQ_I(_rational_element(re_frac), _rational_element(im_frac)))


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer or a decimal literal into a Fraction"""
    return Fraction(text.strip())


class Backend(enum.Enum):
    """Arithmetic backend a computation runs on"""

    EXACT = "exact"
    FLOAT64 = "float64"

    @property
    def is_exact(self) -> bool:
        """Whether values are exact rationals"""
        return self is Backend.EXACT

    def coerce(self, value: Any) -> Scalar:
        """Convert a python/numpy number or "p/q" string into this backend's scalar type"""
        if self is Backend.EXACT:
            return _to_exact(value)
        return _to_float(value)

    def zero(self) -> Scalar:
        """Additive identity"""
        return Fraction(0) if self.is_exact else 0.0

    def one(self) -> Scalar:
        """Multiplicative identity"""
        return Fraction(1) if self.is_exact else 1.0

    def is_zero(self, value: Any, scale: float = 1.0, rtol: float = RANK_RTOL) -> bool:
        """Zero test: exact equality, or |value| <= rtol * scale for floats"""
        if self.is_exact:
            return value == 0
        return abs(value) <= rtol * max(scale, 0.0)

    def dtype(self, is_complex: bool = False) -> Any:
        """numpy dtype for arrays of this backend"""
        if self.is_exact:
            return object
        return complex if is_complex else float


def _to_exact(value: Any) -> ExactScalar:
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, numbers.Real):
        return Fraction(repr(float(value)))
    if isinstance(value, numbers.Complex):
        return gaussian(Fraction(repr(value.real)), Fraction(repr(value.imag)))
    raise TypeError(f"cannot convert {value!r} to an exact scalar")


def _to_float(value: Any) -> float | complex:
    if isinstance(value, GaussianRational):
        return complex(value)
    if isinstance(value, str):
        return float(parse_rational(value))
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, numbers.Complex):
        value = complex(value)
        return value.real if value.imag == 0 else value
    raise TypeError(f"cannot convert {value!r} to a float scalar")


def is_real_scalar(value: Any, backend: Backend = Backend.EXACT) -> bool:
    """Whether a scalar has no imaginary part (within tolerance for floats)"""
    if isinstance(value, GaussianRational):
        return False
    if isinstance(value, complex):
        return backend.is_zero(value.imag, max(1.0, abs(value)), IDENTITY_RTOL)
    return True


def real_part(value: Any) -> Any:
    """Real part of a scalar, keeping exact values exact"""
    if isinstance(value, GaussianRational):
        return value.re
    if isinstance(value, complex):
        return value.real
    return value


def sign_of(value: Any, backend: Backend = Backend.EXACT, scale: float = 1.0) -> int:
    """Sign of a real scalar under the backend's zero test"""
    value = real_part(value)
    if backend.is_zero(value, scale):
        return 0
    return 1 if value > 0 else -1


class Scalars(enum.Enum):
    """Ground field: ℝ or ℂ"""

    REAL = "real"
    COMPLEX = "complex"


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    numerator, denominator = value.numerator, value.denominator
    root_num, root_den = math.isqrt(numerator), math.isqrt(denominator)
    if root_num * root_num == numerator and root_den * root_den == denominator:
        return Fraction(root_num, root_den)
    return None


def exact_sqrt(value: Any) -> ExactScalar | None:
    """A square root in Q(i), or None when the value is not a square there"""
    value = _to_exact(value)
    if isinstance(value, Fraction):
        if value >= 0:
            return _rational_sqrt(value)
        root = _rational_sqrt(-value)
        return None if root is None else gaussian(0, root)
    norm_root = _rational_sqrt(value.norm())
    if norm_root is None:
        return None
    real = _rational_sqrt((value.re + norm_root) / 2)
    if real is None or real == 0:
        imag = _rational_sqrt((norm_root - value.re) / 2)
        if imag is None or imag == 0:
            return None
        return gaussian(value.im / (2 * imag), imag)
    return gaussian(real, value.im / (2 * real))
