"""Homogeneous multivariate polynomials over a backend"""

import dataclasses
from typing import Any, Iterator, Mapping, Sequence

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.rings import PolyRing

from ksymp.helpers.combinatorics import (
    Exponents,
    add_exponents,
    monomials,
    unit_exponent,
)
from ksymp.models.matrix import Matrix
from ksymp.models.scalar import (
    IDENTITY_RTOL,
    Backend,
    Scalar,
    from_domain,
    is_real_scalar,
    to_domain,
)


def _poly_ring(num_vars: int, domain: Any) -> PolyRing:
    return PolyRing([f"t{i}" for i in range(num_vars)], domain)


@dataclasses.dataclass(frozen=True, eq=False)
class HomogeneousPoly:
    """A homogeneous polynomial of a fixed degree in `num_vars` variables

    Coefficients are kept sparse, keyed by exponent vector. Exactly-zero
    coefficients are never stored. Exact products and powers are computed in
    a sympy PolyRing over QQ or QQ_I.
    """

    num_vars: int
    degree: int
    coefficients: Mapping[Exponents, Scalar]
    backend: Backend = Backend.EXACT

    def __post_init__(self) -> None:
        cleaned: dict[Exponents, Scalar] = {}
        for exponents, value in self.coefficients.items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != self.num_vars:
                raise ValueError(f"exponent {exponents} does not have {self.num_vars} entries")
            if sum(exponents) != self.degree or any(e < 0 for e in exponents):
                raise ValueError(f"exponent {exponents} is not of degree {self.degree}")
            value = self.backend.coerce(value)
            if value != 0:
                cleaned[exponents] = value
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def zero(cls, num_vars: int, degree: int, backend: Backend = Backend.EXACT) -> "HomogeneousPoly":
        """The zero polynomial"""
        return cls(num_vars, degree, {}, backend)

    @classmethod
    def constant(cls, num_vars: int, value: Any, backend: Backend = Backend.EXACT) -> "HomogeneousPoly":
        """A degree-0 polynomial"""
        return cls(num_vars, 0, {(0,) * num_vars: value}, backend)

    @classmethod
    def variable(cls, num_vars: int, index: int, backend: Backend = Backend.EXACT) -> "HomogeneousPoly":
        """The linear polynomial t_index"""
        return cls(num_vars, 1, {unit_exponent(num_vars, index): 1}, backend)

    @classmethod
    def linear(cls, coefficients: Sequence[Any], backend: Backend = Backend.EXACT) -> "HomogeneousPoly":
        """Σ c_i t_i"""
        num_vars = len(coefficients)
        return cls(
            num_vars,
            1,
            {unit_exponent(num_vars, i): value for i, value in enumerate(coefficients)},
            backend,
        )

    @classmethod
    def from_gram(cls, gram: Matrix) -> "HomogeneousPoly":
        """The quadratic form tᵀ G t of a symmetric matrix"""
        size = gram.rows
        coefficients: dict[Exponents, Scalar] = {}
        for i in range(size):
            for j in range(i, size):
                exponents = add_exponents(unit_exponent(size, i), unit_exponent(size, j))
                value = gram[i, i] if i == j else gram[i, j] + gram[j, i]
                coefficients[exponents] = value
        return cls(size, 2, coefficients, gram.backend)

    def to_gram(self) -> Matrix:
        """Symmetric matrix G of a quadratic form: G_ii = a_ii, G_ij = a_ij / 2"""
        if self.degree != 2:
            raise ValueError(f"only quadratic forms have a gram matrix, degree is {self.degree}")
        size = self.num_vars
        half = self.backend.coerce("1/2")
        rows: list[list[Any]] = [[self.backend.zero()] * size for _ in range(size)]
        for exponents, value in self.coefficients.items():
            indices = [i for i, e in enumerate(exponents) for _ in range(e)]
            i, j = indices
            if i == j:
                rows[i][i] = value
            else:
                rows[i][j] = rows[j][i] = value * half
        return Matrix.from_rows(rows, self.backend)

    def coefficient(self, exponents: Exponents) -> Scalar:
        """Coefficient of a monomial (zero if absent)"""
        return self.coefficients.get(tuple(exponents), self.backend.zero())

    def monomials(self) -> tuple[Exponents, ...]:
        """All monomials of this degree, lexicographically descending"""
        return monomials(self.num_vars, self.degree)

    def terms(self) -> Iterator[tuple[Exponents, Scalar]]:
        """Nonzero terms in lexicographically descending monomial order"""
        for exponents in self.monomials():
            if exponents in self.coefficients:
                yield exponents, self.coefficients[exponents]

    def leading_term(self) -> tuple[Exponents, Scalar] | None:
        """First nonzero term in lexicographically descending order"""
        for exponents, value in self.terms():
            if not self.backend.is_zero(value, self.max_abs()):
                return exponents, value
        return None

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes"""
        if self.backend.is_exact:
            return not self.coefficients
        return self.max_abs() <= IDENTITY_RTOL

    def max_abs(self) -> float:
        """Largest absolute coefficient"""
        return max((abs(value) for value in self.coefficients.values()), default=0.0)

    def evaluate(self, point: Sequence[Any]) -> Scalar:
        """Value at a point, summed monomial by monomial"""
        if len(point) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} coordinates, got {len(point)}")
        total = self.backend.zero()
        for exponents, value in self.coefficients.items():
            term = value
            for coordinate, exponent in zip(point, exponents):
                if exponent:
                    term = term * coordinate**exponent
            total = total + term
        return total

    def _check_compatible(self, other: "HomogeneousPoly") -> None:
        if self.num_vars != other.num_vars or self.degree != other.degree:
            raise ValueError(
                f"cannot combine polynomials of shape ({self.num_vars}, {self.degree}) "
                f"and ({other.num_vars}, {other.degree})"
            )

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compatible(other)
        coefficients = dict(self.coefficients)
        for exponents, value in other.coefficients.items():
            coefficients[exponents] = coefficients.get(exponents, self.backend.zero()) + value
        return HomogeneousPoly(self.num_vars, self.degree, coefficients, self.backend)

    def __neg__(self) -> "HomogeneousPoly":
        return self.scale(-1)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, factor: Any) -> "HomogeneousPoly":
        """Multiply every coefficient by a scalar"""
        factor = self.backend.coerce(factor)
        return HomogeneousPoly(
            self.num_vars,
            self.degree,
            {exponents: value * factor for exponents, value in self.coefficients.items()},
            self.backend,
        )

    def _domain(self, *others: "HomogeneousPoly") -> Any:
        polys = (self, *others)
        real = all(is_real_scalar(value) for poly in polys for value in poly.coefficients.values())
        return QQ if real else QQ_I

    def _to_ring(self, domain: Any) -> Any:
        ring = _poly_ring(self.num_vars, domain)
        return ring.from_dict({e: to_domain(v, domain) for e, v in self.coefficients.items()})

    def _from_ring(self, element: Any, degree: int) -> "HomogeneousPoly":
        coefficients = {tuple(e): from_domain(v) for e, v in element.items()}
        return HomogeneousPoly(self.num_vars, degree, coefficients, self.backend)

    def __mul__(self, other: Any) -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return self.scale(other)
        if self.num_vars != other.num_vars:
            raise ValueError("cannot multiply polynomials in different numbers of variables")
        if self.backend.is_exact and other.backend.is_exact and self.num_vars:
            domain = self._domain(other)
            product = self._to_ring(domain) * other._to_ring(domain)
            return self._from_ring(product, self.degree + other.degree)
        coefficients: dict[Exponents, Scalar] = {}
        for left, left_value in self.coefficients.items():
            for right, right_value in other.coefficients.items():
                exponents = add_exponents(left, right)
                coefficients[exponents] = (
                    coefficients.get(exponents, self.backend.zero()) + left_value * right_value
                )
        return HomogeneousPoly(self.num_vars, self.degree + other.degree, coefficients, self.backend)

    def __rmul__(self, other: Any) -> "HomogeneousPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "HomogeneousPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        if self.backend.is_exact and self.num_vars:
            return self._from_ring(self._to_ring(self._domain()) ** exponent, self.degree * exponent)
        result = HomogeneousPoly.constant(self.num_vars, 1, self.backend)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def partial(self, index: int) -> "HomogeneousPoly":
        """∂/∂t_index, a polynomial of degree one less"""
        if self.degree == 0:
            return HomogeneousPoly.zero(self.num_vars, 0, self.backend)
        coefficients: dict[Exponents, Scalar] = {}
        for exponents, value in self.coefficients.items():
            power = exponents[index]
            if power:
                lowered = tuple(e - 1 if i == index else e for i, e in enumerate(exponents))
                coefficients[lowered] = value * power
        return HomogeneousPoly(self.num_vars, self.degree - 1, coefficients, self.backend)

    def astype(self, backend: Backend) -> "HomogeneousPoly":
        """Convert coefficients to another backend"""
        if backend is self.backend:
            return self
        return HomogeneousPoly(self.num_vars, self.degree, dict(self.coefficients), backend)

    def is_close(self, other: "HomogeneousPoly", rtol: float = IDENTITY_RTOL) -> bool:
        """Exact equality, or coefficientwise relative closeness for floats"""
        if self.num_vars != other.num_vars or self.degree != other.degree:
            return False
        if self.backend.is_exact and other.backend.is_exact:
            return not (self - other).coefficients
        difference = self.astype(Backend.FLOAT64) - other.astype(Backend.FLOAT64)
        scale = max(1.0, self.max_abs(), other.max_abs())
        return difference.max_abs() <= rtol * scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.degree == other.degree
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.num_vars, self.degree, frozenset(self.coefficients.items())))

    def __repr__(self) -> str:
        terms = " + ".join(f"{value}*t^{exponents}" for exponents, value in self.terms())
        return f"HomogeneousPoly({terms or '0'}; degree={self.degree})"
