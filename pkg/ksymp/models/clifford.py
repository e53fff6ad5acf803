"""Clifford algebra values: signatures, multivectors and algebra descriptions"""

import dataclasses
import enum
from typing import Any, Iterator, Mapping, NamedTuple, Sequence

from ksymp.errors import SignatureMismatch
from ksymp.helpers.combinatorics import blade_indices, popcount, reorder_sign
from ksymp.models.scalar import IDENTITY_RTOL, Backend, Scalar, Scalars


@dataclasses.dataclass(frozen=True)
class Signature:
    """(r minuses, s pluses): e_i² = −1 for i < r and +1 otherwise"""

    minuses: int
    pluses: int

    def __post_init__(self) -> None:
        if self.minuses < 0 or self.pluses < 0:
            raise ValueError(f"signature counts must be non-negative, got {self}")

    @property
    def dimension(self) -> int:
        """Number of generators r + s"""
        return self.minuses + self.pluses

    @property
    def algebra_dimension(self) -> int:
        """2^(r+s)"""
        return 1 << self.dimension

    @property
    def is_negative_definite(self) -> bool:
        """Whether every generator squares to −1"""
        return self.pluses == 0

    def square(self, index: int) -> int:
        """q(e_i, e_i)"""
        if not 0 <= index < self.dimension:
            raise IndexError(f"generator {index} out of range for {self}")
        return -1 if index < self.minuses else 1

    def as_list(self) -> list[int]:
        """[r, s]"""
        return [self.minuses, self.pluses]

    def __str__(self) -> str:
        return f"Cl({self.minuses},{self.pluses})"


@dataclasses.dataclass(frozen=True, eq=False)
class Multivector:
    """An element of Cl(r,s) as coefficients over canonical basis blades

    Blade i₁ < … < i_g is keyed by the bitmask with bits i₁ … i_g set.
    """

    signature: Signature
    coefficients: Mapping[int, Scalar]
    backend: Backend = Backend.EXACT

    def __post_init__(self) -> None:
        cleaned: dict[int, Scalar] = {}
        for mask, value in self.coefficients.items():
            mask = int(mask)
            if not 0 <= mask < self.signature.algebra_dimension:
                raise ValueError(f"blade {mask} outside {self.signature}")
            value = self.backend.coerce(value)
            if value != 0:
                cleaned[mask] = value
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def scalar(cls, signature: Signature, value: Any, backend: Backend = Backend.EXACT) -> "Multivector":
        """value · 1"""
        return cls(signature, {0: value}, backend)

    @classmethod
    def basis_vector(cls, signature: Signature, index: int, backend: Backend = Backend.EXACT) -> "Multivector":
        """The generator e_index"""
        signature.square(index)
        return cls(signature, {1 << index: 1}, backend)

    @classmethod
    def vector(cls, signature: Signature, values: Sequence[Any], backend: Backend = Backend.EXACT) -> "Multivector":
        """Σ v_i e_i"""
        if len(values) != signature.dimension:
            raise ValueError(f"expected {signature.dimension} coordinates, got {len(values)}")
        return cls(signature, {1 << i: value for i, value in enumerate(values)}, backend)

    @classmethod
    def blade(cls, signature: Signature, indices: Sequence[int], backend: Backend = Backend.EXACT) -> "Multivector":
        """The product e_{i₁} · … · e_{i_g} in the given order"""
        result = cls.scalar(signature, 1, backend)
        for index in indices:
            result = result * cls.basis_vector(signature, index, backend)
        return result

    def coefficient(self, mask: int) -> Scalar:
        """Coefficient of a blade"""
        return self.coefficients.get(mask, self.backend.zero())

    def terms(self) -> Iterator[tuple[int, Scalar]]:
        """(blade mask, coefficient) pairs ordered by grade then mask"""
        yield from sorted(self.coefficients.items(), key=lambda item: (popcount(item[0]), item[0]))

    def _filtered(self, keep: Any) -> "Multivector":
        return Multivector(
            self.signature,
            {mask: value for mask, value in self.coefficients.items() if keep(mask)},
            self.backend,
        )

    def grade(self, g: int) -> "Multivector":
        """Grade-g part"""
        return self._filtered(lambda mask: popcount(mask) == g)

    def even(self) -> "Multivector":
        """Component in Cl⁰"""
        return self._filtered(lambda mask: popcount(mask) % 2 == 0)

    def odd(self) -> "Multivector":
        """Component in Cl¹"""
        return self._filtered(lambda mask: popcount(mask) % 2 == 1)

    def scalar_part(self) -> Scalar:
        """Coefficient of the unit blade"""
        return self.coefficient(0)

    def grades(self) -> set[int]:
        """Grades with a nonzero component"""
        return {popcount(mask) for mask in self.coefficients}

    def is_vector(self) -> bool:
        """Whether the element is of pure grade 1 (zero included)"""
        return self.grades() <= {1}

    def vector_coordinates(self) -> list[Scalar]:
        """Coefficients of e_0 … e_{r+s−1}"""
        return [self.coefficient(1 << i) for i in range(self.signature.dimension)]

    def _with_sign(self, sign_of_grade: Any) -> "Multivector":
        return Multivector(
            self.signature,
            {mask: value * sign_of_grade(popcount(mask)) for mask, value in self.coefficients.items()},
            self.backend,
        )

    def grade_involution(self) -> "Multivector":
        """τ: +1 on even blades, −1 on odd blades"""
        return self._with_sign(lambda g: -1 if g % 2 else 1)

    def reversion(self) -> "Multivector":
        """Transpose x ↦ xᵗ: reverses each blade, sign (−1)^{g(g−1)/2}"""
        return self._with_sign(lambda g: -1 if (g * (g - 1) // 2) % 2 else 1)

    def clifford_conjugate(self) -> "Multivector":
        """x̄ = τ(xᵗ)"""
        return self.reversion().grade_involution()

    def _check_signature(self, other: "Multivector") -> None:
        if self.signature != other.signature:
            raise SignatureMismatch(f"cannot combine elements of {self.signature} and {other.signature}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_signature(other)
        coefficients = dict(self.coefficients)
        for mask, value in other.coefficients.items():
            coefficients[mask] = coefficients.get(mask, self.backend.zero()) + value
        return Multivector(self.signature, coefficients, self.backend)

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, factor: Any) -> "Multivector":
        """Multiply by a scalar"""
        factor = self.backend.coerce(factor)
        return Multivector(
            self.signature,
            {mask: value * factor for mask, value in self.coefficients.items()},
            self.backend,
        )

    def __mul__(self, other: Any) -> "Multivector":
        if not isinstance(other, Multivector):
            return self.scale(other)
        self._check_signature(other)
        product: dict[int, Scalar] = {}
        for left, left_value in self.coefficients.items():
            for right, right_value in other.coefficients.items():
                sign = reorder_sign(left, right)
                for index in blade_indices(left & right):
                    sign *= self.signature.square(index)
                mask = left ^ right
                product[mask] = product.get(mask, self.backend.zero()) + left_value * right_value * sign
        return Multivector(self.signature, product, self.backend)

    def __rmul__(self, other: Any) -> "Multivector":
        return self.scale(other)

    def is_close(self, other: "Multivector", rtol: float = IDENTITY_RTOL) -> bool:
        """Exact equality, or coefficientwise closeness for floats"""
        self._check_signature(other)
        difference = self - other
        if self.backend.is_exact and other.backend.is_exact:
            return not difference.coefficients
        scale = max([1.0] + [abs(v) for v in self.coefficients.values()] + [abs(v) for v in other.coefficients.values()])
        return all(abs(value) <= rtol * scale for value in difference.coefficients.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.signature == other.signature and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.signature, frozenset(self.coefficients.items())))

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{value}*e{''.join(str(i + 1) for i in blade_indices(mask))}" if mask else f"{value}"
            for mask, value in self.terms()
        )
        return f"Multivector({self.signature}: {terms or '0'})"


class Ring(enum.Enum):
    """Base ring of a simple summand"""

    REAL = "real"
    COMPLEX = "complex"
    QUATERNION = "quaternion"

    @property
    def real_dimension(self) -> int:
        """Dimension over ℝ"""
        return {Ring.REAL: 1, Ring.COMPLEX: 2, Ring.QUATERNION: 4}[self]

    @property
    def symbol(self) -> str:
        """Blackboard letter"""
        return {Ring.REAL: "R", Ring.COMPLEX: "C", Ring.QUATERNION: "H"}[self]


class Summand(NamedTuple):
    """Mat(size, ring)"""

    size: int
    ring: Ring


@dataclasses.dataclass(frozen=True)
class AlgebraDescription:
    """A semisimple algebra as a direct sum of matrix algebras"""

    summands: tuple[Summand, ...]
    scalars: Scalars = Scalars.REAL

    @property
    def dimension(self) -> int:
        """Dimension over the ground field"""
        if self.scalars is Scalars.COMPLEX:
            return sum(summand.size**2 for summand in self.summands)
        return sum(summand.size**2 * summand.ring.real_dimension for summand in self.summands)

    @property
    def minimal_module_dim(self) -> int:
        """Dimension over the ground field of the smallest nontrivial module"""
        smallest = self.summands[0]
        if self.scalars is Scalars.COMPLEX:
            return smallest.size
        return smallest.size * smallest.ring.real_dimension

    @property
    def is_simple(self) -> bool:
        """Whether there is a single summand"""
        return len(self.summands) == 1

    def __str__(self) -> str:
        return " ⊕ ".join(f"Mat({summand.size},{summand.ring.symbol})" for summand in self.summands)
