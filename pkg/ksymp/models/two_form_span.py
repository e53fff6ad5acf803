"""Spans of two-forms and the quadratic forms living on them"""

import dataclasses
from typing import Any, Sequence

import numpy as np

from ksymp import linalg
from ksymp.errors import NotAntisymmetric, RankDeficient
from ksymp.models.matrix import Matrix, Vector, make_vector
from ksymp.models.polynomial import HomogeneousPoly
from ksymp.models.scalar import Backend, Scalar, Scalars


@dataclasses.dataclass(frozen=True)
class TwoFormSpan:
    """A k-dimensional space of antisymmetric forms on an even-dimensional V"""

    forms: tuple[Matrix, ...]
    scalars: Scalars = Scalars.REAL
    real_structure: bool = False
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "forms", tuple(self.forms))
        object.__setattr__(self, "notes", tuple(self.notes))
        if not self.forms:
            raise RankDeficient("a span needs at least one form")
        size = self.forms[0].rows
        for index, form in enumerate(self.forms):
            if form.shape != (size, size):
                raise NotAntisymmetric(f"form {index} has shape {form.shape}, expected ({size}, {size})")
            if not form.is_antisymmetric():
                raise NotAntisymmetric(f"form {index} is not antisymmetric")
        if linalg.rank(self.stacked()) < len(self.forms):
            raise RankDeficient("basis forms are linearly dependent")

    @property
    def backend(self) -> Backend:
        """Backend of the form entries"""
        return self.forms[0].backend

    @property
    def dim_v(self) -> int:
        """Dimension of the underlying space"""
        return self.forms[0].rows

    @property
    def k(self) -> int:
        """Dimension of the span"""
        return len(self.forms)

    @property
    def n(self) -> int:
        """dim V / 4 (only meaningful when that divides evenly)"""
        return self.dim_v // 4

    def stacked(self) -> Matrix:
        """k × dim_v² matrix of flattened forms"""
        return Matrix.from_rows([list(form.flatten()) for form in self.forms], self.backend)

    def form(self, coefficients: Sequence[Any]) -> Matrix:
        """Σ t_i ω_i"""
        if len(coefficients) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coefficients)}")
        return linalg.linear_combination(
            [self.backend.coerce(value) for value in coefficients], list(self.forms)
        )

    def astype(self, backend: Backend) -> "TwoFormSpan":
        """Convert every form to another backend"""
        return dataclasses.replace(self, forms=tuple(form.astype(backend) for form in self.forms))

    def with_note(self, note: str) -> "TwoFormSpan":
        """Copy carrying an extra note"""
        return dataclasses.replace(self, notes=self.notes + (note,))


@dataclasses.dataclass(frozen=True)
class QuadraticFormOnSpan:
    """q on a span, with p = c · qⁿ for the Pfaffian (or top-degree) polynomial p"""

    gram: Matrix
    c: Scalar
    power: int
    normalization: str = "leading coefficient 1"

    @property
    def backend(self) -> Backend:
        """Backend of the gram entries"""
        return self.gram.backend

    @property
    def k(self) -> int:
        """Number of variables"""
        return self.gram.rows

    def bilinear(self, x: Sequence[Any], y: Sequence[Any]) -> Scalar:
        """q(x, y) = xᵀ G y"""
        left = make_vector(x, self.backend)
        right = make_vector(y, self.backend)
        return self.backend.coerce(left @ self.gram.entries @ right) if self.k else self.backend.zero()

    def value(self, x: Sequence[Any]) -> Scalar:
        """q(x, x)"""
        return self.bilinear(x, x)

    def as_poly(self) -> HomogeneousPoly:
        """q as a quadratic polynomial"""
        return HomogeneousPoly.from_gram(self.gram)

    def rank(self) -> int:
        """Rank of the gram matrix"""
        return linalg.rank(self.gram)

    def is_nondegenerate(self) -> bool:
        """Whether the gram matrix is invertible"""
        return self.rank() == self.k

    def radical(self) -> list[Vector]:
        """Basis of {x : q(x, ·) = 0}"""
        return linalg.rank_kernel(self.gram).kernel

    def negated(self) -> "QuadraticFormOnSpan":
        """−q with c adjusted so that c · qⁿ is unchanged"""
        sign = -1 if self.power % 2 else 1
        return dataclasses.replace(
            self,
            gram=-self.gram,
            c=self.c * sign,
            normalization=self.normalization + "; overall sign flipped",
        )

    def is_real(self) -> bool:
        """Whether the gram matrix has real entries"""
        return self.gram.is_real()


@dataclasses.dataclass(frozen=True)
class Witness:
    """Evidence that a span is not k-symplectic"""

    kind: str
    message: str
    coefficients: tuple[Scalar, ...] | None = None
    kernel_dim: int | None = None
    monomial: tuple[int, ...] | None = None
    residual: Scalar | None = None

    @classmethod
    def for_form(cls, kind: str, message: str, coefficients: Vector, kernel_dim: int) -> "Witness":
        """A witness pointing at a specific form Σ t_i ω_i"""
        return cls(kind, message, tuple(np.asarray(coefficients).tolist()), kernel_dim)


@dataclasses.dataclass(frozen=True)
class KSymplecticReport:
    """Verdict of checking a span against the k-symplectic definition"""

    is_k_symplectic: bool
    q: QuadraticFormOnSpan | None
    q_nondegenerate: bool
    q_rank: int | None
    signature: linalg.Inertia | None
    witnesses: tuple[Witness, ...] = ()
    samples_checked: int = 0
    null_lines: int | None = None
    notes: tuple[str, ...] = ()
