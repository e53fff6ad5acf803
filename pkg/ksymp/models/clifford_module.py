"""Matrix representations of Clifford algebras"""

import dataclasses
from typing import Sequence

from ksymp.helpers.combinatorics import blade_indices
from ksymp.models.clifford import Multivector, Signature
from ksymp.models.matrix import Matrix
from ksymp.models.scalar import Backend


@dataclasses.dataclass(frozen=True)
class CliffordModule:
    """Generator endomorphisms ρ(e_i) of V together with the generating gram matrix"""

    signature: Signature
    generators: tuple[Matrix, ...]
    gram: Matrix
    dimension: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(self.generators) != self.gram.rows or not self.gram.is_square:
            raise ValueError(
                f"{len(self.generators)} generators do not match a {self.gram.rows}x{self.gram.cols} gram matrix"
            )
        for generator in self.generators:
            if generator.shape != (self.dimension, self.dimension):
                raise ValueError(f"generator of shape {generator.shape} on a {self.dimension}-dimensional space")

    @classmethod
    def from_generators(
        cls, signature: Signature, generators: Sequence[Matrix], gram: Matrix | None = None
    ) -> "CliffordModule":
        """Module with the diagonal ±1 gram matrix of the signature unless one is given"""
        backend = generators[0].backend if generators else Backend.EXACT
        if gram is None:
            gram = Matrix.diagonal([signature.square(i) for i in range(signature.dimension)], backend)
        dimension = generators[0].rows if generators else 1
        return cls(signature, tuple(generators), gram, dimension)

    @property
    def backend(self) -> Backend:
        """Backend of the generator entries"""
        return self.gram.backend

    @property
    def rank(self) -> int:
        """Number of generators"""
        return len(self.generators)

    def is_nontrivial(self) -> bool:
        """Whether some generator acts by a nonzero matrix (always true without generators)"""
        return not self.generators or any(not generator.is_zero() for generator in self.generators)

    def blade_matrix(self, mask: int) -> Matrix:
        """ρ(e_{i₁} · … · e_{i_g}) for the canonical blade of a bitmask"""
        result = Matrix.identity(self.dimension, self.backend)
        for index in blade_indices(mask):
            result = result @ self.generators[index]
        return result

    def represent(self, element: Multivector) -> Matrix:
        """ρ(x) for an element of the algebra"""
        result = Matrix.zeros(self.dimension, self.dimension, self.backend)
        for mask, value in element.coefficients.items():
            result = result + self.blade_matrix(mask) * value
        return result

    def astype(self, backend: Backend) -> "CliffordModule":
        """Convert every matrix to another backend"""
        return CliffordModule(
            self.signature,
            tuple(generator.astype(backend) for generator in self.generators),
            self.gram.astype(backend),
            self.dimension,
        )


@dataclasses.dataclass(frozen=True)
class RelationFailure:
    """A generator pair violating ρ_iρ_j + ρ_jρ_i = 2·gram_ij·Id"""

    i: int
    j: int
    deviation: float


@dataclasses.dataclass(frozen=True)
class RelationReport:
    """Outcome of checking the Clifford relations of a module"""

    passed: bool
    max_deviation: float
    failures: tuple[RelationFailure, ...] = ()
    nontrivial: bool = True
