"""Intersection data on H² and the verdicts computed from it"""

import dataclasses
from typing import Callable, Sequence

from ksymp.models.clifford import Signature
from ksymp.models.matrix import Vector
from ksymp.models.polynomial import HomogeneousPoly
from ksymp.models.scalar import Backend, Scalar

MultilinearForm = Callable[[Sequence[Vector]], Scalar]


@dataclasses.dataclass(frozen=True)
class IntersectionModel:
    """η ↦ ∫η^{2n} on H² of a manifold of real dimension 4n"""

    b2: int
    n: int
    top_poly: HomogeneousPoly
    multilinear: MultilinearForm | None = None
    kahler_class: Vector | None = None

    def __post_init__(self) -> None:
        if self.top_poly.degree != 2 * self.n:
            raise ValueError(f"top polynomial has degree {self.top_poly.degree}, expected {2 * self.n}")
        if self.top_poly.num_vars != self.b2:
            raise ValueError(f"top polynomial has {self.top_poly.num_vars} variables, expected b2 = {self.b2}")

    @property
    def dim_c(self) -> int:
        """Complex dimension 2n"""
        return 2 * self.n

    @property
    def backend(self) -> Backend:
        """Backend of the top polynomial"""
        return self.top_poly.backend


@dataclasses.dataclass(frozen=True)
class PairingReport:
    """Fit of γ·α^{2m−1}·β = c_γ·q(α,α)^{m−1}·q(α,β) over seeded pairs"""

    passed: bool
    c_gamma: Scalar
    max_residual: float
    pairs_checked: int


@dataclasses.dataclass(frozen=True)
class InjectivityReport:
    """Kernel of a restriction H²(M) → H²(Z) against the pairing identity"""

    injective: bool
    consistent: bool
    kernel: tuple[Vector, ...]
    violating: tuple[Vector, ...]


@dataclasses.dataclass(frozen=True)
class ObstructionVerdict:
    """Whether the Clifford-module bounds leave room for a trianalytic torus"""

    b2: int
    manifold_dim_c: int
    bbf_signature: Signature
    naive_torus_bound: int
    clifford_signatures: tuple[Signature, ...]
    refined_b1_bound: int | None
    refined_torus_dim_c_bound: int | None
    effective_torus_bound: int
    max_proper_subvariety_dim_c: int
    torus_possible: bool
    narrative: str
