"""Concrete real representations of Cl(r,s) and the embedding into two-forms

Generators are built from tensor words in the 2x2 matrices

    X = [[0, 1], [1, 0]]    Z = [[1, 0], [0, -1]]    J = [[0, -1], [1, 0]]

with X² = Z² = 1, J² = −1 and any two distinct letters anticommuting. A word
squares to the product of its letters' squares, and two words anticommute
exactly when an odd number of positions hold distinct non-identity letters.

Seeds:

    (1,0)        ℝ²   J
    (2,0)        ℝ⁴   X⊗J, Z⊗J
    (3,0)        ℝ⁴   X⊗J, Z⊗J, J⊗I
    (4..7,0)     ℝ⁸   the first r of
                      J⊗I⊗I, X⊗J⊗I, X⊗X⊗J, X⊗Z⊗J, Z⊗I⊗J, Z⊗J⊗X, Z⊗J⊗Z
    (8,0)        ℝ¹⁶  w⊗Z for the seven words above, and I₈⊗J
    (0,1)        ℝ¹   [1]

Steps, each doubling (or multiplying by 16) a minimal module into a minimal one:

    (r,s) → (r+1,s+1)   γ⊗Z, then I⊗J (squares to −1) and I⊗X (squares to +1)
    (r,0) → (0,r+2)     γ⊗J, I⊗X, I⊗Z
    (r,0) → (r+8,0)     γ⊗ω₈, I⊗Γ_i with Γ the (8,0) seed and ω₈ = Γ₁…Γ₈
"""

import functools
import logging
from typing import Sequence

from ksymp import linalg
from ksymp.errors import NotNegativeDefinite, NotSkewAdjoint
from ksymp.helpers.combinatorics import masks_by_grade, popcount
from ksymp.helpers.dev_utils import measure
from ksymp.models.clifford import Multivector, Signature
from ksymp.models.clifford_module import CliffordModule, RelationFailure, RelationReport
from ksymp.models.matrix import Matrix
from ksymp.models.scalar import IDENTITY_RTOL, Backend, Scalars
from ksymp.models.two_form_span import TwoFormSpan

logger = logging.getLogger(__name__)

I2 = Matrix.identity(2)
X = Matrix.from_rows([[0, 1], [1, 0]])
Z = Matrix.from_rows([[1, 0], [0, -1]])
J = Matrix.from_rows([[0, -1], [1, 0]])


def _word(*letters: Matrix) -> Matrix:
    return functools.reduce(Matrix.kron, letters)


OCTONION_WORDS = (
    _word(J, I2, I2),
    _word(X, J, I2),
    _word(X, X, J),
    _word(X, Z, J),
    _word(Z, I2, J),
    _word(Z, J, X),
    _word(Z, J, Z),
)


def _negative_seed(count: int) -> tuple[list[Matrix], int]:
    """Generators and space dimension of a minimal Cl(count, 0)-module, count ≤ 8"""
    if count == 0:
        return [], 1
    if count == 1:
        return [J], 2
    if count == 2:
        return [X.kron(J), Z.kron(J)], 4
    if count == 3:
        return [X.kron(J), Z.kron(J), J.kron(I2)], 4
    if count < 8:
        return list(OCTONION_WORDS[:count]), 8
    return [word.kron(Z) for word in OCTONION_WORDS] + [Matrix.identity(8).kron(J)], 16


def _negative_generators(count: int) -> tuple[list[Matrix], int]:
    if count <= 8:
        return _negative_seed(count)
    inner, dimension = _negative_generators(count - 8)
    outer, outer_dimension = _negative_seed(8)
    volume = functools.reduce(Matrix.__matmul__, outer)
    generators = [gamma.kron(volume) for gamma in inner]
    generators += [Matrix.identity(dimension).kron(gamma) for gamma in outer]
    return generators, dimension * outer_dimension


def _positive_generators(count: int) -> tuple[list[Matrix], int]:
    if count == 0:
        return [], 1
    if count == 1:
        return [Matrix.from_rows([[1]])], 1
    inner, dimension = _negative_generators(count - 2)
    identity = Matrix.identity(dimension)
    return [gamma.kron(J) for gamma in inner] + [identity.kron(X), identity.kron(Z)], 2 * dimension


@functools.lru_cache(maxsize=None)
def _minimal_generators(minuses: int, pluses: int) -> tuple[tuple[Matrix, ...], int]:
    """Minimal module generators, minus-squaring ones first"""
    if minuses and pluses:
        inner, dimension = _minimal_generators(minuses - 1, pluses - 1)
        identity = Matrix.identity(dimension)
        lifted = [gamma.kron(Z) for gamma in inner]
        inner_minuses = minuses - 1
        generators = (
            lifted[:inner_minuses]
            + [identity.kron(J)]
            + lifted[inner_minuses:]
            + [identity.kron(X)]
        )
        return tuple(generators), 2 * dimension
    if pluses:
        generators, dimension = _positive_generators(pluses)
    else:
        generators, dimension = _negative_generators(minuses)
    return tuple(generators), dimension


def gamma_representation(
    signature: Signature, copies: int = 1, backend: Backend = Backend.EXACT
) -> CliffordModule:
    """m copies of the fixed minimal real module of Cl(r,s)"""
    if copies < 1:
        raise ValueError(f"copies must be positive, got {copies}")
    generators, dimension = _minimal_generators(signature.minuses, signature.pluses)
    generators = tuple(
        Matrix.block_diagonal([gamma] * copies).astype(backend) for gamma in generators
    )
    gram = Matrix.diagonal([signature.square(i) for i in range(signature.dimension)], backend)
    logger.debug("built %d copies of the %d-dimensional module of %s", copies, dimension, signature)
    return CliffordModule(signature, generators, gram, dimension * copies)


def padded_copies(signature: Signature, copies: int) -> int:
    """Smallest m′ ≥ m for which m′ copies of the minimal module have dimension divisible by 4"""
    _, dimension = _minimal_generators(signature.minuses, signature.pluses)
    padded = copies
    while (padded * dimension) % 4:
        padded += 1
    return padded


def minimal_real_dimension(signature: Signature) -> int:
    """Dimension of the module gamma_representation builds for one copy"""
    return _minimal_generators(signature.minuses, signature.pluses)[1]


def verify_clifford_relations(module: CliffordModule) -> RelationReport:
    """Check ρ_iρ_j + ρ_jρ_i = 2·gram_ij·Id for every pair, reporting deviations"""
    identity = Matrix.identity(module.dimension, module.backend)
    scale = max([1.0] + [generator.max_abs() ** 2 for generator in module.generators])
    failures = []
    max_deviation = 0.0
    for i, left in enumerate(module.generators):
        for j in range(i, module.rank):
            right = module.generators[j]
            anticommutator = left @ right + right @ left
            expected = identity * (module.gram[i, j] * 2)
            deviation = anticommutator.distance(expected)
            max_deviation = max(max_deviation, deviation)
            tolerance = 0.0 if module.backend.is_exact else IDENTITY_RTOL * scale
            if deviation > tolerance:
                failures.append(RelationFailure(i, j, deviation))
    nontrivial = module.is_nontrivial()
    report = RelationReport(not failures and nontrivial, max_deviation, tuple(failures), nontrivial)
    if not report.passed:
        logger.info("Clifford relations fail on %d pairs (max deviation %g)", len(failures), max_deviation)
    return report


def _require_negative_definite(module: CliffordModule) -> None:
    inertia = linalg.signature(module.gram)
    if inertia.pluses or inertia.zeros:
        raise NotNegativeDefinite(
            f"gram matrix has signature {tuple(inertia)}, the invariant metric needs a negative definite one"
        )


def invariant_metric(module: CliffordModule, base: Matrix | None = None) -> Matrix:
    """Average of ρ(b)ᵀ g₀ ρ(b) over the blade group, g₀ = Id unless given

    The blade group {±ρ(e_S)} has order 2^{k+1}; signs cancel in ρᵀg₀ρ so the
    sum runs over the 2^k canonical blades.
    """
    _require_negative_definite(module)
    base = base if base is not None else Matrix.identity(module.dimension, module.backend)
    total = Matrix.zeros(module.dimension, module.dimension, module.backend)
    count = 1 << module.rank
    with measure(logger, f"averaging over {count} blades"):
        for mask in range(count):
            blade = module.blade_matrix(mask)
            total = total + blade.T @ base @ blade
    return total * module.backend.coerce(f"1/{count}")


def _skew_adjoint_defect(generator: Matrix, metric: Matrix) -> float:
    return (generator.T @ metric + metric @ generator).max_abs()


def embed_forms(module: CliffordModule, metric: Matrix) -> TwoFormSpan:
    """The span of ω_i(u, v) = g(ρ(e_i)u, v), i.e. ω_i = ρ(e_i)ᵀ g"""
    scale = max(1.0, metric.max_abs())
    for index, generator in enumerate(module.generators):
        defect = _skew_adjoint_defect(generator, metric)
        if not module.backend.is_zero(defect, scale * max(1.0, generator.max_abs()), IDENTITY_RTOL):
            raise NotSkewAdjoint(f"generator {index} is not skew-adjoint for the metric (defect {defect:g})")
    forms = tuple(generator.T @ metric for generator in module.generators)
    return TwoFormSpan(
        forms,
        scalars=Scalars.REAL,
        real_structure=True,
        notes=(f"embedded from a {module.dimension}-dimensional {module.signature}-module",),
    )


def _inverse_blade(signature: Signature, mask: int, backend: Backend) -> Multivector:
    blade = Multivector(signature, {mask: 1}, backend)
    norm = (blade * blade.reversion()).scalar_part()
    return blade.reversion().scale(backend.one() / norm)


def equivariance_defect(module: CliffordModule, forms: Sequence[Matrix]) -> float:
    """Largest deviation from α(x e x⁻¹) = x · α(e) over the even blades x

    x acts on a form by ω ↦ ρ(x⁻¹)ᵀ ω ρ(x⁻¹); α sends the generator e_i to forms[i].
    """
    signature = module.signature
    backend = module.backend
    worst = 0.0
    for mask in masks_by_grade(signature.dimension):
        if popcount(mask) % 2:
            continue
        element = Multivector(signature, {mask: 1}, backend)
        inverse = _inverse_blade(signature, mask, backend)
        acting = module.represent(inverse)
        for index, form in enumerate(forms):
            conjugated = element * Multivector.basis_vector(signature, index, backend) * inverse
            expected = linalg.linear_combination(conjugated.vector_coordinates(), list(forms))
            worst = max(worst, (acting.T @ form @ acting).distance(expected))
    return worst
