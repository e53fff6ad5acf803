"""Fujiki relations, BBF forms and the torus obstructions for hyperkähler manifolds"""

import logging
import math
from typing import Any, Callable, Sequence

import numpy as np

from ksymp import clifford_core, exterior, ksymplectic, linalg
from ksymp.errors import MissingMultilinearData, NoNonNullAlpha, SignAmbiguous
from ksymp.helpers.random_utils import make_rng, random_integers
from ksymp.models.clifford import Signature
from ksymp.models.intersection import (
    InjectivityReport,
    IntersectionModel,
    MultilinearForm,
    ObstructionVerdict,
    PairingReport,
)
from ksymp.models.matrix import Matrix, Vector, make_vector
from ksymp.models.polynomial import HomogeneousPoly
from ksymp.models.scalar import IDENTITY_RTOL, Scalar, Scalars, sign_of
from ksymp.models.two_form_span import QuadraticFormOnSpan, TwoFormSpan

logger = logging.getLogger(__name__)

PAIRING_SAMPLES = 50
KNOWN_FACTOR_B2_BOUNDS = {2: 22, 4: 23}


def fujiki_extract(model: IntersectionModel) -> QuadraticFormOnSpan:
    """q and c with ∫η^{2n} = c·q(η,η)ⁿ, q oriented to be positive on Kähler classes

    Without a Kähler class the sign is fixed by c > 0 when n is odd; for even n
    it cannot be fixed.
    """
    q = ksymplectic.extract_quadric(model.top_poly, model.n)
    backend = q.backend
    if model.kahler_class is not None:
        value = q.value(model.kahler_class)
        sign = sign_of(value, backend, max(1.0, q.gram.max_abs()))
        if sign == 0:
            raise SignAmbiguous("the supplied Kähler class is null for q")
        if sign < 0:
            q = q.negated()
    elif model.n % 2:
        if sign_of(q.c, backend) < 0:
            q = q.negated()
    else:
        raise SignAmbiguous(f"n = {model.n} is even and no Kähler class was supplied")
    logger.info("Fujiki constant c = %s for b2 = %d, n = %d", q.c, model.b2, model.n)
    return q


def _repeated(omega: Vector, omega_bar: Vector, eta: Sequence[Vector], left: int, right: int) -> list[Vector]:
    return list(eta) + [omega] * left + [omega_bar] * right


def bbf_from_ring(model: IntersectionModel, omega_class: Sequence[Any], eta: Sequence[Any]) -> Scalar:
    """(n/2)∫η²Ω^{n−1}Ω̄^{n−1} + (1−n)·∫ηΩ^{n−1}Ω̄ⁿ·∫ηΩⁿΩ̄^{n−1} / ∫ΩⁿΩ̄ⁿ

    Equals μ·q(η, η) for one positive μ independent of η.
    """
    if model.multilinear is None:
        raise MissingMultilinearData("bbf_from_ring needs the full multilinear intersection data")
    backend = model.backend
    n = model.n
    omega = make_vector(list(omega_class), backend)
    omega_bar = np.array([value.conjugate() for value in omega], dtype=omega.dtype)
    eta_vector = make_vector(list(eta), backend)
    product = model.multilinear
    first = product(_repeated(omega, omega_bar, [eta_vector, eta_vector], n - 1, n - 1))
    result = first * backend.coerce(f"{n}/2")
    if n > 1:
        left = product(_repeated(omega, omega_bar, [eta_vector], n - 1, n))
        right = product(_repeated(omega, omega_bar, [eta_vector], n, n - 1))
        volume = product(_repeated(omega, omega_bar, [], n, n))
        result = result + left * right * (1 - n) / volume
    return result


def polarize(poly: HomogeneousPoly) -> MultilinearForm:
    """The symmetric multilinear form F with F(x, …, x) = poly(x)

    F(x₁…x_d) = (1/d!) Σ_{S} (−1)^{d−|S|} poly(Σ_{i∈S} x_i).
    """
    degree = poly.degree
    backend = poly.backend
    scale = backend.coerce(f"1/{math.factorial(degree)}")

    def evaluate(classes: Sequence[Vector]) -> Scalar:
        if len(classes) != degree:
            raise ValueError(f"expected {degree} classes, got {len(classes)}")
        total = backend.zero()
        for mask in range(1, 1 << degree):
            members = [classes[i] for i in range(degree) if mask >> i & 1]
            point = members[0]
            for member in members[1:]:
                point = point + member
            sign = -1 if (degree - len(members)) % 2 else 1
            total = total + poly.evaluate(list(point)) * sign
        return total * scale

    return evaluate


def fundamental_pairing(model: IntersectionModel) -> Callable[[Vector, Vector], Scalar]:
    """(α, β) ↦ ∫α^{2n−1}·β, the pairing of the fundamental class (m = n)"""
    degree = 2 * model.n
    if model.multilinear is not None:
        product = model.multilinear
        return lambda alpha, beta: product([alpha] * (degree - 1) + [beta])
    partials = [model.top_poly.partial(i) for i in range(model.b2)]
    scale = model.backend.coerce(f"1/{degree}")

    def directional(alpha: Vector, beta: Vector) -> Scalar:
        total = model.backend.zero()
        for partial, weight in zip(partials, beta):
            if weight != 0:
                total = total + partial.evaluate(list(alpha)) * weight
        return total * scale

    return directional


def _non_null_alpha(q: QuadraticFormOnSpan, rng: np.random.Generator, attempts: int = 100) -> Vector:
    scale = max(1.0, q.gram.max_abs())
    for index in range(q.k):
        alpha = make_vector([1 if i == index else 0 for i in range(q.k)], q.backend)
        if not q.backend.is_zero(q.value(alpha), scale):
            return alpha
    for _ in range(attempts):
        alpha = make_vector(random_integers(rng, q.k), q.backend)
        if not q.backend.is_zero(q.value(alpha), scale):
            return alpha
    raise NoNonNullAlpha("every sampled class is null for q")


def pairing_check(
    model: IntersectionModel,
    gamma_data: Callable[[Vector, Vector], Scalar],
    m: int,
    q: QuadraticFormOnSpan,
    samples: int = PAIRING_SAMPLES,
    seed: int = 0,
) -> PairingReport:
    """Fit c_γ from γ·α^{2m} = c_γ·q(α,α)^m, then test γ·α^{2m−1}·β = c_γ·q(α,α)^{m−1}·q(α,β)"""
    if q.k != model.b2:
        raise ValueError(f"q has {q.k} variables, model has b2 = {model.b2}")
    backend = q.backend
    rng = make_rng(seed)
    alpha = _non_null_alpha(q, rng)
    c_gamma = gamma_data(alpha, alpha) / q.value(alpha) ** m
    worst = 0.0
    reference = 1.0
    for _ in range(samples):
        alpha = make_vector(random_integers(rng, q.k), backend)
        beta = make_vector(random_integers(rng, q.k), backend)
        lhs = gamma_data(alpha, beta)
        rhs = c_gamma * q.value(alpha) ** (m - 1) * q.bilinear(alpha, beta)
        worst = max(worst, float(abs(lhs - rhs)))
        reference = max(reference, float(abs(lhs)))
    passed = worst == 0 if backend.is_exact else worst <= IDENTITY_RTOL * reference
    if not passed:
        logger.info("pairing identity fails with residual %g", worst)
    return PairingReport(passed, c_gamma, worst, samples)


def injectivity_check(q: QuadraticFormOnSpan, restriction: Matrix) -> InjectivityReport:
    """Classes killed by a restriction map must be q-orthogonal to everything

    A kernel vector β with q(·, β) ≠ 0 contradicts the pairing identity, so for
    non-degenerate q the restriction has to be injective.
    """
    kernel = linalg.rank_kernel(restriction.astype(q.backend)).kernel
    violating = []
    for beta in kernel:
        image = Matrix(q.gram.apply(beta).reshape(-1, 1), q.backend)
        if not image.is_zero():
            violating.append(beta)
    return InjectivityReport(not kernel, not violating, tuple(kernel), tuple(violating))


def torus_model(span: TwoFormSpan) -> IntersectionModel:
    """Cohomology model of a torus whose H² contains a k-symplectic span

    Classes are Σ t_i ω_i; the top polynomial is ∫η^{2n} = (2n)!·Pf and the
    multilinear data is the wedge table of the basis forms.
    """
    n = span.dim_v // 4
    pfaffian = ksymplectic.pfaffian_polynomial(span)
    top_poly = pfaffian.scale(math.factorial(2 * n))
    table = exterior.WedgeTable.from_span(span)
    return IntersectionModel(span.k, n, top_poly, multilinear=table.evaluate)


def torus_bound(b2: int) -> int:
    """Lower bound 2^{⌊(b₂−1)/2⌋−1} on the complex dimension of a trianalytic torus"""
    if b2 < 3:
        raise ValueError(f"b2 must be at least 3, got {b2}")
    return 1 << ((b2 - 1) // 2 - 1)


def _narrative(
    b2: int,
    dim_c: int,
    naive: int,
    refined: int | None,
    signatures: Sequence[Signature],
    possible: bool,
) -> str:
    lines = [
        f"BBF form of signature ({b2 - 3}, 3) in (minuses, pluses); "
        f"H¹ of a trianalytic torus is a module over Cl({b2 - 4},3) ≅ Cl⁰({b2 - 3},3).",
        f"Naive bound: dim_C T ≥ 2^⌊(b2−1)/2⌋−1 = {naive}.",
    ]
    if refined is not None:
        names = " and ".join(str(signature) for signature in signatures)
        lines.append(f"Refined bound: minimal real modules of {names} give dim_C T ≥ {refined}.")
    lines.append(
        f"Proper absolutely trianalytic subvarieties have even dimension, at most {dim_c - 2}."
    )
    if possible:
        lines.append("No obstruction from this method; existence is not claimed.")
    else:
        lines.append(f"A {dim_c}-dimensional manifold with b2 = {b2} contains no trianalytic complex torus.")
    return " ".join(lines)


def ogrady_verdict(b2: int, manifold_dim_c: int) -> ObstructionVerdict:
    """Whether a torus can sit inside an IHS manifold with the given b₂ and dimension"""
    if b2 < 4:
        raise ValueError(f"b2 must be at least 4, got {b2}")
    if manifold_dim_c < 2 or manifold_dim_c % 2:
        raise ValueError(f"manifold dimension must be even and positive, got {manifold_dim_c}")
    r, s = b2 - 3, 3
    signatures = (Signature(r - 1, s), Signature(s - 1, r))
    naive = torus_bound(b2)
    refined_b1 = max(clifford_core.minimal_module_dim(signature, Scalars.REAL) for signature in signatures)
    refined = refined_b1 // 2
    effective = max(naive, refined)
    max_proper = manifold_dim_c - 2
    possible = effective <= max_proper
    verdict = ObstructionVerdict(
        b2,
        manifold_dim_c,
        Signature(r, s),
        naive,
        signatures,
        refined_b1,
        refined,
        effective,
        max_proper,
        possible,
        _narrative(b2, manifold_dim_c, naive, refined, signatures, possible),
    )
    logger.info("b2=%d dim=%d: torus possible=%s (bound %d)", b2, manifold_dim_c, possible, effective)
    return verdict


def b2_comparison_verdict(b2_ambient: int, b2_candidate: int) -> bool:
    """Whether a candidate factor has b₂ at least that of the ambient manifold"""
    if b2_ambient < 0 or b2_candidate < 0:
        raise ValueError("Betti numbers are non-negative")
    return b2_candidate >= b2_ambient


def known_factor_verdict(b2_ambient: int, factor_dim_c: int) -> bool | None:
    """Whether some known maximal holonomy manifold of the factor dimension has large enough b₂

    None when no bound for that dimension is recorded.
    """
    bound = KNOWN_FACTOR_B2_BOUNDS.get(factor_dim_c)
    if bound is None:
        return None
    return b2_comparison_verdict(b2_ambient, bound)


def factor_narrative(b2_ambient: int, factor_dims: Sequence[int]) -> str:
    """Text explaining which factor dimensions would need a previously unknown type"""
    parts = []
    for dim_c in factor_dims:
        known = known_factor_verdict(b2_ambient, dim_c)
        if known is None:
            parts.append(f"dimension {dim_c}: no b2 bound recorded")
        elif known:
            parts.append(f"dimension {dim_c}: known types reach b2 = {KNOWN_FACTOR_B2_BOUNDS[dim_c]}")
        else:
            parts.append(
                f"dimension {dim_c}: known types have b2 ≤ {KNOWN_FACTOR_B2_BOUNDS[dim_c]} < {b2_ambient}, "
                "so a factor would be of previously unknown type"
            )
    return "; ".join(parts)
