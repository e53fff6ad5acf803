"""k-symplectic structures: Pfaffian polynomials, quadric extraction and the induced Clifford action"""

import functools
import itertools
import logging
import math
from typing import Any, NamedTuple, Sequence

import numpy as np

from ksymp import linalg
from ksymp.errors import (
    AmbiguousFactor,
    DegenerateInput,
    DegenerateOmega1,
    DimensionNotMultipleOf4,
    NoExactNullPoint,
    NonInvertible,
    NotAPower,
    NotOrthogonal,
    NotReal,
    RankDeficient,
)
from ksymp.helpers.combinatorics import Exponents, monomial_count, monomials
from ksymp.helpers.dev_utils import measure
from ksymp.helpers.random_utils import (
    make_rng,
    random_gaussian_integers,
    random_nonzero_integers,
)
from ksymp.models.clifford import Signature
from ksymp.models.clifford_module import CliffordModule
from ksymp.models.matrix import Matrix, Vector, make_vector
from ksymp.models.polynomial import HomogeneousPoly
from ksymp.models.scalar import (
    IDENTITY_RTOL,
    Backend,
    Scalar,
    Scalars,
    exact_sqrt,
    is_real_scalar,
    real_part,
)
from ksymp.models.two_form_span import (
    KSymplecticReport,
    QuadraticFormOnSpan,
    TwoFormSpan,
    Witness,
)

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 100
NULL_POINT_SEARCH_BOUND = 12
SUBSTRUCTURE_WARNING = "a substructure can be degenerate even if the initial structure was not"


def _require_multiple_of_4(span: TwoFormSpan) -> int:
    if span.dim_v % 4:
        raise DimensionNotMultipleOf4(f"dim V = {span.dim_v} is not a multiple of 4")
    return span.dim_v // 4


@functools.lru_cache(maxsize=None)
def _lagrange_basis(num_vars: int, degree: int) -> tuple[tuple[Exponents, HomogeneousPoly], ...]:
    """Homogenised Lagrange basis of the simplex lattice {α : |α| = degree}

    L_α(t) = Π_i Π_{j<α_i} (t_i − j·s/d) / (α_i − j) with s = Σ t_i, so that
    L_α(β) = δ_αβ on the lattice.
    """
    basis = []
    for alpha in monomials(num_vars, degree):
        poly = HomogeneousPoly.constant(num_vars, 1)
        for index, power in enumerate(alpha):
            for j in range(power):
                coefficients = [
                    (1 if other == index else 0) - _fraction(j, degree) for other in range(num_vars)
                ]
                factor = HomogeneousPoly.linear(coefficients).scale(_fraction(1, power - j))
                poly = poly * factor
        basis.append((alpha, poly))
    return tuple(basis)


def _fraction(numerator: int, denominator: int) -> Any:
    return Backend.EXACT.coerce(f"{numerator}/{denominator}")


def pfaffian_polynomial(span: TwoFormSpan) -> HomogeneousPoly:
    """p(t) = Pf(Σ t_i ω_i), a homogeneous polynomial of degree 2n in k variables

    Interpolated from the Pfaffians at the lattice points |α| = 2n.
    """
    n = _require_multiple_of_4(span)
    degree = 2 * n
    backend = span.backend
    result = HomogeneousPoly.zero(span.k, degree, backend)
    logger.debug("interpolating on %d lattice points", monomial_count(span.k, degree))
    with measure(logger, f"Pfaffian polynomial (k={span.k}, degree={degree})"):
        for alpha, basis_poly in _lagrange_basis(span.k, degree):
            value = linalg.pfaffian(span.form(alpha))
            if value != 0:
                result = result + basis_poly.astype(backend).scale(value)
    return result


def _extraction_system(p: HomogeneousPoly, n: int) -> tuple[Matrix, tuple[Exponents, ...]]:
    """Rows: coefficients of n·p·∂q/∂t_i − q·∂p/∂t_i; columns: monomials of q"""
    unknowns = monomials(p.num_vars, 2)
    partials = [p.partial(i) for i in range(p.num_vars)]
    columns = []
    for mu in unknowns:
        candidate = HomogeneousPoly(p.num_vars, 2, {mu: 1}, p.backend)
        column: list[Scalar] = []
        for i in range(p.num_vars):
            equation = p * candidate.partial(i) * n - candidate * partials[i]
            column.extend(equation.coefficient(out) for out in monomials(p.num_vars, 2 * n + 1))
        columns.append(column)
    return Matrix.from_rows([list(row) for row in zip(*columns)], p.backend), unknowns


def _normalize(q: HomogeneousPoly) -> HomogeneousPoly:
    leading = q.leading_term()
    if leading is None:
        raise ValueError("cannot normalize the zero quadric")
    return q.scale(q.backend.one() / leading[1])


def _fit_constant(p: HomogeneousPoly, power: HomogeneousPoly) -> Scalar:
    """c with p ≈ c·power, read off the largest coefficient of power"""
    monomial = max(power.coefficients, key=lambda exponents: abs(power.coefficients[exponents]))
    return p.coefficient(monomial) / power.coefficient(monomial)


def _largest_residual(p: HomogeneousPoly, fitted: HomogeneousPoly) -> tuple[Exponents | None, Scalar]:
    residual = fitted - p
    if not residual.coefficients:
        return None, p.backend.zero()
    monomial = max(residual.coefficients, key=lambda exponents: abs(residual.coefficients[exponents]))
    return monomial, residual.coefficients[monomial]


def _not_a_power_witness(p: HomogeneousPoly, n: int, system: Matrix) -> NotAPower:
    """Least-squares candidate q̂ and the coefficient of c·q̂ⁿ − p furthest from zero"""
    entries = system.astype(Backend.FLOAT64).entries
    _, _, vh = np.linalg.svd(entries)
    candidate = HomogeneousPoly(
        p.num_vars, 2, dict(zip(monomials(p.num_vars, 2), np.conj(vh[-1]).tolist())), Backend.FLOAT64
    )
    float_p = p.astype(Backend.FLOAT64)
    power = candidate**n
    monomial, residual = _largest_residual(float_p, power.scale(_fit_constant(float_p, power)))
    return NotAPower(
        f"polynomial is not a constant times the {n}-th power of a quadric "
        f"(best fit misses monomial {monomial} by {residual:g})",
        monomial,
        residual,
    )


def extract_quadric(p: HomogeneousPoly, n: int) -> QuadraticFormOnSpan:
    """q and c with p = c·qⁿ, q normalized to leading coefficient 1

    Solves the linear identity n·p·∂q/∂t_i = q·∂p/∂t_i for the coefficients of q.
    """
    if p.degree != 2 * n:
        raise ValueError(f"polynomial of degree {p.degree} cannot be the {n}-th power of a quadric")
    if p.is_zero():
        raise ValueError("cannot extract a quadric from the zero polynomial")
    system, unknowns = _extraction_system(p, n)
    kernel = linalg.rank_kernel(system).kernel
    if not kernel:
        raise _not_a_power_witness(p, n, system)
    if len(kernel) > 1:
        raise AmbiguousFactor(f"{len(kernel)} independent quadrics satisfy the power identity", len(kernel))
    (solution,) = kernel
    q = _normalize(HomogeneousPoly(p.num_vars, 2, dict(zip(unknowns, solution)), p.backend))
    power = q**n
    c = _fit_constant(p, power)
    fitted = power.scale(c)
    if not fitted.is_close(p):
        monomial, residual = _largest_residual(p, fitted)
        raise NotAPower(f"c·qⁿ differs from p at monomial {monomial}", monomial, residual)
    logger.debug("extracted quadric %r with c = %s", q, c)
    return QuadraticFormOnSpan(q.to_gram(), c, n)


def _kernel_dim(form: Matrix) -> int:
    return form.rows - linalg.rank(form)


def _form_witnesses(span: TwoFormSpan, n: int) -> list[Witness]:
    """Basis forms whose kernel is neither 0 nor 2n-dimensional"""
    witnesses = []
    for index in range(span.k):
        coefficients = [1 if i == index else 0 for i in range(span.k)]
        kernel_dim = _kernel_dim(span.forms[index])
        if kernel_dim not in (0, 2 * n):
            witnesses.append(
                Witness.for_form(
                    "wrong_kernel_dimension",
                    f"basis form {index} has a {kernel_dim}-dimensional kernel, expected 0 or {2 * n}",
                    make_vector(coefficients, span.backend),
                    kernel_dim,
                )
            )
    return witnesses


def _exact_null_point_diagonal(diagonal: Sequence[Scalar]) -> list[Scalar]:
    """y ≠ 0 over Q(i) with Σ d_j y_j² = 0 for d_j all nonzero

    Tries pairs, then triples and quadruples with small integer coordinates.
    """
    size = len(diagonal)
    for extra in range(0, 3):
        for indices in itertools.permutations(range(size), 2 + extra):
            first, second, rest = indices[0], indices[1], indices[2:]
            if rest and list(rest) != sorted(rest):
                continue
            for values in itertools.product(range(1, NULL_POINT_SEARCH_BOUND + 1), repeat=extra):
                partial = diagonal[first] + sum(
                    (diagonal[j] * value * value for j, value in zip(rest, values)), Backend.EXACT.zero()
                )
                root = exact_sqrt(-partial / diagonal[second])
                if root is None:
                    continue
                point: list[Scalar] = [Backend.EXACT.zero()] * size
                point[first] = Backend.EXACT.one()
                point[second] = root
                for j, value in zip(rest, values):
                    point[j] = Backend.EXACT.coerce(value)
                return point
    raise NoExactNullPoint(f"no null vector over Q(i) found for the diagonal form {list(diagonal)}")


def _base_null_point(q: QuadraticFormOnSpan) -> Vector | None:
    """One exact null vector outside the radical, or None when q has rank 1"""
    transform, diagonal = linalg.ldl_diagonalize(q.gram)
    support = [j for j, value in enumerate(diagonal) if value != 0]
    if len(support) < 2:
        return None
    local = _exact_null_point_diagonal([diagonal[j] for j in support])
    y = [Backend.EXACT.zero()] * q.k
    for j, value in zip(support, local):
        y[j] = value
    return make_vector(y, Backend.EXACT) @ transform.entries


def null_cone_samples(q: QuadraticFormOnSpan, samples: int, seed: int = 0) -> list[Vector]:
    """Seeded nonzero points x with q(x, x) = 0

    Exact: secant lines x = q(v)·x₀ − 2·q(x₀, v)·v through one exact null point
    x₀ with Gaussian-integer directions v. Float: solve for the last coordinate
    over ℂ given random complex values of the others.
    """
    rng = make_rng(seed)
    if q.backend.is_exact:
        return _exact_null_samples(q, samples, rng)
    return _float_null_samples(q, samples, rng)


def _exact_null_samples(q: QuadraticFormOnSpan, samples: int, rng: np.random.Generator) -> list[Vector]:
    radical = q.radical()
    base = _base_null_point(q)
    points: list[Vector] = []
    attempts = 0
    while len(points) < samples and attempts < 10 * samples:
        attempts += 1
        direction = make_vector(random_gaussian_integers(rng, q.k, Backend.EXACT), Backend.EXACT)
        if base is None:
            weights = random_gaussian_integers(rng, len(radical), Backend.EXACT)
            point = sum((w * v for w, v in zip(weights, radical)), make_vector([0] * q.k, Backend.EXACT))
        else:
            point = base * q.value(direction) - direction * (2 * q.bilinear(base, direction))
        if any(value != 0 for value in point):
            points.append(point)
    return points


def _float_null_samples(q: QuadraticFormOnSpan, samples: int, rng: np.random.Generator) -> list[Vector]:
    gram = q.gram.entries.astype(complex)
    last = q.k - 1
    scale = max(1.0, q.gram.max_abs())
    points: list[Vector] = []
    attempts = 0
    while len(points) < samples and attempts < 10 * samples:
        attempts += 1
        point = np.zeros(q.k, dtype=complex)
        point[:last] = rng.standard_normal(last) + 1j * rng.standard_normal(last)
        leading = gram[last, last]
        linear = 2 * (gram[last, :last] @ point[:last])
        constant = point[:last] @ gram[:last, :last] @ point[:last]
        if abs(leading) > IDENTITY_RTOL * scale:
            point[last] = (-linear + np.sqrt(linear * linear - 4 * leading * constant)) / (2 * leading)
        elif abs(linear) > IDENTITY_RTOL * scale:
            point[last] = -constant / linear
        else:
            continue
        if np.max(np.abs(point)) > 0:
            points.append(point)
    return points


def null_line_count(q: QuadraticFormOnSpan) -> int:
    """Number of null lines of a binary quadratic form (over ℂ)"""
    if q.k != 2:
        raise ValueError(f"null lines are counted for k = 2 only, got k = {q.k}")
    return {2: 2, 1: 1}.get(q.rank(), 0)


def real_signature(span: TwoFormSpan, q: QuadraticFormOnSpan) -> linalg.Inertia:
    """Signature (r minuses, s pluses, zeros) of q, oriented so that r ≥ s

    q is only defined up to a real multiple, so the orientation is fixed by
    reporting the form whose negative part dominates.
    """
    if not span.real_structure or not q.is_real():
        raise NotReal("real_signature needs a real span and a real quadratic form")
    inertia = linalg.signature(q.gram)
    if inertia.minuses < inertia.pluses:
        return linalg.Inertia(inertia.pluses, inertia.minuses, inertia.zeros)
    return inertia


def _check_samples(span: TwoFormSpan, q: QuadraticFormOnSpan, n: int, samples: int, seed: int) -> tuple[int, list[Witness], list[str]]:
    notes = []
    sample_q = q
    if q.backend.is_exact:
        try:
            points = null_cone_samples(q, samples, seed)
        except NoExactNullPoint as error:
            notes.append(f"{error}; null cone sampled in float64")
            sample_q = QuadraticFormOnSpan(q.gram.astype(Backend.FLOAT64), q.c, q.power)
            points = null_cone_samples(sample_q, samples, seed)
    else:
        points = null_cone_samples(q, samples, seed)
    float_span = span if sample_q.backend is span.backend else span.astype(sample_q.backend)
    witnesses = []
    for point in points:
        kernel_dim = _kernel_dim(float_span.form(list(point)))
        if kernel_dim != 2 * n:
            witnesses.append(
                Witness.for_form(
                    "wrong_kernel_dimension",
                    f"null form has a {kernel_dim}-dimensional kernel, expected {2 * n}",
                    point,
                    kernel_dim,
                )
            )
    return len(points), witnesses, notes


def _radical_witnesses(span: TwoFormSpan, q: QuadraticFormOnSpan, n: int) -> list[Witness]:
    witnesses = []
    for vector in q.radical():
        kernel_dim = _kernel_dim(span.form(list(vector)))
        if kernel_dim != 2 * n:
            witnesses.append(
                Witness.for_form(
                    "radical_form",
                    f"form in the radical of q has a {kernel_dim}-dimensional kernel, expected {2 * n}",
                    vector,
                    kernel_dim,
                )
            )
    return witnesses


def verify_ksymplectic(
    span: TwoFormSpan, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> KSymplecticReport:
    """Decide whether a span is k-symplectic, with witnesses on failure"""
    if span.dim_v % 4:
        return KSymplecticReport(
            False,
            None,
            False,
            None,
            None,
            (Witness("dimension", f"dim V = {span.dim_v} is not a multiple of 4"),),
        )
    n = span.dim_v // 4
    p = pfaffian_polynomial(span)
    if p.is_zero():
        return _verify_vanishing_pfaffian(span, n)
    try:
        q = extract_quadric(p, n)
    except NotAPower as error:
        witnesses = _form_witnesses(span, n) + [
            Witness("not_a_power", str(error), monomial=error.monomial, residual=error.residual)
        ]
        logger.info("span is not k-symplectic: %s", error)
        return KSymplecticReport(False, None, False, None, None, tuple(witnesses))
    except AmbiguousFactor as error:
        witnesses = _form_witnesses(span, n) + [Witness("ambiguous_factor", str(error))]
        return KSymplecticReport(False, None, False, None, None, tuple(witnesses))

    q_rank = q.rank()
    nondegenerate = q_rank == span.k
    signature = real_signature(span, q) if span.real_structure and q.is_real() else None
    null_lines = null_line_count(q) if span.k == 2 else None
    notes = list(span.notes)
    with measure(logger, f"null cone sampling ({samples} samples)"):
        checked, witnesses, sample_notes = _check_samples(span, q, n, samples, seed)
    notes.extend(sample_notes)
    if nondegenerate:
        notes.append("q is non-degenerate: every degenerate form has rank 2n")
    else:
        witnesses = _radical_witnesses(span, q, n) + witnesses
        notes.append(f"q is degenerate (rank {q_rank}); checked the radical and sampled null forms directly")
    is_k_symplectic = not witnesses
    logger.info("k=%d span on dim %d: k-symplectic=%s, q rank %d", span.k, span.dim_v, is_k_symplectic, q_rank)
    return KSymplecticReport(
        is_k_symplectic,
        q,
        nondegenerate,
        q_rank,
        signature,
        tuple(witnesses),
        checked,
        null_lines,
        tuple(notes),
    )


def _verify_vanishing_pfaffian(span: TwoFormSpan, n: int) -> KSymplecticReport:
    if span.k == 1:
        kernel_dim = _kernel_dim(span.forms[0])
        ok = kernel_dim == 2 * n
        witnesses = () if ok else tuple(_form_witnesses(span, n))
        return KSymplecticReport(
            ok,
            None,
            False,
            0,
            None,
            witnesses,
            notes=("a 1-symplectic structure is either non-degenerate or of rank 2n",),
        )
    witnesses = _form_witnesses(span, n) + [
        Witness("vanishing_pfaffian", "every form in the span is degenerate, so no non-zero q exists")
    ]
    return KSymplecticReport(False, None, False, None, None, tuple(witnesses))


def default_omega1(span: TwoFormSpan, q: QuadraticFormOnSpan, seed: int = 0, attempts: int = 100) -> Vector:
    """Coefficients of a form with q(ω, ω) ≠ 0: a basis vector, else a seeded combination"""
    backend = q.backend
    scale = max(1.0, q.gram.max_abs())
    basis = [make_vector([1 if i == j else 0 for i in range(span.k)], backend) for j in range(span.k)]
    usable = [vector for vector in basis if not backend.is_zero(q.value(vector), scale)]
    if usable:
        if backend.is_exact:
            return usable[0]
        return max(usable, key=lambda vector: abs(q.value(vector)))
    rng = make_rng(seed)
    for _ in range(attempts):
        vector = make_vector(random_nonzero_integers(rng, span.k), backend)
        if not backend.is_zero(q.value(vector), scale):
            return vector
    raise DegenerateOmega1("no form with q(ω, ω) ≠ 0 found")


def _orthogonal_complement(q: QuadraticFormOnSpan, omega1: Vector) -> list[Vector]:
    row = Matrix.from_rows([list(omega1 @ q.gram.entries)], q.backend)
    return linalg.rank_kernel(row).kernel


def _gram_schmidt(q: QuadraticFormOnSpan, vectors: list[Vector]) -> list[Vector]:
    """q-orthogonal basis of span(vectors), pivoting on the largest (float) or first (exact) norm"""
    backend = q.backend
    scale = max(1.0, q.gram.max_abs())
    remaining = list(vectors)
    basis: list[Vector] = []
    while remaining:
        norms = [q.value(v) for v in remaining]
        candidates = [i for i, value in enumerate(norms) if not backend.is_zero(value, scale)]
        if not candidates:
            pair = next(
                (
                    (i, j)
                    for i, j in itertools.combinations(range(len(remaining)), 2)
                    if not backend.is_zero(q.bilinear(remaining[i], remaining[j]), scale)
                ),
                None,
            )
            if pair is None:
                basis.extend(remaining)
                break
            remaining[pair[0]] = remaining[pair[0]] + remaining[pair[1]]
            continue
        pivot = candidates[0] if backend.is_exact else max(candidates, key=lambda i: abs(norms[i]))
        w = remaining.pop(pivot)
        norm = q.value(w)
        remaining = [v - w * (q.bilinear(v, w) / norm) for v in remaining]
        basis.append(w)
    return basis


def clifford_action(span: TwoFormSpan, q: QuadraticFormOnSpan, omega1_coeffs: Sequence[Any]) -> CliffordModule:
    """Generators A_j = ω₁⁻¹w_j for a q-orthogonal basis w_j of ω₁^⊥

    gram_jj = −q(w_j, w_j) / q(ω₁, ω₁), so A_j² = gram_jj·Id; for q(ω₁, ω₁) = ∓1
    this is ±q(w_j, w_j).
    """
    backend = q.backend
    omega1 = make_vector(list(omega1_coeffs), backend)
    norm1 = q.value(omega1)
    if backend.is_zero(norm1, max(1.0, q.gram.max_abs())):
        raise DegenerateOmega1("q(ω₁, ω₁) = 0")
    form1 = span.form(list(omega1))
    if linalg.rank(form1) < span.dim_v:
        raise NonInvertible("ω₁ is degenerate")
    basis = _gram_schmidt(q, _orthogonal_complement(q, omega1))
    generators = tuple(linalg.solve(form1, span.form(list(w))) for w in basis)
    squares = [-q.value(w) / norm1 for w in basis]
    gram = Matrix.diagonal(squares, backend) if squares else Matrix.zeros(0, 0, backend)
    minuses = sum(1 for value in squares if is_real_scalar(value, backend) and real_part(value) < 0)
    signature = Signature(minuses, len(squares) - minuses)
    return CliffordModule(signature, generators, gram, span.dim_v)


class EigenvalueCheck(NamedTuple):
    """charpoly(ω₁⁻¹ω₂) against (λ² − a)^{2n} with a = −q(ω₂)/q(ω₁)"""

    passed: bool
    square: Scalar
    max_deviation: float


def eigenvalue_check(
    span: TwoFormSpan, q: QuadraticFormOnSpan, omega1_coeffs: Sequence[Any], omega2_coeffs: Sequence[Any]
) -> EigenvalueCheck:
    """Check that A = ω₁⁻¹ω₂ has eigenvalues ±√a, each with multiplicity 2n"""
    backend = q.backend
    omega1 = make_vector(list(omega1_coeffs), backend)
    omega2 = make_vector(list(omega2_coeffs), backend)
    scale = max(1.0, q.gram.max_abs())
    if not backend.is_zero(q.bilinear(omega1, omega2), scale * max(1.0, float(np.max(np.abs(omega2.astype(complex)))))):
        raise NotOrthogonal("ω₂ is not q-orthogonal to ω₁")
    norm1 = q.value(omega1)
    if backend.is_zero(norm1, scale):
        raise DegenerateOmega1("q(ω₁, ω₁) = 0")
    operator = linalg.solve(span.form(list(omega1)), span.form(list(omega2)))
    actual = linalg.characteristic_polynomial(operator)
    square = -q.value(omega2) / norm1
    half = span.dim_v // 2
    expected: list[Scalar] = []
    for j in range(half + 1):
        expected.append(backend.coerce(math.comb(half, j)) * (-square) ** j)
        if j < half:
            expected.append(backend.zero())
    deviation = max(abs(a - b) for a, b in zip(actual, expected))
    reference = max([1.0] + [abs(value) for value in expected])
    passed = deviation == 0 if backend.is_exact else deviation <= 1e-9 * reference
    return EigenvalueCheck(passed, square, float(deviation))


def substructure(span: TwoFormSpan, coeff_matrix: Matrix) -> TwoFormSpan:
    """The sub-span spanned by the rows of a k′ × k coefficient matrix"""
    if coeff_matrix.cols != span.k:
        raise RankDeficient(f"coefficient matrix has {coeff_matrix.cols} columns, span has k = {span.k}")
    if linalg.rank(coeff_matrix) < coeff_matrix.rows:
        raise RankDeficient("coefficient matrix does not have full row rank")
    forms = tuple(span.form(list(coeff_matrix[row])) for row in range(coeff_matrix.rows))
    return TwoFormSpan(
        forms,
        scalars=span.scalars,
        real_structure=span.real_structure and coeff_matrix.is_real(),
        notes=(SUBSTRUCTURE_WARNING,),
    )


def restrict_quadric(q: QuadraticFormOnSpan, coeff_matrix: Matrix) -> QuadraticFormOnSpan:
    """q on the substructure spanned by the rows of C: gram C·G·Cᵀ, c unchanged"""
    gram = coeff_matrix.astype(q.backend) @ q.gram @ coeff_matrix.astype(q.backend).T
    return QuadraticFormOnSpan(gram, q.c, q.power, normalization="restricted from the ambient span")


def dimension_bound(k: int) -> int:
    """2^{⌊(k−1)/2⌋}: the complex dimension of V is a multiple of this"""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return 1 << ((k - 1) // 2)


def direct_sum_2symplectic(omega: Matrix) -> TwoFormSpan:
    """{π₁*ω, π₂*ω} on W ⊕ W"""
    if not omega.is_square or not omega.is_antisymmetric():
        raise DegenerateInput("ω must be an antisymmetric square matrix")
    if omega.rows == 0 or linalg.rank(omega) < omega.rows:
        raise DegenerateInput("ω must be non-degenerate")
    zero = Matrix.zeros(omega.rows, omega.cols, omega.backend)
    return TwoFormSpan(
        (Matrix.block_diagonal([omega, zero]), Matrix.block_diagonal([zero, omega])),
        scalars=Scalars.REAL if omega.is_real() else Scalars.COMPLEX,
        real_structure=omega.is_real(),
        notes=("direct sum W ⊕ W: the kernels of the two degenerate lines are the summands",),
    )


PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def plucker_span(backend: Backend = Backend.EXACT, scalars: Scalars = Scalars.REAL) -> TwoFormSpan:
    """Λ²(V*) for dim V = 4 in the basis e_i∧e_j, i < j (lexicographic)"""
    forms = []
    for i, j in PLUCKER_PAIRS:
        rows = [[0] * 4 for _ in range(4)]
        rows[i][j], rows[j][i] = 1, -1
        forms.append(Matrix.from_rows(rows, backend))
    return TwoFormSpan(
        tuple(forms),
        scalars=scalars,
        real_structure=scalars is Scalars.REAL,
        notes=("degenerate forms are the decomposable ones: the Plücker quadric",),
    )
