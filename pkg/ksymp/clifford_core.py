"""The Clifford algebra Cl(r,s): products, involutions and the matrix-algebra classification"""

import logging
from typing import NamedTuple

from ksymp.errors import NotOrthogonal, NotUnitVector, SignatureMismatch
from ksymp.models.clifford import (
    AlgebraDescription,
    Multivector,
    Ring,
    Signature,
    Summand,
)
from ksymp.models.scalar import Backend, Scalars

logger = logging.getLogger(__name__)


class Involutions(NamedTuple):
    """The three canonical (anti)automorphisms of an element"""

    tau: Multivector
    transpose: Multivector
    bar: Multivector


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Clifford product a · b"""
    if a.signature != b.signature:
        raise SignatureMismatch(f"cannot multiply elements of {a.signature} and {b.signature}")
    return a * b


def involutions(a: Multivector) -> Involutions:
    """τ(a), aᵗ and ā"""
    return Involutions(a.grade_involution(), a.reversion(), a.clifford_conjugate())


def pseudoscalar(signature: Signature, backend: Backend = Backend.EXACT) -> Multivector:
    """e₁ · … · e_{r+s}"""
    return Multivector(signature, {signature.algebra_dimension - 1: 1}, backend)


def even_signature(signature: Signature) -> Signature:
    """A signature whose full algebra is isomorphic to Cl⁰(r,s)

    Cl⁰(r,s) ≅ Cl(r−1,s) when r > 0, and ≅ Cl(s−1,r) otherwise.
    """
    if signature.minuses > 0:
        return Signature(signature.minuses - 1, signature.pluses)
    if signature.pluses > 0:
        return Signature(signature.pluses - 1, signature.minuses)
    raise ValueError("Cl(0,0) has no proper even subalgebra description")


def _real_summands(signature: Signature) -> tuple[Summand, ...]:
    total = signature.dimension
    residue = (signature.pluses - signature.minuses) % 8
    if residue in (0, 2):
        return (Summand(1 << (total // 2), Ring.REAL),)
    if residue == 1:
        block = Summand(1 << ((total - 1) // 2), Ring.REAL)
        return (block, block)
    if residue in (3, 7):
        return (Summand(1 << ((total - 1) // 2), Ring.COMPLEX),)
    if residue in (4, 6):
        return (Summand(1 << ((total - 2) // 2), Ring.QUATERNION),)
    block = Summand(1 << ((total - 3) // 2), Ring.QUATERNION)
    return (block, block)


def _complex_summands(dimension: int) -> tuple[Summand, ...]:
    if dimension % 2 == 0:
        return (Summand(1 << (dimension // 2), Ring.COMPLEX),)
    block = Summand(1 << ((dimension - 1) // 2), Ring.COMPLEX)
    return (block, block)


def classify(
    signature: Signature, even_only: bool = False, scalars: Scalars = Scalars.REAL
) -> AlgebraDescription:
    """Cl(r,s), or its even part, as a sum of matrix algebras

    Over ℝ this is the mod-8 periodic table; over ℂ only r + s matters.
    """
    if signature.dimension < 1:
        raise ValueError("classify needs at least one generator")
    if scalars is Scalars.COMPLEX:
        dimension = signature.dimension - 1 if even_only else signature.dimension
        description = AlgebraDescription(_complex_summands(dimension), Scalars.COMPLEX)
    else:
        target = even_signature(signature) if even_only else signature
        description = AlgebraDescription(_real_summands(target), Scalars.REAL)
    logger.debug("classified %s (even_only=%s, %s) as %s", signature, even_only, scalars.value, description)
    return description


def minimal_module_dim(
    signature: Signature, scalars: Scalars = Scalars.REAL, even_only: bool = False
) -> int:
    """Dimension over the ground field of the smallest nontrivial module"""
    if signature.dimension == 0:
        return 1
    return classify(signature, even_only, scalars).minimal_module_dim


def _check_unit_vector(omega1: Multivector) -> None:
    if not omega1.is_vector() or not omega1.coefficients:
        raise NotUnitVector(f"{omega1!r} is not a nonzero grade-1 element")
    minus_one = Multivector.scalar(omega1.signature, -1, omega1.backend)
    if not (omega1 * omega1).is_close(minus_one):
        raise NotUnitVector(f"{omega1!r} does not square to -1")


def even_subalgebra_iso(omega1: Multivector, element: Multivector) -> Multivector:
    """The isomorphism Cl(W) → Cl⁰, η ↦ η⁰ + ω₁η¹, with W the orthogonal complement of ω₁

    `element` must lie in the subalgebra generated by W, which is exactly the
    set of x with ω₁ · x = τ(x) · ω₁.
    """
    if omega1.signature != element.signature:
        raise SignatureMismatch(f"{omega1.signature} vs {element.signature}")
    _check_unit_vector(omega1)
    if not (omega1 * element).is_close(element.grade_involution() * omega1):
        raise NotOrthogonal(f"{element!r} is not generated by the orthogonal complement of omega1")
    return element.even() + omega1 * element.odd()
