"""Top-degree products of two-forms on a 4n-dimensional space

With the volume form fixed by Pf, ω^{∧2n} = (2n)!·Pf(ω)·vol. Mixed products
∫η₁∧…∧η₂ₙ are the polarization of that, which inclusion-exclusion turns into
Pfaffians of partial sums:

    ∫η₁∧…∧η_d = Σ_{S ⊆ {1..d}} (−1)^{d−|S|} Pf(Σ_{i∈S} η_i)      (d = 2n)
"""

import dataclasses
import itertools
import logging
from typing import Mapping, Sequence

from ksymp import linalg
from ksymp.helpers.combinatorics import Exponents, monomials
from ksymp.models.matrix import Matrix, Vector
from ksymp.models.scalar import Backend, Scalar
from ksymp.models.two_form_span import TwoFormSpan

logger = logging.getLogger(__name__)


def top_degree_pairing(forms: Sequence[Matrix]) -> Scalar:
    """∫η₁∧…∧η_d for d = dim V / 2 forms"""
    if not forms:
        raise ValueError("need at least one form")
    size = forms[0].rows
    if 2 * len(forms) != size:
        raise ValueError(f"{len(forms)} two-forms do not reach the top degree of a {size}-dimensional space")
    backend = forms[0].backend
    total = backend.zero()
    degree = len(forms)
    for count in range(1, degree + 1):
        sign = -1 if (degree - count) % 2 else 1
        for subset in itertools.combinations(forms, count):
            partial = subset[0]
            for form in subset[1:]:
                partial = partial + form
            total = total + linalg.pfaffian(partial) * sign
    return total


@dataclasses.dataclass(frozen=True)
class WedgeTable:
    """∫ω_{i₁}∧…∧ω_{i_d} for every multiset of basis forms of a span"""

    num_vars: int
    degree: int
    entries: Mapping[Exponents, Scalar]
    backend: Backend

    @classmethod
    def from_span(cls, span: TwoFormSpan) -> "WedgeTable":
        """Tabulate every top-degree product of basis forms"""
        degree = span.dim_v // 2
        entries = {}
        for exponents in monomials(span.k, degree):
            factors = [form for form, power in zip(span.forms, exponents) for _ in range(power)]
            entries[exponents] = top_degree_pairing(factors)
        logger.debug("tabulated %d wedge products of degree %d", len(entries), degree)
        return cls(span.k, degree, entries, span.backend)

    def evaluate(self, classes: Sequence[Vector]) -> Scalar:
        """Multilinear extension ∫η₁∧…∧η_d for classes given in basis coordinates"""
        if len(classes) != self.degree:
            raise ValueError(f"expected {self.degree} classes, got {len(classes)}")
        total = self.backend.zero()
        for indices in itertools.product(range(self.num_vars), repeat=self.degree):
            weight = self.backend.one()
            for cls_vector, index in zip(classes, indices):
                weight = weight * cls_vector[index]
                if weight == 0:
                    break
            if weight == 0:
                continue
            exponents = tuple(indices.count(i) for i in range(self.num_vars))
            total = total + weight * self.entries[exponents]
        return total
