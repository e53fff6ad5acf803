"""Tests for Clifford products, involutions and the classification."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksymp import clifford_core
from ksymp.errors import NotOrthogonal, NotUnitVector, SignatureMismatch
from ksymp.models.clifford import Multivector, Ring, Signature, Summand
from ksymp.models.scalar import Scalars
from tests.infra.oracles import center_dimension
from tests.infra.strategies import multivectors, signatures


class TestProducts:
    """Test products, involutions and the pseudoscalar."""

    def test_mismatched_product(self) -> None:
        """Test that elements of different algebras cannot be multiplied."""
        with pytest.raises(SignatureMismatch):
            clifford_core.geometric_product(
                Multivector.scalar(Signature(1, 0), 1), Multivector.scalar(Signature(0, 1), 1)
            )

    @pytest.mark.parametrize(
        "minuses,pluses,expected",
        [(1, 0, -1), (0, 1, 1), (2, 0, -1), (0, 2, -1), (1, 1, 1), (3, 0, 1), (0, 3, -1)],
    )
    def test_pseudoscalar_square(self, minuses: int, pluses: int, expected: int) -> None:
        """Test ω² = (−1)^{N(N−1)/2 + r}."""
        signature = Signature(minuses, pluses)
        omega = clifford_core.pseudoscalar(signature)

        assert omega * omega == Multivector.scalar(signature, expected)

    @given(st.data())
    def test_bar_is_composite(self, data: st.DataObject) -> None:
        """Test x̄ = τ(xᵗ) = (τx)ᵗ."""
        signature = data.draw(signatures)
        x = data.draw(multivectors(signature))

        tau, transpose, bar = clifford_core.involutions(x)

        assert bar == tau.reversion()
        assert bar == transpose.grade_involution()

    @given(st.data())
    def test_vector_norm_is_scalar(self, data: st.DataObject) -> None:
        """Test that v·v̄ is a scalar for grade-1 v."""
        signature = data.draw(signatures)
        v = data.draw(multivectors(signature)).grade(1)

        assert (v * v.clifford_conjugate()).grades() <= {0}


class TestClassification:
    """Test the periodic table of real and complex Clifford algebras."""

    @pytest.mark.parametrize(
        "minuses,pluses,expected",
        [
            (1, 0, (Summand(1, Ring.COMPLEX),)),
            (2, 0, (Summand(1, Ring.QUATERNION),)),
            (3, 0, (Summand(1, Ring.QUATERNION), Summand(1, Ring.QUATERNION))),
            (4, 0, (Summand(2, Ring.QUATERNION),)),
            (5, 0, (Summand(4, Ring.COMPLEX),)),
            (6, 0, (Summand(8, Ring.REAL),)),
            (7, 0, (Summand(8, Ring.REAL), Summand(8, Ring.REAL))),
            (8, 0, (Summand(16, Ring.REAL),)),
            (0, 1, (Summand(1, Ring.REAL), Summand(1, Ring.REAL))),
            (0, 2, (Summand(2, Ring.REAL),)),
            (0, 3, (Summand(2, Ring.COMPLEX),)),
            (1, 1, (Summand(2, Ring.REAL),)),
            (3, 1, (Summand(2, Ring.QUATERNION),)),
            (2, 3, (Summand(4, Ring.REAL), Summand(4, Ring.REAL))),
            (4, 3, (Summand(8, Ring.COMPLEX),)),
        ],
    )
    def test_real_table(self, minuses: int, pluses: int, expected: tuple[Summand, ...]) -> None:
        """Test the mod 8 table in the (minuses, pluses) convention."""
        description = clifford_core.classify(Signature(minuses, pluses))

        assert description.summands == expected
        assert description.dimension == 2 ** (minuses + pluses)

    @pytest.mark.parametrize("minuses,pluses", [(3, 0), (0, 4), (2, 2), (5, 1), (1, 6)])
    def test_even_part_dimension(self, minuses: int, pluses: int) -> None:
        """Test dim Cl⁰ = 2^{N−1}."""
        description = clifford_core.classify(Signature(minuses, pluses), even_only=True)

        assert description.dimension == 2 ** (minuses + pluses - 1)

    def test_even_part_of_cl30(self) -> None:
        """Test Cl⁰(3,0) ≅ Cl(2,0) = H."""
        description = clifford_core.classify(Signature(3, 0), even_only=True)

        assert str(description) == "Mat(1,H)"

    def test_even_signature_without_minuses(self) -> None:
        """Test Cl⁰(0,s) ≅ Cl(s−1,0)."""
        assert clifford_core.even_signature(Signature(0, 3)) == Signature(2, 0)

    @pytest.mark.parametrize("dimension,expected", [(1, "Mat(1,C) ⊕ Mat(1,C)"), (2, "Mat(2,C)"), (5, "Mat(4,C) ⊕ Mat(4,C)")])
    def test_complex_table(self, dimension: int, expected: str) -> None:
        """Test that only r + s matters over C."""
        for minuses in range(dimension + 1):
            description = clifford_core.classify(
                Signature(minuses, dimension - minuses), scalars=Scalars.COMPLEX
            )
            assert str(description) == expected

    def test_minimal_module_dimensions(self) -> None:
        """Test the sizes of the smallest real and complex modules."""
        assert clifford_core.minimal_module_dim(Signature(3, 0)) == 4
        assert clifford_core.minimal_module_dim(Signature(7, 0)) == 8
        assert clifford_core.minimal_module_dim(Signature(5, 0), Scalars.COMPLEX) == 4
        assert clifford_core.minimal_module_dim(Signature(0, 0)) == 1

    def test_empty_signature_rejected(self) -> None:
        """Test that Cl(0,0) cannot be classified."""
        with pytest.raises(ValueError):
            clifford_core.classify(Signature(0, 0))

    @pytest.mark.parametrize("minuses,pluses", [(1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (0, 3), (4, 0)])
    def test_center_matches_table(self, minuses: int, pluses: int) -> None:
        """Test that the computed center agrees with the summand count."""
        signature = Signature(minuses, pluses)
        description = clifford_core.classify(signature)
        expected = sum(2 if summand.ring is Ring.COMPLEX else 1 for summand in description.summands)

        assert center_dimension(signature) == expected


class TestEvenSubalgebraIso:
    """Test Cl(W) → Cl⁰ via ω₁."""

    CL30 = Signature(3, 0)

    def _e(self, index: int) -> Multivector:
        return Multivector.basis_vector(self.CL30, index)

    def test_generator_image(self) -> None:
        """Test that a generator of W maps to ω₁ e."""
        assert clifford_core.even_subalgebra_iso(self._e(0), self._e(1)) == self._e(0) * self._e(1)

    def test_is_homomorphism(self) -> None:
        """Test φ(ab) = φ(a) φ(b) on generators of W."""
        omega1 = self._e(0)
        a = self._e(1) + Multivector.scalar(self.CL30, 2)
        b = self._e(2) * self._e(1)

        image = clifford_core.even_subalgebra_iso(omega1, a * b)

        assert image == clifford_core.even_subalgebra_iso(omega1, a) * clifford_core.even_subalgebra_iso(omega1, b)
        assert image.odd() == Multivector(self.CL30, {})

    def test_non_unit_rejected(self) -> None:
        """Test that ω₁ must square to −1."""
        with pytest.raises(NotUnitVector):
            clifford_core.even_subalgebra_iso(self._e(0).scale(2), self._e(1))

    def test_bivector_omega_rejected(self) -> None:
        """Test that ω₁ must be a vector."""
        with pytest.raises(NotUnitVector):
            clifford_core.even_subalgebra_iso(self._e(0) * self._e(1), self._e(2))

    def test_non_orthogonal_rejected(self) -> None:
        """Test that ω₁ itself is not in the subalgebra of its complement."""
        with pytest.raises(NotOrthogonal):
            clifford_core.even_subalgebra_iso(self._e(0), self._e(0))
