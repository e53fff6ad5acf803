"""Tests for signatures, multivectors and algebra descriptions."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksymp.errors import SignatureMismatch
from ksymp.models.clifford import (
    AlgebraDescription,
    Multivector,
    Ring,
    Signature,
    Summand,
)
from ksymp.models.scalar import Scalars
from tests.infra.strategies import multivectors

CL21 = Signature(2, 1)


class TestSignature:
    """Test the signature value type."""

    def test_squares(self) -> None:
        """Test that minus generators come first."""
        assert [CL21.square(i) for i in range(3)] == [-1, -1, 1]
        assert CL21.dimension == 3
        assert CL21.algebra_dimension == 8
        assert str(CL21) == "Cl(2,1)"

    def test_out_of_range(self) -> None:
        """Test indexing past the last generator."""
        with pytest.raises(IndexError):
            CL21.square(3)

    def test_negative_counts_rejected(self) -> None:
        """Test that counts must be non-negative."""
        with pytest.raises(ValueError):
            Signature(-1, 2)


class TestMultivector:
    """Test the blade product and involutions."""

    def test_generators_square_to_signature(self) -> None:
        """Test e_i² = ±1."""
        for index in range(3):
            e = Multivector.basis_vector(CL21, index)
            assert e * e == Multivector.scalar(CL21, CL21.square(index))

    def test_generators_anticommute(self) -> None:
        """Test e0 e1 = -e1 e0."""
        e0 = Multivector.basis_vector(CL21, 0)
        e1 = Multivector.basis_vector(CL21, 1)

        assert e0 * e1 == -(e1 * e0)
        assert e0 * e1 == Multivector(CL21, {0b011: 1})

    def test_blade_in_given_order(self) -> None:
        """Test that blade() multiplies in the order given."""
        assert Multivector.blade(CL21, [1, 0]) == Multivector(CL21, {0b011: -1})

    def test_grade_projections(self) -> None:
        """Test grade, even and odd parts."""
        x = Multivector(CL21, {0: 2, 0b001: 1, 0b011: 4, 0b111: 5})

        assert x.grade(2) == Multivector(CL21, {0b011: 4})
        assert x.even() == Multivector(CL21, {0: 2, 0b011: 4})
        assert x.odd() == Multivector(CL21, {0b001: 1, 0b111: 5})
        assert x.scalar_part() == 2
        assert x.grades() == {0, 1, 2, 3}
        assert not x.is_vector()

    def test_involution_signs(self) -> None:
        """Test τ, transpose and bar on a bivector."""
        x = Multivector(CL21, {0b011: 1})

        assert x.grade_involution() == x
        assert x.reversion() == -x
        assert x.clifford_conjugate() == -x

    def test_signature_mismatch(self) -> None:
        """Test that elements of different algebras do not combine."""
        with pytest.raises(SignatureMismatch):
            _ = Multivector.scalar(CL21, 1) + Multivector.scalar(Signature(1, 1), 1)

    @given(st.data())
    def test_product_is_associative(self, data: st.DataObject) -> None:
        """Test (ab)c = a(bc)."""
        a, b, c = (data.draw(multivectors(CL21)) for _ in range(3))

        assert (a * b) * c == a * (b * c)

    @given(st.data())
    def test_transpose_is_antiautomorphism(self, data: st.DataObject) -> None:
        """Test (ab)ᵗ = bᵗ aᵗ."""
        a, b = data.draw(multivectors(CL21)), data.draw(multivectors(CL21))

        assert (a * b).reversion() == b.reversion() * a.reversion()

    @given(st.data())
    def test_grade_involution_is_automorphism(self, data: st.DataObject) -> None:
        """Test τ(ab) = τ(a) τ(b)."""
        a, b = data.draw(multivectors(CL21)), data.draw(multivectors(CL21))

        assert (a * b).grade_involution() == a.grade_involution() * b.grade_involution()


class TestAlgebraDescription:
    """Test dimensions and rendering of matrix algebra sums."""

    def test_real_dimension(self) -> None:
        """Test Mat(2,H) ⊕ Mat(2,H) has real dimension 32."""
        description = AlgebraDescription((Summand(2, Ring.QUATERNION), Summand(2, Ring.QUATERNION)))

        assert description.dimension == 32
        assert description.minimal_module_dim == 8
        assert not description.is_simple
        assert str(description) == "Mat(2,H) ⊕ Mat(2,H)"

    def test_complex_dimension(self) -> None:
        """Test Mat(4,C) over C."""
        description = AlgebraDescription((Summand(4, Ring.COMPLEX),), Scalars.COMPLEX)

        assert description.dimension == 16
        assert description.minimal_module_dim == 4
        assert description.is_simple
