"""Tests for matrix representations of Clifford algebras."""

import pytest

from ksymp.models.clifford import Multivector, Signature
from ksymp.models.clifford_module import CliffordModule
from ksymp.models.matrix import Matrix
from ksymp.models.scalar import Backend

J = Matrix.from_rows([[0, -1], [1, 0]])


class TestCliffordModule:
    """Test construction and the representation map."""

    def test_default_gram(self) -> None:
        """Test that the gram matrix follows the signature."""
        module = CliffordModule.from_generators(Signature(1, 0), [J])

        assert module.gram == Matrix.from_rows([[-1]])
        assert module.dimension == 2
        assert module.rank == 1
        assert module.is_nontrivial()

    def test_represent_is_linear_in_blades(self) -> None:
        """Test ρ(2 + 3 e1) = 2 I + 3 J."""
        signature = Signature(1, 0)
        module = CliffordModule.from_generators(signature, [J])

        represented = module.represent(Multivector(signature, {0: 2, 1: 3}))

        assert represented == Matrix.identity(2) * 2 + J * 3

    def test_blade_matrix_is_product(self) -> None:
        """Test that blade matrices multiply generators in index order."""
        signature = Signature(0, 2)
        x = Matrix.from_rows([[0, 1], [1, 0]])
        z = Matrix.from_rows([[1, 0], [0, -1]])
        module = CliffordModule.from_generators(signature, [x, z])

        assert module.blade_matrix(0b11) == x @ z
        assert module.blade_matrix(0) == Matrix.identity(2)

    def test_zero_generators_are_trivial(self) -> None:
        """Test that a module of zero matrices is flagged trivial."""
        module = CliffordModule.from_generators(Signature(1, 0), [Matrix.zeros(2, 2)])

        assert not module.is_nontrivial()

    def test_mismatched_shapes_rejected(self) -> None:
        """Test that generators must act on the module dimension."""
        with pytest.raises(ValueError):
            CliffordModule(Signature(1, 0), (J,), Matrix.from_rows([[-1]]), 4)

    def test_gram_size_checked(self) -> None:
        """Test that the gram matrix has one row per generator."""
        with pytest.raises(ValueError):
            CliffordModule(Signature(1, 0), (J,), Matrix.identity(2), 2)

    def test_astype(self) -> None:
        """Test conversion to floats."""
        module = CliffordModule.from_generators(Signature(1, 0), [J]).astype(Backend.FLOAT64)

        assert module.backend is Backend.FLOAT64
        assert module.generators[0][1, 0] == 1.0
