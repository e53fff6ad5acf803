"""Tests for spans of two-forms and quadratic forms on them."""

from fractions import Fraction

import numpy as np
import pytest

from ksymp.errors import NotAntisymmetric, RankDeficient
from ksymp.models.matrix import Matrix
from ksymp.models.scalar import Backend
from ksymp.models.two_form_span import QuadraticFormOnSpan, TwoFormSpan, Witness
from tests.infra.utils import elementary_form, standard_form


class TestTwoFormSpan:
    """Test span validation and combinations."""

    def test_basic_properties(self) -> None:
        """Test k, dim_v and n of a two-form span on R⁸."""
        span = TwoFormSpan((standard_form(8), elementary_form(8, 0, 2)))

        assert span.k == 2
        assert span.dim_v == 8
        assert span.n == 2
        assert span.backend is Backend.EXACT

    def test_linear_combination(self) -> None:
        """Test Σ t_i ω_i."""
        span = TwoFormSpan((elementary_form(4, 0, 1), elementary_form(4, 2, 3)))

        assert span.form([1, 1]) == standard_form(4)
        with pytest.raises(ValueError):
            span.form([1])

    def test_empty_span_rejected(self) -> None:
        """Test that a span needs a form."""
        with pytest.raises(RankDeficient):
            TwoFormSpan(())

    def test_dependent_forms_rejected(self) -> None:
        """Test that a repeated form is rejected."""
        form = standard_form(4)

        with pytest.raises(RankDeficient):
            TwoFormSpan((form, form * 2))

    def test_symmetric_form_rejected(self) -> None:
        """Test that forms must be antisymmetric."""
        with pytest.raises(NotAntisymmetric):
            TwoFormSpan((Matrix.identity(4),))

    def test_shape_mismatch_rejected(self) -> None:
        """Test that forms must share a size."""
        with pytest.raises(NotAntisymmetric):
            TwoFormSpan((standard_form(4), standard_form(6)))

    def test_notes_accumulate(self) -> None:
        """Test that with_note appends."""
        span = TwoFormSpan((standard_form(4),), notes=("first",)).with_note("second")

        assert span.notes == ("first", "second")

    def test_astype(self) -> None:
        """Test converting a span to floats."""
        span = TwoFormSpan((standard_form(4),)).astype(Backend.FLOAT64)

        assert span.backend is Backend.FLOAT64
        assert span.forms[0][0, 1] == 1.0


class TestQuadraticFormOnSpan:
    """Test the quadratic form value type."""

    def test_values(self) -> None:
        """Test bilinear and quadratic values."""
        q = QuadraticFormOnSpan(Matrix.from_rows([[1, 0], [0, -1]]), Fraction(1), 2)

        assert q.value([1, 2]) == -3
        assert q.bilinear([1, 0], [0, 1]) == 0
        assert q.k == 2
        assert q.is_real()

    def test_radical(self) -> None:
        """Test the radical of a degenerate form."""
        q = QuadraticFormOnSpan(Matrix.from_rows([[1, 0], [0, 0]]), Fraction(1), 1)

        assert q.rank() == 1
        assert not q.is_nondegenerate()
        assert [list(v) for v in q.radical()] == [[0, 1]]

    def test_negation_keeps_odd_power_product(self) -> None:
        """Test that c·qⁿ is unchanged by negation for odd n."""
        q = QuadraticFormOnSpan(Matrix.identity(2), Fraction(2), 3)
        negated = q.negated()

        assert negated.gram == -q.gram
        assert negated.c == -2
        assert negated.c * negated.value([1, 1]) ** 3 == q.c * q.value([1, 1]) ** 3
        assert "sign flipped" in negated.normalization

    def test_negation_even_power(self) -> None:
        """Test that c is unchanged for even n."""
        assert QuadraticFormOnSpan(Matrix.identity(2), Fraction(2), 2).negated().c == 2

    def test_as_poly(self) -> None:
        """Test the polynomial of a diagonal form."""
        q = QuadraticFormOnSpan(Matrix.diagonal([1, 3]), Fraction(1), 1)

        assert q.as_poly().coefficients == {(2, 0): 1, (0, 2): 3}


class TestWitness:
    """Test the witness value type."""

    def test_for_form(self) -> None:
        """Test that coefficient arrays become tuples."""
        witness = Witness.for_form("degenerate", "kernel found", np.array([Fraction(0), Fraction(1)], dtype=object), 6)

        assert witness.coefficients == (0, 1)
        assert witness.kernel_dim == 6
        assert witness.monomial is None
