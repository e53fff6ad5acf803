"""Tests for Fujiki extraction, BBF forms and the torus obstructions."""

from fractions import Fraction

import pytest

from ksymp import clifford_repr, hk_obstructions
from ksymp.errors import MissingMultilinearData, NoNonNullAlpha, SignAmbiguous
from ksymp.models.clifford import Signature
from ksymp.models.intersection import IntersectionModel
from ksymp.models.matrix import Matrix, make_vector
from ksymp.models.polynomial import HomogeneousPoly
from ksymp.models.scalar import Backend, gaussian
from ksymp.models.two_form_span import QuadraticFormOnSpan


def _vec(*values: object) -> object:
    return make_vector(list(values), Backend.EXACT)


def _lorentzian(num_vars: int = 3) -> HomogeneousPoly:
    """t0² + … − t_last²"""
    return HomogeneousPoly.from_gram(Matrix.diagonal([1] * (num_vars - 1) + [-1]))


@pytest.fixture(name="torus")
def torus_fixture() -> IntersectionModel:
    """Cohomology model of an 8-dimensional torus with a quaternionic span in H²"""
    module = clifford_repr.gamma_representation(Signature(3, 0), copies=2)
    span = clifford_repr.embed_forms(module, clifford_repr.invariant_metric(module))
    return hk_obstructions.torus_model(span)


class TestFujiki:
    """Test extraction of the Fujiki constant and the BBF form."""

    def test_odd_n_fixes_sign_by_constant(self) -> None:
        """Test that c > 0 for odd n."""
        model = IntersectionModel(3, 1, _lorentzian().scale(-2))

        q = hk_obstructions.fujiki_extract(model)

        assert q.c == 2
        assert q.gram == Matrix.diagonal([-1, -1, 1])

    def test_even_n_needs_kahler_class(self) -> None:
        """Test that the sign is ambiguous for even n without a Kähler class."""
        model = IntersectionModel(3, 2, _lorentzian() ** 2 * 5)

        with pytest.raises(SignAmbiguous):
            hk_obstructions.fujiki_extract(model)

    def test_kahler_class_orients_q(self) -> None:
        """Test that q is made positive on the Kähler class."""
        model = IntersectionModel(3, 2, _lorentzian() ** 2 * 5, kahler_class=_vec(0, 0, 1))

        q = hk_obstructions.fujiki_extract(model)

        assert q.c == 5
        assert q.value(_vec(0, 0, 1)) == 1

    def test_null_kahler_class(self) -> None:
        """Test that a null Kähler class raises."""
        model = IntersectionModel(3, 2, _lorentzian() ** 2, kahler_class=_vec(1, 0, 1))

        with pytest.raises(SignAmbiguous):
            hk_obstructions.fujiki_extract(model)

    def test_torus_constant(self, torus: IntersectionModel) -> None:
        """Test ∫η⁴ = 24·q(η)² on the quaternionic torus."""
        model = IntersectionModel(torus.b2, torus.n, torus.top_poly, torus.multilinear, _vec(1, 0, 0))

        q = hk_obstructions.fujiki_extract(model)

        assert q.c == 24
        assert q.gram == Matrix.identity(3)

    @pytest.mark.parametrize("eta", [(1, 0, 0), (1, 2, 3), (0, Fraction(1, 2), -1)])
    def test_bbf_is_multiple_of_q(self, torus: IntersectionModel, eta: tuple[object, ...]) -> None:
        """Test that the ring formula gives (c/3)·q(Ω,Ω̄)·q(η) for n = 2."""
        model = IntersectionModel(torus.b2, torus.n, torus.top_poly, torus.multilinear, _vec(1, 0, 0))
        q = hk_obstructions.fujiki_extract(model)
        omega = [0, 1, gaussian(0, 1)]
        area = q.bilinear(omega, [0, 1, gaussian(0, -1)])

        value = hk_obstructions.bbf_from_ring(model, omega, list(eta))

        assert area == 2
        assert value == q.c * area * q.value(list(eta)) / 3

    def test_bbf_needs_multilinear_data(self) -> None:
        """Test that the top polynomial alone is not enough."""
        model = IntersectionModel(3, 1, _lorentzian())

        with pytest.raises(MissingMultilinearData):
            hk_obstructions.bbf_from_ring(model, [0, 1, gaussian(0, 1)], [1, 0, 0])


class TestPairing:
    """Test polarization, the fundamental pairing and its identity."""

    def test_polarize_bilinear(self) -> None:
        """Test F(e0, e1) = 1/2 for t0 t1."""
        form = hk_obstructions.polarize(HomogeneousPoly.variable(2, 0) * HomogeneousPoly.variable(2, 1))

        assert form([_vec(1, 0), _vec(0, 1)]) == Fraction(1, 2)

    def test_polarize_diagonal(self) -> None:
        """Test F(x, …, x) = p(x)."""
        poly = _lorentzian() ** 2
        x = _vec(1, -2, 3)

        assert hk_obstructions.polarize(poly)([x] * 4) == poly.evaluate(list(x))

    def test_polarize_arity(self) -> None:
        """Test that the number of classes must match the degree."""
        with pytest.raises(ValueError):
            hk_obstructions.polarize(_lorentzian())([_vec(1, 0, 0)])

    def test_gradient_route_matches_wedge_table(self, torus: IntersectionModel) -> None:
        """Test that both pairing routes agree."""
        without_table = IntersectionModel(torus.b2, torus.n, torus.top_poly)
        alpha, beta = _vec(1, 2, 3), _vec(0, 1, -1)

        by_table = hk_obstructions.fundamental_pairing(torus)(alpha, beta)
        by_gradient = hk_obstructions.fundamental_pairing(without_table)(alpha, beta)

        assert by_table == by_gradient

    def test_identity_holds(self, torus: IntersectionModel) -> None:
        """Test ∫α³β = c·q(α)·q(α,β) with c_γ = c."""
        model = IntersectionModel(torus.b2, torus.n, torus.top_poly, torus.multilinear, _vec(1, 0, 0))
        q = hk_obstructions.fujiki_extract(model)

        report = hk_obstructions.pairing_check(model, hk_obstructions.fundamental_pairing(model), model.n, q, samples=10)

        assert report.passed
        assert report.c_gamma == q.c
        assert report.max_residual == 0
        assert report.pairs_checked == 10

    def test_identity_fails_for_wrong_degree(self) -> None:
        """Test that q(α,β) does not satisfy the identity with m = 2."""
        model = IntersectionModel(3, 1, _lorentzian())
        q = QuadraticFormOnSpan(Matrix.diagonal([1, 1, -1]), Fraction(1), 1)

        report = hk_obstructions.pairing_check(model, q.bilinear, 2, q, samples=10, seed=4)

        assert not report.passed
        assert report.max_residual > 0

    def test_variable_count_checked(self) -> None:
        """Test that q and the model must share b2."""
        model = IntersectionModel(3, 1, _lorentzian())
        q = QuadraticFormOnSpan(Matrix.identity(2), Fraction(1), 1)

        with pytest.raises(ValueError):
            hk_obstructions.pairing_check(model, q.bilinear, 1, q)

    def test_null_form_has_no_alpha(self) -> None:
        """Test that the zero form gives no usable class."""
        model = IntersectionModel(2, 1, HomogeneousPoly.variable(2, 0) * HomogeneousPoly.variable(2, 1))
        q = QuadraticFormOnSpan(Matrix.zeros(2, 2), Fraction(1), 1)

        with pytest.raises(NoNonNullAlpha):
            hk_obstructions.pairing_check(model, q.bilinear, 1, q)


class TestInjectivity:
    """Test restriction maps against the pairing identity."""

    RESTRICTION = Matrix.from_rows([[1, 0, 0], [0, 1, 0]])

    def test_kernel_contradicts_nondegenerate_q(self) -> None:
        """Test that killing a class with q(·, β) ≠ 0 is flagged."""
        q = QuadraticFormOnSpan(Matrix.identity(3), Fraction(1), 1)

        report = hk_obstructions.injectivity_check(q, self.RESTRICTION)

        assert not report.injective
        assert not report.consistent
        assert [list(v) for v in report.violating] == [[0, 0, 1]]

    def test_kernel_in_radical_is_consistent(self) -> None:
        """Test that killing the radical is allowed."""
        q = QuadraticFormOnSpan(Matrix.diagonal([1, 1, 0]), Fraction(1), 1)

        report = hk_obstructions.injectivity_check(q, self.RESTRICTION)

        assert not report.injective
        assert report.consistent

    def test_injective_restriction(self) -> None:
        """Test an isomorphism."""
        q = QuadraticFormOnSpan(Matrix.identity(3), Fraction(1), 1)

        report = hk_obstructions.injectivity_check(q, Matrix.identity(3))

        assert report.injective and report.consistent
        assert report.kernel == ()


class TestObstructions:
    """Test the torus bounds and verdicts."""

    @pytest.mark.parametrize("b2,expected", [(3, 1), (4, 1), (5, 2), (7, 4), (8, 4), (23, 1024), (24, 1024)])
    def test_torus_bound(self, b2: int, expected: int) -> None:
        """Test 2^{⌊(b2−1)/2⌋−1}."""
        assert hk_obstructions.torus_bound(b2) == expected

    def test_torus_bound_domain(self) -> None:
        """Test that b2 < 3 is rejected."""
        with pytest.raises(ValueError):
            hk_obstructions.torus_bound(2)

    def test_large_b2_excludes_torus(self) -> None:
        """Test b2 = 24 in complex dimension 10."""
        verdict = hk_obstructions.ogrady_verdict(24, 10)

        assert not verdict.torus_possible
        assert verdict.naive_torus_bound == 1024
        assert verdict.bbf_signature == Signature(21, 3)
        assert "contains no trianalytic complex torus" in verdict.narrative

    def test_refined_bound_decides(self) -> None:
        """Test b2 = 8 in dimension 6, where only the refined bound excludes a torus."""
        verdict = hk_obstructions.ogrady_verdict(8, 6)

        assert verdict.naive_torus_bound == 4
        assert verdict.clifford_signatures == (Signature(4, 3), Signature(2, 5))
        assert verdict.refined_b1_bound == 16
        assert verdict.refined_torus_dim_c_bound == 8
        assert verdict.effective_torus_bound == 8
        assert verdict.max_proper_subvariety_dim_c == 4
        assert not verdict.torus_possible

    def test_no_obstruction(self) -> None:
        """Test b2 = 4 in dimension 4 leaves room for a surface torus."""
        verdict = hk_obstructions.ogrady_verdict(4, 4)

        assert verdict.effective_torus_bound == 2
        assert verdict.torus_possible
        assert "existence is not claimed" in verdict.narrative

    def test_naive_bound_decides(self) -> None:
        """Test b2 = 7 in dimension 4."""
        assert not hk_obstructions.ogrady_verdict(7, 4).torus_possible

    @pytest.mark.parametrize("b2,dim_c", [(3, 4), (8, 5), (8, 0)])
    def test_verdict_domain(self, b2: int, dim_c: int) -> None:
        """Test that b2 ≥ 4 and an even positive dimension are required."""
        with pytest.raises(ValueError):
            hk_obstructions.ogrady_verdict(b2, dim_c)

    @pytest.mark.parametrize("b2,dim_c,expected", [(24, 2, False), (24, 4, False), (20, 2, True), (23, 4, True), (24, 6, None)])
    def test_known_factor_verdict(self, b2: int, dim_c: int, expected: bool | None) -> None:
        """Test comparison with the largest known b2 per factor dimension."""
        assert hk_obstructions.known_factor_verdict(b2, dim_c) is expected

    def test_factor_narrative(self) -> None:
        """Test that excluded factor dimensions name an unknown type."""
        text = hk_obstructions.factor_narrative(24, [2, 4, 6])

        assert "previously unknown type" in text
        assert "dimension 6: no b2 bound recorded" in text

    def test_b2_comparison_domain(self) -> None:
        """Test that negative Betti numbers are rejected."""
        with pytest.raises(ValueError):
            hk_obstructions.b2_comparison_verdict(-1, 3)
