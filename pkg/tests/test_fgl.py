from itertools import product

import pytest
from hypothesis import given, settings

from fgl_steenrod.errors import AxiomViolationError, DegreeOutOfRangeError, SeriesMismatchError
from fgl_steenrod.fgl.formal_group_law import (
    FormalGroupLaw,
    check_axioms,
    is_endomorphism,
    is_homomorphism,
    n_series,
    transport,
    twist_additive,
)
from fgl_steenrod.ring_core.element import RingElement, RingHom
from fgl_steenrod.ring_core.ring_factory import ground_field
from fgl_steenrod.series.composition import compose1, revert
from fgl_steenrod.series.power_series import Series1, Series2, StrictSeries1
from tests.conftest import strict_series, strict_series_over_gf2


class TestCheckAxioms:
    """Test cases for certifying bivariate series as formal group laws."""

    def test_standard_laws(self, k):
        additive = FormalGroupLaw.additive(k, 6)
        multiplicative = FormalGroupLaw.multiplicative(k, 6)
        assert additive.validated_to == 6
        assert additive.is_additive()
        assert str(multiplicative) == "x + y + x*y"
        assert not multiplicative.is_additive()

    def test_unitality_failure(self, k):
        with pytest.raises(AxiomViolationError) as exc_info:
            check_axioms(Series2(k, 4, {(1, 0): 1, (0, 1): 1, (2, 0): 1}))
        assert exc_info.value.axiom == "unitality"
        assert exc_info.value.degree == 2
        assert str(exc_info.value.residual) == "x^2"

    def test_commutativity_failure(self, k):
        with pytest.raises(AxiomViolationError) as exc_info:
            check_axioms(Series2(k, 3, {(1, 0): 1, (0, 1): 1, (2, 1): 1}))
        assert exc_info.value.axiom == "commutativity"
        assert exc_info.value.degree == 3
        assert str(exc_info.value.residual) == "x^2*y + x*y^2"

    def test_partial_certification(self, k):
        """Below the failing degree the series still certifies."""
        F = Series2(k, 4, {(1, 0): 1, (0, 1): 1, (3, 1): 1})
        assert check_axioms(F, 3).validated_to == 3
        with pytest.raises(AxiomViolationError):
            check_axioms(F)

    def test_degree_out_of_range(self, k):
        F = Series2(k, 4, {(1, 0): 1, (0, 1): 1})
        with pytest.raises(DegreeOutOfRangeError):
            check_axioms(F, 0)
        with pytest.raises(DegreeOutOfRangeError):
            check_axioms(F, 5)

    def test_law_with_coefficients(self, small_ring, poly_t):
        a1 = RingElement.generator(small_ring, "a1")
        F = check_axioms(Series2(small_ring, 4, {(1, 0): 1, (0, 1): 1, (1, 1): a1}))
        t = RingElement.generator(poly_t, "t")
        pushed = F.base_change(RingHom(small_ring, poly_t, [t, t**2]))
        assert str(pushed) == "x + y + t*x*y"
        with pytest.raises(SeriesMismatchError):
            F.base_change(RingHom.identity(poly_t))


class TestNSeries:
    """Test cases for n-series."""

    def test_multiplicative(self, k):
        F = FormalGroupLaw.multiplicative(k, 4)
        assert str(n_series(F, 0)) == "0"
        assert str(n_series(F, 1)) == "x"
        assert str(n_series(F, 2)) == "x^2"
        assert str(n_series(F, 3)) == "x + x^2 + x^3"
        assert str(n_series(F, 4)) == "x^4"

    def test_additive(self, k):
        F = FormalGroupLaw.additive(k, 6)
        assert n_series(F, 2).is_zero()
        assert n_series(F, 3) == Series1.identity(k, 6)

    def test_negative(self, k):
        with pytest.raises(ValueError):
            n_series(FormalGroupLaw.additive(k, 4), -1)


class TestTwistAndTransport:
    """Test cases for laws built from strict series."""

    def test_twisted_law_has_vanishing_two_series(self, k):
        phi = StrictSeries1(k, 6, {1: 1, 3: 1})
        G = twist_additive(phi)
        assert not G.is_additive()
        assert n_series(G, 2).is_zero()
        assert is_homomorphism(phi, G, FormalGroupLaw.additive(k, 6))

    def test_twist_by_additive_series(self, k):
        assert twist_additive(StrictSeries1(k, 6, {1: 1, 2: 1, 4: 1})).is_additive()

    def test_transport_matches_twist(self, k):
        """Transporting x + y along phi is twisting by the inverse of phi."""
        phi = StrictSeries1(k, 6, {1: 1, 3: 1, 5: 1})
        additive = FormalGroupLaw.additive(k, 6)
        assert transport(additive, phi).law == twist_additive(revert(phi)).law

    def test_transport_round_trip(self, k):
        F = FormalGroupLaw.multiplicative(k, 5)
        phi = StrictSeries1(k, 5, {1: 1, 2: 1, 3: 1})
        assert transport(transport(F, phi), revert(phi)).law == F.law

    def test_transport_mismatch(self, k):
        with pytest.raises(SeriesMismatchError):
            transport(FormalGroupLaw.additive(k, 4), StrictSeries1.identity(k, 5))

    @given(strict_series(6))
    @settings(max_examples=40, deadline=None)
    def test_every_twist_has_vanishing_two_series(self, phi):
        assert n_series(twist_additive(phi), 2).is_zero()

    @given(strict_series(6), strict_series(6))
    @settings(max_examples=40, deadline=None)
    def test_transport_is_a_group_action(self, phi, psi):
        """Transporting along psi after phi is transporting along their composite."""
        F = FormalGroupLaw.multiplicative(ground_field(), 6)
        assert transport(F, compose1(psi, phi)).law == transport(transport(F, phi), psi).law

    @given(strict_series(6))
    @settings(max_examples=40, deadline=None)
    def test_transport_restriction_compatible(self, phi):
        F = FormalGroupLaw.multiplicative(ground_field(), 6)
        lowered = check_axioms(F.law.truncate_to(4))
        assert transport(F, phi).law.truncate_to(4) == transport(lowered, phi.truncate_to(4)).law


class TestHomomorphisms:
    """Test cases for homomorphism checks."""

    def test_failure_reports_lowest_degree(self, k):
        check = is_endomorphism(Series1(k, 4, {1: 1, 3: 1}), FormalGroupLaw.additive(k, 4))
        assert not check
        assert check.degree == 3
        assert str(check.residual) == "x^2*y + x*y^2"

    def test_frobenius_is_additive(self, k):
        assert is_endomorphism(Series1(k, 4, {2: 1}), FormalGroupLaw.additive(k, 4))

    def test_additive_endomorphisms_exhaustive(self, k):
        """Strict endomorphisms of x + y mod x^9 are exactly the series supported on 1, 2, 4, 8."""
        additive = FormalGroupLaw.additive(k, 8)
        for bits in product([0, 1], repeat=7):
            f = strict_series_over_gf2(bits, 8)
            expected = set(f.exponents()) <= {1, 2, 4, 8}
            assert bool(is_endomorphism(f, additive)) == expected, str(f)

    def test_mismatch(self, k, small_ring):
        with pytest.raises(SeriesMismatchError):
            is_homomorphism(Series1.identity(k, 4), FormalGroupLaw.additive(k, 4), FormalGroupLaw.additive(k, 5))
        with pytest.raises(SeriesMismatchError):
            is_endomorphism(Series1.identity(k, 4), FormalGroupLaw.additive(small_ring, 4))
