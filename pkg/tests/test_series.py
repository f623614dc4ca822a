import pytest
from hypothesis import given, settings

from fgl_steenrod.errors import NonReducedSeriesError, NonStrictSeriesError, SeriesMismatchError
from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.ring_core.ring_factory import cooperation_ring
from fgl_steenrod.series.composition import compose1, revert, subst2, substitute
from fgl_steenrod.series.power_series import (
    Series1,
    Series2,
    StrictSeries1,
    TruncatedSeries,
    series_add,
    series_mul,
    variables,
)
from tests.conftest import reduced_series, strict_series


class TestTruncatedSeries:
    """Test cases for construction, printing and arithmetic of truncated series."""

    def test_constant_term_rejected(self, k):
        with pytest.raises(NonReducedSeriesError):
            Series1(k, 4, {0: 1, 1: 1})

    def test_terms_above_truncation_dropped(self, k):
        assert str(Series1(k, 3, {1: 1, 4: 1})) == "x"
        assert str(Series1.zero(k, 3)) == "0"

    def test_printing(self):
        """Total degree first; within a degree, higher powers of x first."""
        ring = cooperation_ring(3, 8)
        a1 = RingElement.generator(ring, "a1")
        a2 = RingElement.generator(ring, "a2")
        law = Series2(ring, 4, {(1, 0): 1, (0, 1): 1, (1, 2): a2, (2, 1): a2, (3, 0): a1 + a2})
        assert str(law) == "x + y + (a1 + a2)*x^3 + a2*x^2*y + a2*x*y^2"

    def test_strict(self, k):
        assert Series1.identity(k, 4).is_strict
        assert not Series1(k, 4, {2: 1}).is_strict
        with pytest.raises(NonStrictSeriesError):
            StrictSeries1(k, 4, {2: 1})
        with pytest.raises(NonStrictSeriesError):
            Series1(k, 4, {2: 1}).as_strict()

    def test_multiplication_truncates(self, k):
        f = Series1(k, 4, {1: 1, 2: 1})
        assert str(f * f) == "x^2 + x^4"
        assert str(f**3) == "x^3 + x^4"
        assert f.square() == f * f
        assert series_mul(f, f) == f * f
        assert str(series_add(f, Series1(k, 4, {2: 1, 3: 1}))) == "x + x^3"

    def test_scalar_multiplication(self):
        ring = cooperation_ring(2, 4)
        a1 = RingElement.generator(ring, "a1")
        f = Series1(ring, 4, {1: 1, 2: a1})
        assert str(f * a1) == "a1*x + a1^2*x^2"
        assert a1 * f == f.scale(a1)

    def test_mismatch(self, k):
        x1 = Series1.identity(k, 4)
        with pytest.raises(SeriesMismatchError):
            x1 + Series1.identity(k, 5)
        with pytest.raises(SeriesMismatchError):
            x1 + Series2.x(k, 4)
        with pytest.raises(SeriesMismatchError):
            x1 + Series1.identity(cooperation_ring(1, 4), 4)

    def test_truncate_to(self, k):
        f = Series1(k, 6, {1: 1, 3: 1, 6: 1})
        assert str(f.truncate_to(4)) == "x + x^3"
        assert f.truncate_to(4).truncation == 4
        with pytest.raises(SeriesMismatchError):
            f.truncate_to(7)

    def test_homogeneous_part_and_swap(self, k):
        law = Series2(k, 4, {(1, 0): 1, (0, 1): 1, (2, 1): 1})
        assert str(law.homogeneous_part(3)) == "x^2*y"
        assert str(law.swap()) == "x + y + x*y^2"
        assert law.lowest_degree() == 1

    def test_map_coefficients(self, poly_t):
        ring = cooperation_ring(2, 4)
        a1 = RingElement.generator(ring, "a1")
        f = StrictSeries1(ring, 4, {1: 1, 2: a1, 3: RingElement.generator(ring, "a2")})
        t = RingElement.generator(poly_t, "t")
        mapped = f.map_coefficients(lambda c: RingElement.one(poly_t) if c.is_one() else t, poly_t)
        assert str(mapped) == "x + t*x^2 + t*x^3"
        assert mapped.coefficient(2) == t


class TestComposition:
    """Test cases for substitution, composition and reversion."""

    def test_compose_order(self, k):
        """compose1(f, g) is f(g(x))."""
        f = Series1(k, 4, {1: 1, 2: 1})
        g = Series1(k, 4, {1: 1, 3: 1})
        assert str(compose1(f, g)) == "x + x^2 + x^3"
        assert str(compose1(g, f)) == "x + x^2 + x^3 + x^4"

    def test_strictness_preserved(self, k):
        f = StrictSeries1(k, 4, {1: 1, 2: 1})
        assert isinstance(compose1(f, f), StrictSeries1)

    @given(strict_series(6), strict_series(6), strict_series(6))
    @settings(max_examples=40, deadline=None)
    def test_associative(self, f, g, h):
        assert compose1(compose1(f, g), h) == compose1(f, compose1(g, h))

    @given(strict_series(7))
    @settings(max_examples=40, deadline=None)
    def test_revert_is_two_sided_inverse(self, f):
        inverse = revert(f)
        identity = Series1.identity(f.coeff_ring, f.truncation)
        assert compose1(f, inverse) == identity
        assert compose1(inverse, f) == identity

    @given(reduced_series(6), strict_series(6))
    @settings(max_examples=40, deadline=None)
    def test_restriction_compatible(self, f, g):
        """Lowering the truncation commutes with composition."""
        assert compose1(f, g).truncate_to(4) == compose1(f.truncate_to(4), g.truncate_to(4))

    @given(reduced_series(6), reduced_series(6))
    @settings(max_examples=40, deadline=None)
    def test_product_restriction_compatible(self, f, g):
        assert series_mul(f, g).truncate_to(4) == series_mul(f.truncate_to(4), g.truncate_to(4))

    @given(strict_series(7))
    @settings(max_examples=40, deadline=None)
    def test_revert_restriction_compatible(self, f):
        assert revert(f).truncate_to(4) == revert(f.truncate_to(4))

    @given(reduced_series(6), reduced_series(6))
    @settings(max_examples=40, deadline=None)
    def test_subst2_restriction_compatible(self, u, v):
        k = u.coeff_ring
        F = Series2(k, 6, {(1, 0): 1, (0, 1): 1, (1, 1): 1, (2, 1): 1, (1, 4): 1})
        assert subst2(F, u, v).truncate_to(4) == subst2(F.truncate_to(4), u.truncate_to(4), v.truncate_to(4))

    def test_revert_over_polynomial_ring(self):
        """The inverse of x + a1 x^2 + a2 x^3 is x + a1 x^2 + a2 x^3 + (a1^3 + a1 a2) x^4 modulo x^5."""
        ring = cooperation_ring(3, 8)
        b = StrictSeries1(
            ring,
            4,
            {1: 1, 2: RingElement.generator(ring, "a1"), 3: RingElement.generator(ring, "a2")},
        )
        assert str(revert(b)) == "x + a1*x^2 + a2*x^3 + (a1^3 + a1*a2)*x^4"

    def test_revert_rejects_non_strict(self, k):
        with pytest.raises(NonStrictSeriesError):
            revert(Series1(k, 4, {2: 1}))

    def test_substitute_into_two_variables(self, k):
        x, y = variables(k, 4, 2)
        law = Series2(k, 4, {(1, 0): 1, (0, 1): 1, (1, 1): 1})
        assert subst2(law, x, y) == law
        x1 = Series1.identity(k, 4)
        assert str(subst2(law, x1, x1)) == "x^2"

    def test_substitute_errors(self, k):
        law = Series2(k, 4, {(1, 0): 1, (0, 1): 1})
        x1 = Series1.identity(k, 4)
        with pytest.raises(SeriesMismatchError):
            substitute(law, [x1])
        with pytest.raises(SeriesMismatchError):
            substitute(law, [x1, Series1.identity(k, 5)])
        with pytest.raises(SeriesMismatchError):
            substitute(law, [x1, Series2.x(k, 4)])

    def test_three_variables(self, k):
        a, b, c = variables(k, 3, 3)
        assert isinstance(a, TruncatedSeries)
        assert str(a * b * c) == "x*y*z"
