import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fgl_steenrod.errors import NotAdditiveError, SeriesMismatchError, TruncationTooSmallError
from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.ring_core.ring_factory import create_standard_ring, polynomial_ring
from fgl_steenrod.series.composition import compose1, revert
from fgl_steenrod.steenrod.additive_series import AdditiveStrictSeries, compose_aut, depth, invert_aut, make_additive
from fgl_steenrod.steenrod.dual_steenrod import derive_antipode, derive_coproduct, derive_presentation
from fgl_steenrod.utils.sampling import random_additive_point

GRADED = polynomial_ring({"t": 1, "s": 3}, truncation_degree=31)

COPRODUCTS = {
    "xi1": "1 ⊗ xi1 + xi1 ⊗ 1",
    "xi2": "1 ⊗ xi2 + xi1 ⊗ xi1^2 + xi2 ⊗ 1",
    "xi3": "1 ⊗ xi3 + xi1 ⊗ xi2^2 + xi2 ⊗ xi1^4 + xi3 ⊗ 1",
    "xi4": "1 ⊗ xi4 + xi1 ⊗ xi3^2 + xi2 ⊗ xi2^4 + xi3 ⊗ xi1^8 + xi4 ⊗ 1",
}

ANTIPODES = {
    "xi1": "xi1",
    "xi2": "xi1^3 + xi2",
    "xi3": "xi1^7 + xi1^4*xi2 + xi1*xi2^2 + xi3",
    "xi4": "xi1^15 + xi1^12*xi2 + xi1^9*xi2^2 + xi1^8*xi3 + xi1^3*xi2^4 + xi1*xi3^2 + xi2^5 + xi4",
}


class TestAdditiveSeries:
    """Test cases for strict automorphisms of the additive law."""

    def test_make_additive(self, k):
        assert str(make_additive([1, 0], k, 4)) == "x + x^2"
        assert str(make_additive({2: 1, 4: 1}, k, 4)) == "x + x^2 + x^4"
        assert make_additive([1, 1, 1], k, 4).components() == make_additive([1, 1], k, 4).components()

    def test_rejects_non_additive(self, k):
        with pytest.raises(NotAdditiveError) as exc_info:
            make_additive({3: 1}, k, 4)
        assert exc_info.value.degree == 3

    def test_depth(self):
        assert [depth(n) for n in (1, 2, 3, 4, 7, 8, 16)] == [0, 1, 1, 2, 2, 3, 4]

    @pytest.mark.parametrize("seed", range(10))
    def test_closed_forms_match_composition(self, seed):
        ring = create_standard_ring("mo-cooperations-3")
        rng = random.Random(seed)
        f = random_additive_point(rng, ring, 8)
        g = random_additive_point(rng, ring, 8)
        assert compose_aut(f, g).underlying == compose1(f.underlying, g.underlying)
        assert invert_aut(f).underlying == revert(f.underlying)
        assert compose_aut(f, invert_aut(f)) == AdditiveStrictSeries.identity(ring, 8)

    @given(st.integers(min_value=0, max_value=2**32 - 1), st.sampled_from([4, 8, 16, 32]))
    @settings(max_examples=25, deadline=None)
    def test_group_axioms(self, seed, truncation):
        """Associativity, two-sided identity and two-sided inverses of the closed forms."""
        rng = random.Random(seed)
        f, g, h = (random_additive_point(rng, GRADED, truncation) for _ in range(3))
        identity = AdditiveStrictSeries.identity(GRADED, truncation)
        assert compose_aut(compose_aut(f, g), h) == compose_aut(f, compose_aut(g, h))
        assert compose_aut(f, identity) == f
        assert compose_aut(identity, f) == f
        assert compose_aut(f, invert_aut(f)) == identity
        assert compose_aut(invert_aut(f), f) == identity

    def test_mismatch(self, k):
        with pytest.raises(SeriesMismatchError):
            compose_aut(AdditiveStrictSeries.identity(k, 4), AdditiveStrictSeries.identity(k, 8))


class TestDualSteenrod:
    """Test cases for the derived coproduct and antipode tables."""

    @pytest.mark.parametrize("generator_count", [1, 2, 3, 4])
    def test_tables(self, generator_count):
        p = derive_presentation(generator_count)
        assert p.truncation == 2**generator_count
        assert p.convention == "outer-left"
        names = [f"xi{n}" for n in range(1, generator_count + 1)]
        assert list(p.names) == names
        assert {name: str(p.coproduct_table[name]) for name in names} == {name: COPRODUCTS[name] for name in names}
        assert {name: str(p.antipode_table[name]) for name in names} == {name: ANTIPODES[name] for name in names}

    def test_larger_truncation_gives_same_tables(self):
        """Raising the truncation past 2^k changes nothing."""
        p = derive_presentation(3, 16)
        assert str(p.coproduct_table["xi3"]) == COPRODUCTS["xi3"]
        assert str(p.antipode_table["xi3"]) == ANTIPODES["xi3"]

    def test_truncation_too_small(self):
        with pytest.raises(TruncationTooSmallError):
            derive_coproduct(3, 7)
        with pytest.raises(TruncationTooSmallError):
            derive_antipode(2, 3)

    def test_negative_generator_count(self):
        with pytest.raises(ValueError):
            derive_coproduct(-1)

    def test_no_generators(self):
        p = derive_presentation(0)
        assert p.coproduct_table == {}
        assert p.antipode_table == {}
        assert p.truncation == 1

    def test_multiplicative_extension(self):
        p = derive_presentation(2)
        xi1 = p.generator("xi1")
        assert str(p.coproduct(xi1**2)) == "1 ⊗ xi1^2 + xi1^2 ⊗ 1"
        assert str(p.coproduct(xi1**2 + 1)) == "1 ⊗ 1 + 1 ⊗ xi1^2 + xi1^2 ⊗ 1"
        assert p.antipode(xi1**3) == xi1**3
        assert p.counit(RingElement.one(p.ring) + xi1) == 1
