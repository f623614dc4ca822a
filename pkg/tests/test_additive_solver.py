import random
from itertools import product

import pytest

from fgl_steenrod.errors import AdditiveObstructionError
from fgl_steenrod.fgl.additive_solver import solve_iso_to_additive, transported_law
from fgl_steenrod.fgl.formal_group_law import FormalGroupLaw, check_axioms, transport, twist_additive
from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.ring_core.ring_factory import create_standard_ring
from fgl_steenrod.series.composition import compose1, revert
from fgl_steenrod.series.power_series import Series1, Series2
from fgl_steenrod.steenrod.additive_series import AdditiveStrictSeries
from fgl_steenrod.utils.sampling import random_graded_strict_series
from tests.conftest import strict_series_over_gf2


class TestObstruction:
    """Test cases for laws with no strict isomorphism to x + y."""

    def test_multiplicative_law(self, k):
        with pytest.raises(AdditiveObstructionError) as exc_info:
            solve_iso_to_additive(FormalGroupLaw.multiplicative(k, 8))
        assert exc_info.value.degree == 2
        assert str(exc_info.value.residual) == "x*y"
        assert str(exc_info.value.two_series_residual) == "x^2"

    def test_law_with_coefficients(self, small_ring):
        a1 = RingElement.generator(small_ring, "a1")
        F = check_axioms(Series2(small_ring, 4, {(1, 0): 1, (0, 1): 1, (1, 1): a1}))
        with pytest.raises(AdditiveObstructionError) as exc_info:
            solve_iso_to_additive(F)
        assert exc_info.value.degree == 2
        assert str(exc_info.value.residual) == "a1*x*y"
        assert str(exc_info.value.two_series_residual) == "a1*x^2"


def laws_isomorphic_to_multiplicative(k, truncation: int) -> list[FormalGroupLaw]:
    multiplicative = FormalGroupLaw.multiplicative(k, truncation)
    twists = [[1], [0, 1, 0, 1], [1, 1, 1, 1, 1]]
    return [multiplicative] + [
        transport(multiplicative, strict_series_over_gf2(bits[: truncation - 1], truncation)) for bits in twists
    ]


class TestObstructionIsGenuine:
    """When the solver gives up at degree d, no strict series carries the law to x + y."""

    @pytest.mark.parametrize("truncation", [3, 4, 5, 6])
    def test_no_strict_series_transports_to_additive(self, k, truncation):
        additive = FormalGroupLaw.additive(k, truncation).law
        candidates = [strict_series_over_gf2(bits, truncation) for bits in product([0, 1], repeat=truncation - 1)]
        for F in laws_isomorphic_to_multiplicative(k, truncation):
            with pytest.raises(AdditiveObstructionError) as exc_info:
                solve_iso_to_additive(F)
            agreement = []
            for psi in candidates:
                difference = transport(F, psi).law - additive
                assert difference, f"{psi} carries {F} to the additive law"
                agreement.append(difference.lowest_degree())
            assert max(agreement) == exc_info.value.degree


class TestSolver:
    """Test cases for laws that are isomorphic to x + y."""

    def test_additive_law_gives_identity(self, k, small_ring):
        assert solve_iso_to_additive(FormalGroupLaw.additive(k, 8)) == Series1.identity(k, 8)
        assert solve_iso_to_additive(FormalGroupLaw.additive(small_ring, 4)) == Series1.identity(small_ring, 4)

    def test_transported_law_of_identity(self, k):
        F = FormalGroupLaw.multiplicative(k, 4)
        assert transported_law(F, Series1.identity(k, 4)) == F.law

    def test_exhaustive_over_ground_field(self):
        """Every law twisted from a strict series mod x^7 is solved."""
        for bits in product([0, 1], repeat=5):
            phi = strict_series_over_gf2(bits, 6)
            F = twist_additive(phi)
            psi = solve_iso_to_additive(F)
            assert transport(F, psi).is_additive(), str(phi)

    @pytest.mark.parametrize("seed", range(50))
    def test_random_graded_laws(self, seed):
        """The solution differs from the twisting series by an automorphism of x + y."""
        ring = create_standard_ring("solver-a2-a6")
        phi = random_graded_strict_series(random.Random(seed), ring, 8)
        F = twist_additive(phi)
        assert transport(F, phi).is_additive()
        psi = solve_iso_to_additive(F)
        assert transport(F, psi).is_additive()
        AdditiveStrictSeries(compose1(psi, revert(phi)))

    def test_solution_is_smallest_choice(self, k):
        """At degree 2 the free coefficient is left at zero."""
        phi = strict_series_over_gf2([1, 0, 0], 4)
        psi = solve_iso_to_additive(twist_additive(phi))
        assert psi.coefficient(2).is_zero()
