import random

import pytest

from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.ring_core.tensor import TensorElement
from fgl_steenrod.steenrod.dual_steenrod import derive_coproduct, derive_presentation
from fgl_steenrod.steenrod.hopf_verification import coassociativity_residual, verify_hopf
from fgl_steenrod.steenrod.milnor_oracle import milnor_oracle_compare, naive_coproduct, naive_coproduct_of
from fgl_steenrod.utils.sampling import random_element


def toggle(p, name, left, right):
    """Add (mod 2) the term ``left ⊗ right`` to the coproduct of ``name``."""
    term = TensorElement.pure(
        RingElement.monomial(p.ring, left), RingElement.monomial(p.ring, right), total_truncation=p.truncation
    )
    return p.with_coproduct(name, p.coproduct_table[name] + term)


class TestVerifyHopf:
    """Test cases for the mechanical Hopf axiom checks."""

    @pytest.mark.parametrize("generator_count, truncation", [(1, 2), (2, 4), (3, 8), (3, 16)])
    def test_derived_tables_pass(self, generator_count, truncation):
        report = verify_hopf(derive_presentation(generator_count, truncation), samples=4, seed=1)
        assert report.passed, report.failures()
        assert report.truncation == truncation
        identities = {c.identity for c in report.checks}
        assert "coassociativity" in identities
        assert "antipode-involution" in identities
        assert "coproduct-recomputed" in identities

    def test_no_generators(self):
        report = verify_hopf(derive_presentation(0), samples=2)
        assert report.passed
        assert {c.subject for c in report.checks} == {"sample 0", "sample 1"}

    def test_missing_antipode(self):
        with pytest.raises(ValueError):
            verify_hopf(derive_coproduct(2))

    def test_mutated_counit_term(self):
        """Dropping xi2 ⊗ 1 breaks coassociativity at degree 3 and the right counit."""
        p = toggle(derive_presentation(2), "xi2", {"xi2": 1}, {})
        report = verify_hopf(p, samples=0)
        assert not report.passed
        failures = {(f.identity, f.subject): f for f in report.failures()}
        coassociativity = failures["coassociativity", "xi2"]
        assert coassociativity.degree == 3
        assert coassociativity.residual == "xi1 ⊗ xi1^2 ⊗ 1"
        assert ("counit-right", "xi2") in failures
        assert ("counit-left", "xi2") not in failures
        assert ("coassociativity", "xi1") not in failures

    def test_mutated_cross_term_stays_coassociative(self):
        p = toggle(derive_presentation(2), "xi2", {"xi1": 1}, {"xi1": 2})
        assert str(p.coproduct_table["xi2"]) == "1 ⊗ xi2 + xi2 ⊗ 1"
        assert not coassociativity_residual(p, p.generator("xi2"))

    def test_mutated_cross_term_is_caught(self):
        """A primitive xi2 passes coassociativity but disagrees with the recomputed coproduct."""
        p = toggle(derive_presentation(2), "xi2", {"xi1": 1}, {"xi1": 2})
        report = verify_hopf(p, samples=0)
        failures = {(f.identity, f.subject): f for f in report.failures()}
        recomputed = failures["coproduct-recomputed", "xi2"]
        assert recomputed.degree == 3
        assert recomputed.residual == "xi1 ⊗ xi1^2"
        assert ("coassociativity", "xi2") not in failures
        assert ("coproduct-recomputed", "xi1") not in failures

    def test_samples_are_products_checked_against_recomputation(self):
        """With the tables intact every sample agrees; with xi2 ⊗ 1 dropped a product containing xi2 does not."""
        p = derive_presentation(3, 16)
        rng = random.Random(3)
        for _ in range(6):
            u = random_element(rng, p.ring) * random_element(rng, p.ring)
            assert p.coproduct(u) == naive_coproduct_of(p, u)
        mutated = toggle(derive_presentation(2), "xi2", {"xi2": 1}, {})
        product = mutated.generator("xi1") * mutated.generator("xi2")
        assert mutated.coproduct(product) != naive_coproduct_of(mutated, product)
        assert naive_coproduct_of(mutated, product) == derive_presentation(2).coproduct(product)

    def test_deterministic(self):
        p = derive_presentation(3)
        first = verify_hopf(p, samples=6, seed=7)
        again = verify_hopf(p, samples=6, seed=7, max_workers=4)
        assert first == again


class TestMilnorOracle:
    """Test cases for the sympy recomputation of the coproduct."""

    @pytest.mark.parametrize("generator_count", [1, 2, 3, 4])
    def test_matches(self, generator_count):
        report = milnor_oracle_compare(generator_count)
        assert report.match
        assert [e.generator for e in report.entries] == [f"xi{n}" for n in range(1, generator_count + 1)]

    def test_skewed_order_disagrees(self):
        """The symmetric xi1 still agrees; xi2 does not."""
        report = milnor_oracle_compare(2, skew=True)
        assert not report.match
        assert [e.match for e in report.entries] == [True, False]
        assert report.entries[1].recomputed == "1 ⊗ xi2 + xi1^2 ⊗ xi1 + xi2 ⊗ 1"

    def test_naive_table_shape(self):
        tables = naive_coproduct(1, 2)
        assert tables == {1: {((1,), (0,)): 1, ((0,), (1,)): 1}}

    def test_given_presentation(self):
        p = toggle(derive_presentation(2), "xi2", {"xi2": 1}, {})
        report = milnor_oracle_compare(2, presentation=p)
        assert [e.match for e in report.entries] == [True, False]

    @pytest.mark.slow
    def test_four_generators_at_truncation_32(self):
        assert milnor_oracle_compare(4, 32).match
        assert verify_hopf(derive_presentation(4, 32), samples=4).passed
