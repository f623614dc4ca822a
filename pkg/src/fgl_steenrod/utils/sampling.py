"""
Seeded random samplers for property suites.

Every sampler takes an explicit ``random.Random`` so that a seed replays the
same sequence of elements, series and ring maps.
"""

import random
from functools import lru_cache
from typing import Optional

from fgl_steenrod.ring_core.data_models.ring_model import Monomial, RingDescriptor
from fgl_steenrod.ring_core.element import RingElement, RingHom
from fgl_steenrod.ring_core.graded import graded_basis
from fgl_steenrod.series.power_series import StrictSeries1
from fgl_steenrod.steenrod.additive_series import AdditiveStrictSeries, depth


@lru_cache(maxsize=64)
def _monomials_up_to(ring: RingDescriptor, d: int) -> tuple[Monomial, ...]:
    return tuple(m for degree in range(d + 1) for m in graded_basis(ring, degree))


def random_homogeneous(rng: random.Random, ring: RingDescriptor, d: int) -> RingElement:
    """Each monomial of degree ``d`` is included with probability 1/2; zero above the truncation."""
    if d < 0 or d > ring.truncation_degree:
        return RingElement.zero(ring)
    return RingElement(ring, [m for m in graded_basis(ring, d) if rng.random() < 0.5])


def random_element(
    rng: random.Random, ring: RingDescriptor, max_terms: int = 4, max_degree: Optional[int] = None
) -> RingElement:
    """Sum of up to ``max_terms`` random monomials of degree at most ``max_degree``."""
    cutoff = ring.truncation_degree if max_degree is None else min(max_degree, ring.truncation_degree)
    pool = _monomials_up_to(ring, cutoff)
    return RingElement(ring, [rng.choice(pool) for _ in range(rng.randint(0, max_terms))])


def random_graded_strict_series(rng: random.Random, ring: RingDescriptor, truncation: int) -> StrictSeries1:
    """``x + sum c_n x^n`` with ``c_n`` homogeneous of degree ``n - 1``."""
    coeffs = {n: random_homogeneous(rng, ring, n - 1) for n in range(2, truncation + 1)}
    coeffs[1] = RingElement.one(ring)
    return StrictSeries1(ring, truncation, coeffs)


def random_additive_point(rng: random.Random, ring: RingDescriptor, truncation: int) -> AdditiveStrictSeries:
    """Graded point of the additive automorphism group: ``f_j`` homogeneous of degree ``2^j - 1``."""
    components = [random_homogeneous(rng, ring, 2**j - 1) for j in range(1, depth(truncation) + 1)]
    return AdditiveStrictSeries.from_components(ring, truncation, components)


def random_ring_map(
    rng: random.Random, source: RingDescriptor, target: RingDescriptor, graded: bool = True
) -> RingHom:
    """Random homomorphism; graded maps send each generator to a random element of its own degree."""
    images = [
        random_homogeneous(rng, target, g.degree) if graded else random_element(rng, target)
        for g in source.generators
    ]
    return RingHom(source, target, images)
