"""
The dual Steenrod algebra as the ring corepresenting strict additive series.

The generic point ``x + xi1 x^2 + xi2 x^4 + ...`` over GF(2)[xi1, ..., xik] is
composed with a second copy of itself over the tensor square; the coefficient
of ``x^(2^n)`` of the composite is the coproduct of ``xi_n``. The outer
(post-composed) series carries the left tensor factor. Inverting the generic
point gives the antipode.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from fgl_steenrod.errors import TruncationTooSmallError
from fgl_steenrod.ring_core.data_models.ring_model import RingDescriptor
from fgl_steenrod.ring_core.element import RingElement, RingHom
from fgl_steenrod.ring_core.ring_factory import dual_steenrod_ring
from fgl_steenrod.ring_core.tensor import TensorElement
from fgl_steenrod.series.composition import compose1
from fgl_steenrod.steenrod.additive_series import AdditiveStrictSeries, invert_aut

logger = logging.getLogger(__name__)

COPRODUCT_CONVENTION = "outer-left"


def generator_name(n: int) -> str:
    return f"xi{n}"


def default_truncation(generator_count: int) -> int:
    """Smallest truncation that sees ``xi_k``: ``2^k``."""
    return 2**generator_count


@dataclass(frozen=True)
class DualSteenrodPresentation:
    """Coproduct and antipode tables on the generators ``xi1 .. xik``; both extend multiplicatively."""

    ring: RingDescriptor
    coproduct_table: dict[str, TensorElement] = field(default_factory=dict, hash=False)
    antipode_table: dict[str, RingElement] = field(default_factory=dict, hash=False)
    convention: str = COPRODUCT_CONVENTION

    @property
    def truncation(self) -> int:
        return self.ring.truncation_degree

    @property
    def generator_count(self) -> int:
        return self.ring.rank

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names

    @cached_property
    def coproduct_hom(self) -> RingHom:
        """The coproduct as a ring map into the tensor square."""
        square = self.ring.tensor_square()
        return RingHom(
            self.ring, square, [self.coproduct_table[name].to_tensor_square(square) for name in self.names]
        )

    def coproduct(self, element: RingElement) -> TensorElement:
        """``Δ(element)``, extended multiplicatively from the table; total degree cut at the truncation."""
        image = self.coproduct_hom(element)
        return TensorElement.from_tensor_square(image, self.ring, total_truncation=self.truncation)

    @cached_property
    def antipode_hom(self) -> RingHom:
        return RingHom(self.ring, self.ring, [self.antipode_table[name] for name in self.names])

    def antipode(self, element: RingElement) -> RingElement:
        return self.antipode_hom(element)

    @staticmethod
    def counit(element: RingElement) -> int:
        """Augmentation: the constant term."""
        return element.constant_term

    def generator(self, name: str) -> RingElement:
        return RingElement.generator(self.ring, name)

    def with_antipode(self, antipode_table: dict[str, RingElement]) -> "DualSteenrodPresentation":
        return DualSteenrodPresentation(self.ring, dict(self.coproduct_table), dict(antipode_table), self.convention)

    def with_coproduct(self, name: str, value: TensorElement) -> "DualSteenrodPresentation":
        """A copy with one coproduct entry replaced."""
        table = dict(self.coproduct_table)
        table[name] = value
        return DualSteenrodPresentation(self.ring, table, dict(self.antipode_table), self.convention)


def _presentation_ring(generator_count: int, truncation: Optional[int]) -> RingDescriptor:
    if generator_count < 0:
        raise ValueError(f"Generator count must be non-negative, got {generator_count}")
    N = truncation if truncation is not None else default_truncation(generator_count)
    if default_truncation(generator_count) > N:
        raise TruncationTooSmallError(
            f"Truncation {N} cannot see xi{generator_count}; need at least {default_truncation(generator_count)}"
        )
    return dual_steenrod_ring(generator_count, N)


def generic_point(ring: RingDescriptor, truncation: int, suffix: str = "") -> AdditiveStrictSeries:
    """``x + sum xi_j x^(2^j)``, the generators named ``xi_j + suffix`` in ``ring``."""
    count = sum(1 for name in ring.names if name.endswith(suffix)) if suffix else ring.rank
    components = [RingElement.generator(ring, generator_name(j) + suffix) for j in range(1, count + 1)]
    return AdditiveStrictSeries.from_components(ring, truncation, components)


def derive_coproduct(generator_count: int, truncation: Optional[int] = None) -> DualSteenrodPresentation:
    """
    Coproduct table from composing two generic points.

    Args:
        generator_count: Number ``k`` of generators.
        truncation: Series truncation; defaults to ``2^k``.

    Returns:
        A presentation whose antipode table is still empty.

    Raises:
        TruncationTooSmallError: If ``truncation < 2^k``.

    Examples:
        >>> str(derive_coproduct(2).coproduct_table["xi2"])
        '1 ⊗ xi2 + xi1 ⊗ xi1^2 + xi2 ⊗ 1'
    """
    ring = _presentation_ring(generator_count, truncation)
    N = ring.truncation_degree
    square = ring.tensor_square()
    outer = generic_point(square, N, "_l").underlying
    inner = generic_point(square, N, "_r").underlying
    composite = compose1(outer, inner)
    table = {
        generator_name(n): TensorElement.from_tensor_square(composite.coefficient(2**n), ring, total_truncation=N)
        for n in range(1, generator_count + 1)
    }
    logger.info(f"Derived coproduct for {generator_count} generators at truncation {N}")
    return DualSteenrodPresentation(ring, table)


def derive_antipode(generator_count: int, truncation: Optional[int] = None) -> dict[str, RingElement]:
    """
    Antipode table: the coefficients of the inverse of the generic point.

    Examples:
        >>> str(derive_antipode(2)["xi2"])
        'xi1^3 + xi2'
    """
    ring = _presentation_ring(generator_count, truncation)
    inverse = invert_aut(generic_point(ring, ring.truncation_degree))
    return {generator_name(n): inverse.component(n) for n in range(1, generator_count + 1)}


def derive_presentation(generator_count: int, truncation: Optional[int] = None) -> DualSteenrodPresentation:
    """Both tables."""
    presentation = derive_coproduct(generator_count, truncation)
    return presentation.with_antipode(derive_antipode(generator_count, truncation))
