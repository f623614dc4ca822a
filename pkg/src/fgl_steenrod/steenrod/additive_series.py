"""
Strict automorphisms of the additive formal group law.

A strict series is additive exactly when it is supported on the exponents
``2^i``. Writing ``f = sum f_j x^(2^j)`` with ``f_0 = 1``, composition and
inversion have closed forms:

    (f∘g)_n = sum_{i+j=n} f_j g_i^(2^j)
    (f^-1)_n = sum_{j=1..n} f_j (f^-1)_{n-j}^(2^j)
"""

from collections.abc import Mapping, Sequence
from typing import Union

from fgl_steenrod.errors import NotAdditiveError, SeriesMismatchError
from fgl_steenrod.fgl.formal_group_law import FormalGroupLaw, is_endomorphism
from fgl_steenrod.ring_core.data_models.ring_model import RingDescriptor
from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.series.power_series import StrictSeries1


def depth(truncation: int) -> int:
    """Largest ``n`` with ``2^n <= truncation``."""
    return truncation.bit_length() - 1


class AdditiveStrictSeries:
    """A point of the strict automorphism group of ``x + y``: ``x + f_1 x^2 + f_2 x^4 + ...``."""

    __slots__ = ("underlying",)

    def __init__(self, underlying: StrictSeries1):
        if not isinstance(underlying, StrictSeries1):
            underlying = StrictSeries1.from_series(underlying)
        check = is_endomorphism(underlying, FormalGroupLaw.additive(underlying.coeff_ring, underlying.truncation))
        if not check:
            raise NotAdditiveError(check.degree, check.residual)
        self.underlying = underlying

    @classmethod
    def _trusted(cls, underlying: StrictSeries1) -> "AdditiveStrictSeries":
        point = cls.__new__(cls)
        point.underlying = underlying
        return point

    @classmethod
    def identity(cls, coeff_ring: RingDescriptor, truncation: int) -> "AdditiveStrictSeries":
        return cls._trusted(StrictSeries1.identity(coeff_ring, truncation))

    @classmethod
    def from_components(
        cls, coeff_ring: RingDescriptor, truncation: int, components: Sequence[RingElement]
    ) -> "AdditiveStrictSeries":
        """Build from ``[f_1, f_2, ...]`` (``f_0 = 1`` implied); components past the truncation are dropped."""
        coeffs: dict[int, RingElement] = {1: RingElement.one(coeff_ring)}
        for j, value in enumerate(components, start=1):
            if 2**j <= truncation and value:
                coeffs[2**j] = value
        return cls._trusted(StrictSeries1(coeff_ring, truncation, coeffs))

    @property
    def coeff_ring(self) -> RingDescriptor:
        return self.underlying.coeff_ring

    @property
    def truncation(self) -> int:
        return self.underlying.truncation

    @property
    def depth(self) -> int:
        return depth(self.truncation)

    def component(self, j: int) -> RingElement:
        """The coefficient ``f_j`` of ``x^(2^j)``."""
        return self.underlying.coefficient(2**j)

    def components(self) -> list[RingElement]:
        """``[f_0, f_1, ..., f_depth]`` with ``f_0 = 1``."""
        return [self.component(j) for j in range(self.depth + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveStrictSeries):
            return NotImplemented
        return self.underlying == other.underlying

    def __hash__(self) -> int:
        return hash(self.underlying)

    def __str__(self) -> str:
        return str(self.underlying)

    def __repr__(self) -> str:
        return f"AdditiveStrictSeries({self})"


def make_additive(
    coeffs: Union[Sequence[RingElement], Mapping[int, RingElement]],
    coeff_ring: RingDescriptor,
    truncation: int,
) -> AdditiveStrictSeries:
    """
    Validated additive strict series.

    Args:
        coeffs: Either ``[f_1, f_2, ...]`` for the exponents ``2, 4, ...``, or an
            exponent -> coefficient map (the linear coefficient is always 1).
        coeff_ring: Coefficient ring.
        truncation: Series truncation.

    Raises:
        NotAdditiveError: If the series is not an endomorphism of ``x + y``, with the
            lowest failing degree and its residual.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import ground_field
        >>> k = ground_field()
        >>> str(make_additive([1, 0], k, 4))
        'x + x^2'
    """
    if isinstance(coeffs, Mapping):
        table = {n: c for n, c in coeffs.items() if n != 1}
    else:
        table = {2**j: c for j, c in enumerate(coeffs, start=1) if 2**j <= truncation}
    table[1] = 1
    return AdditiveStrictSeries(StrictSeries1(coeff_ring, truncation, table))


def _check_pair(f: AdditiveStrictSeries, g: AdditiveStrictSeries) -> None:
    if f.coeff_ring != g.coeff_ring or f.truncation != g.truncation:
        raise SeriesMismatchError("Additive series over different rings or truncations cannot be composed")


def compose_aut(f: AdditiveStrictSeries, g: AdditiveStrictSeries) -> AdditiveStrictSeries:
    """``f∘g`` by the closed form ``h_n = sum_{i+j=n} f_j g_i^(2^j)``."""
    _check_pair(f, g)
    fs, gs = f.components(), g.components()
    h = [
        sum((fs[j] * gs[n - j].frobenius(j) for j in range(n + 1)), RingElement.zero(f.coeff_ring))
        for n in range(1, f.depth + 1)
    ]
    return AdditiveStrictSeries.from_components(f.coeff_ring, f.truncation, h)


def invert_aut(f: AdditiveStrictSeries) -> AdditiveStrictSeries:
    """The inverse, from ``g_n = sum_{j=1..n} f_j g_{n-j}^(2^j)`` with ``g_0 = 1``."""
    fs = f.components()
    gs = [RingElement.one(f.coeff_ring)]
    for n in range(1, f.depth + 1):
        gs.append(sum((fs[j] * gs[n - j].frobenius(j) for j in range(1, n + 1)), RingElement.zero(f.coeff_ring)))
    return AdditiveStrictSeries.from_components(f.coeff_ring, f.truncation, gs[1:])
