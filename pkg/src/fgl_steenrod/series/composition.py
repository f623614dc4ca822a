"""
Substitution, composition and compositional reversion of truncated series.

Convention: ``compose1(f, g)`` is ``f∘g``, the series ``f(g(x))``.
"""

from collections.abc import Sequence
from typing import Union

from fgl_steenrod.errors import NonStrictSeriesError, SeriesMismatchError
from fgl_steenrod.ring_core.data_models.ring_model import same_ring
from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.series.power_series import Series1, Series2, StrictSeries1, TruncatedSeries


class _PowerCache:
    """Powers ``arg^e`` computed on demand, even powers by squaring."""

    def __init__(self, arg: TruncatedSeries):
        self.powers: dict[int, TruncatedSeries] = {1: arg}

    def get(self, e: int) -> TruncatedSeries:
        if e not in self.powers:
            if e % 2 == 0:
                self.powers[e] = self.get(e // 2).square()
            else:
                self.powers[e] = self.get(e - 1) * self.powers[1]
        return self.powers[e]


def substitute(f: TruncatedSeries, args: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """
    Substitute ``args[i]`` for the ``i``-th variable of ``f``.

    Args:
        f: Series in ``len(args)`` variables.
        args: Reduced series sharing one arity, coefficient ring and truncation with ``f``.

    Returns:
        ``f(args[0], args[1], ...)`` in the variables of the arguments.

    Raises:
        SeriesMismatchError: If arities, rings or truncations do not line up.
    """
    if len(args) != f.arity:
        raise SeriesMismatchError(f"A series in {f.arity} variables needs {f.arity} arguments, got {len(args)}")
    first = args[0]
    for arg in args:
        if arg.arity != first.arity:
            raise SeriesMismatchError("Substituted series must share their variables")
        if arg.truncation != f.truncation:
            raise SeriesMismatchError(f"Truncations differ: {f.truncation} vs {arg.truncation}")
        if not same_ring(arg.coeff_ring, f.coeff_ring):
            raise SeriesMismatchError(f"Coefficient rings differ: {f.coeff_ring} vs {arg.coeff_ring}")
    caches = [_PowerCache(arg) for arg in args]
    result = TruncatedSeries.zero_series(f.coeff_ring, f.truncation, first.arity)
    for exponent, coefficient in f.coeffs.items():
        term = None
        for cache, e in zip(caches, exponent):
            if not e:
                continue
            power = cache.get(e)
            term = power if term is None else term * power
            if not term:
                break
        if term:
            result = result + term.scale(coefficient)
    return result


def compose1(f: Series1, g: Series1) -> Series1:
    """
    The composite ``f∘g``, truncated at the common truncation.

    The result is strict when both inputs are.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import ground_field
        >>> k = ground_field()
        >>> f = Series1(k, 4, {1: 1, 2: 1})
        >>> str(compose1(f, f))
        'x + x^4'
    """
    if f.arity != 1 or g.arity != 1:
        raise SeriesMismatchError("compose1 composes series in one variable")
    composite = substitute(f, [g])
    if isinstance(f, StrictSeries1) and isinstance(g, StrictSeries1):
        return StrictSeries1.from_series(composite)
    return composite


def revert(f: Union[StrictSeries1, Series1]) -> StrictSeries1:
    """
    Compositional inverse of a strict series.

    Solved degree by degree: if ``f∘g = x`` below degree ``n``, the degree ``n``
    coefficient of ``f∘(g + c x^n)`` is that of ``f∘g`` plus ``c``, so ``c`` is read off.

    Raises:
        NonStrictSeriesError: If the linear coefficient of ``f`` is not 1.
    """
    if not isinstance(f, StrictSeries1):
        if f.arity != 1 or not f.coefficient(1).is_one():
            raise NonStrictSeriesError(f"Only strict series can be reverted, got {f}")
        f = StrictSeries1.from_series(f)
    ring = f.coeff_ring
    inverse: dict[int, RingElement] = {1: RingElement.one(ring)}
    for n in range(2, f.truncation + 1):
        candidate = Series1(ring, n, inverse)
        error = substitute(f.truncate_to(n), [candidate]).coefficient(n)
        if error:
            inverse[n] = error
    return StrictSeries1(ring, f.truncation, inverse)


def subst2(F: Series2, u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
    """``F(u, v)``; one-variable arguments give a one-variable series, two-variable ones a ``Series2``."""
    if F.arity != 2:
        raise SeriesMismatchError(f"subst2 expects a series in two variables, got {F.arity}")
    return substitute(F, [u, v])
