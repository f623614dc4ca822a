"""
Truncated power series with coefficients in a truncated GF(2) polynomial ring.

A series in ``arity`` variables is a map from exponent tuples to nonzero
coefficients, cut off at total degree ``truncation``. Every series is reduced:
the constant term is identically zero.
"""

from collections.abc import Callable, Mapping, Sequence
from typing import Any, Optional, Union

from fgl_steenrod.errors import NonReducedSeriesError, NonStrictSeriesError, SeriesMismatchError
from fgl_steenrod.ring_core.data_models.ring_model import RingDescriptor, same_ring
from fgl_steenrod.ring_core.element import RingElement

Exponent = tuple[int, ...]
Coefficient = Union[RingElement, int]

VARIABLE_NAMES = ("x", "y", "z", "w")


def _as_element(ring: RingDescriptor, value: Coefficient) -> RingElement:
    if isinstance(value, int):
        return RingElement.scalar(ring, value)
    if not same_ring(value.ring, ring):
        raise SeriesMismatchError(f"Coefficient {value} does not live in {ring}")
    return value


class TruncatedSeries:
    """A reduced power series in ``arity`` variables, modulo total degree ``truncation + 1``."""

    __slots__ = ("arity", "coeff_ring", "coeffs", "truncation")

    def __init__(
        self,
        coeff_ring: RingDescriptor,
        truncation: int,
        coeffs: Mapping[Exponent, Coefficient],
        arity: int,
    ):
        if truncation < 1:
            raise ValueError(f"Truncation must be at least 1, got {truncation}")
        kept: dict[Exponent, RingElement] = {}
        for exponent, value in coeffs.items():
            exponent = tuple(exponent)
            if len(exponent) != arity or any(e < 0 for e in exponent):
                raise SeriesMismatchError(f"Exponent {exponent} is not valid in {arity} variables")
            coefficient = _as_element(coeff_ring, value)
            if not coefficient:
                continue
            if sum(exponent) == 0:
                raise NonReducedSeriesError(f"Series must have zero constant term, got {coefficient}")
            if sum(exponent) <= truncation:
                kept[exponent] = coefficient
        self.coeff_ring = coeff_ring
        self.truncation = truncation
        self.arity = arity
        self.coeffs = kept

    @classmethod
    def _raw(cls, coeff_ring: RingDescriptor, truncation: int, coeffs: dict, arity: int) -> "TruncatedSeries":
        series = object.__new__(series_class(arity))
        series.coeff_ring = coeff_ring
        series.truncation = truncation
        series.arity = arity
        series.coeffs = coeffs
        return series

    @classmethod
    def zero_series(cls, coeff_ring: RingDescriptor, truncation: int, arity: int) -> "TruncatedSeries":
        return cls._raw(coeff_ring, truncation, {}, arity)

    @classmethod
    def variable_series(cls, coeff_ring: RingDescriptor, truncation: int, index: int, arity: int) -> "TruncatedSeries":
        """The coordinate series ``x_index`` in ``arity`` variables."""
        exponent = tuple(1 if i == index else 0 for i in range(arity))
        return cls._raw(coeff_ring, truncation, {exponent: RingElement.one(coeff_ring)}, arity)

    # Inspection ------------------------------------------------------------

    def coefficient(self, *exponent: int) -> RingElement:
        return self.coeffs.get(tuple(exponent), RingElement.zero(self.coeff_ring))

    def support(self) -> list[Exponent]:
        return sorted(self.coeffs, key=self._term_key)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def lowest_degree(self) -> Optional[int]:
        return min((sum(e) for e in self.coeffs), default=None)

    def homogeneous_part(self, d: int) -> "TruncatedSeries":
        """Terms of total degree exactly ``d`` (in the series variables)."""
        kept = {e: c for e, c in self.coeffs.items() if sum(e) == d}
        return TruncatedSeries._raw(self.coeff_ring, self.truncation, kept, self.arity)

    def truncate_to(self, truncation: int) -> "TruncatedSeries":
        """Forget every term above ``truncation`` and lower the cutoff."""
        if truncation > self.truncation:
            raise SeriesMismatchError(f"Cannot raise truncation from {self.truncation} to {truncation}")
        kept = {e: c for e, c in self.coeffs.items() if sum(e) <= truncation}
        return TruncatedSeries._raw(self.coeff_ring, truncation, kept, self.arity)

    def map_coefficients(
        self, fn: Callable[[RingElement], RingElement], target: Optional[RingDescriptor] = None
    ) -> "TruncatedSeries":
        """Apply ``fn`` to every coefficient; ``target`` is the ring of the images (default: unchanged)."""
        ring = target if target is not None else self.coeff_ring
        kept = {}
        for e, c in self.coeffs.items():
            image = fn(c)
            if not same_ring(image.ring, ring):
                raise SeriesMismatchError(f"Mapped coefficient {image} does not live in {ring}")
            if image:
                kept[e] = image
        return TruncatedSeries._raw(ring, self.truncation, kept, self.arity)

    # Arithmetic --------------------------------------------------------------

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise SeriesMismatchError(f"Cannot combine a series with {type(other).__name__}")
        if self.arity != other.arity:
            raise SeriesMismatchError(f"Series in {self.arity} and {other.arity} variables cannot be combined")
        if self.truncation != other.truncation:
            raise SeriesMismatchError(f"Truncations differ: {self.truncation} vs {other.truncation}")
        if not same_ring(self.coeff_ring, other.coeff_ring):
            raise SeriesMismatchError(f"Coefficient rings differ: {self.coeff_ring} vs {other.coeff_ring}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        total = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = total.pop(e, None)
            s = c if s is None else s + c
            if s:
                total[e] = s
        return TruncatedSeries._raw(self.coeff_ring, self.truncation, total, self.arity)

    __sub__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return self

    def __mul__(self, other: Union["TruncatedSeries", RingElement, int]) -> "TruncatedSeries":
        if isinstance(other, (RingElement, int)):
            return self.scale(other)
        self._check_compatible(other)
        cutoff = self.truncation
        product: dict[Exponent, RingElement] = {}
        right = [(e, sum(e), c) for e, c in other.coeffs.items()]
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, d2, c2 in right:
                if d1 + d2 > cutoff:
                    continue
                term = c1 * c2
                if not term:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                s = product.pop(key, None)
                s = term if s is None else s + term
                if s:
                    product[key] = s
        return TruncatedSeries._raw(self.coeff_ring, cutoff, product, self.arity)

    def __rmul__(self, other: Union[RingElement, int]) -> "TruncatedSeries":
        return self.scale(other)

    def scale(self, factor: Coefficient) -> "TruncatedSeries":
        """Multiply every coefficient by a ring element."""
        factor = _as_element(self.coeff_ring, factor)
        kept = {}
        for e, c in self.coeffs.items():
            image = c * factor
            if image:
                kept[e] = image
        return TruncatedSeries._raw(self.coeff_ring, self.truncation, kept, self.arity)

    def square(self) -> "TruncatedSeries":
        """Frobenius: squared coefficients at doubled exponents."""
        kept = {}
        for e, c in self.coeffs.items():
            if 2 * sum(e) > self.truncation:
                continue
            image = c.square()
            if image:
                kept[tuple(2 * a for a in e)] = image
        return TruncatedSeries._raw(self.coeff_ring, self.truncation, kept, self.arity)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 1:
            raise ValueError("Only positive powers of a reduced series are reduced")
        result: Optional[TruncatedSeries] = None
        base = self
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base.square()
        return result

    # Comparison and printing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.truncation == other.truncation
            and same_ring(self.coeff_ring, other.coeff_ring)
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.truncation, frozenset(self.coeffs.items())))

    @staticmethod
    def _term_key(exponent: Exponent) -> tuple:
        return (sum(exponent), tuple(-e for e in exponent))

    def _format_exponent(self, exponent: Exponent) -> str:
        names = VARIABLE_NAMES[: self.arity]
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exponent) if e)

    def format_term(self, exponent: Exponent) -> str:
        coefficient = self.coeffs[exponent]
        variables = self._format_exponent(exponent)
        if coefficient.is_one():
            return variables
        if len(coefficient.terms) == 1:
            return f"{coefficient}*{variables}"
        return f"({coefficient})*{variables}"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(self.format_term(e) for e in self.support())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def to_json(self) -> list[dict[str, Any]]:
        """JSON form: one ``{"exponent", "coefficient"}`` entry per term, in canonical order."""
        return [
            {"exponent": e[0] if self.arity == 1 else list(e), "coefficient": str(self.coeffs[e])}
            for e in self.support()
        ]


class Series1(TruncatedSeries):
    """A reduced series ``f(x)`` modulo ``x^(truncation + 1)``; coefficients are indexed by exponent."""

    __slots__ = ()

    def __init__(self, coeff_ring: RingDescriptor, truncation: int, coeffs: Mapping[int, Coefficient]):
        super().__init__(coeff_ring, truncation, {(n,): c for n, c in coeffs.items()}, arity=1)

    @classmethod
    def zero(cls, coeff_ring: RingDescriptor, truncation: int) -> "Series1":
        return TruncatedSeries.zero_series(coeff_ring, truncation, 1)

    @classmethod
    def identity(cls, coeff_ring: RingDescriptor, truncation: int) -> "StrictSeries1":
        return StrictSeries1(coeff_ring, truncation, {1: 1})

    def coefficient(self, n: int) -> RingElement:
        return self.coeffs.get((n,), RingElement.zero(self.coeff_ring))

    def exponents(self) -> list[int]:
        return [e[0] for e in self.support()]

    @property
    def is_strict(self) -> bool:
        return self.coefficient(1).is_one()

    def as_strict(self) -> "StrictSeries1":
        return StrictSeries1.from_series(self)


class StrictSeries1(Series1):
    """A series ``x + f_2 x^2 + ...`` whose linear coefficient is exactly 1."""

    __slots__ = ()

    def __init__(self, coeff_ring: RingDescriptor, truncation: int, coeffs: Mapping[int, Coefficient]):
        super().__init__(coeff_ring, truncation, coeffs)
        if not self.coefficient(1).is_one():
            raise NonStrictSeriesError(f"Linear coefficient must be 1, got {self.coefficient(1)}")

    @classmethod
    def from_series(cls, series: TruncatedSeries) -> "StrictSeries1":
        if series.arity != 1:
            raise SeriesMismatchError(f"Expected a series in one variable, got {series.arity}")
        if not series.coefficient(1).is_one():
            raise NonStrictSeriesError(f"Linear coefficient must be 1, got {series.coefficient(1)}")
        strict = object.__new__(cls)
        strict.coeff_ring = series.coeff_ring
        strict.truncation = series.truncation
        strict.arity = 1
        strict.coeffs = dict(series.coeffs)
        return strict


class Series2(TruncatedSeries):
    """A reduced series ``F(x, y)`` modulo total degree ``truncation + 1``."""

    __slots__ = ()

    def __init__(self, coeff_ring: RingDescriptor, truncation: int, coeffs: Mapping[tuple[int, int], Coefficient]):
        super().__init__(coeff_ring, truncation, coeffs, arity=2)

    @classmethod
    def zero(cls, coeff_ring: RingDescriptor, truncation: int) -> "Series2":
        return TruncatedSeries.zero_series(coeff_ring, truncation, 2)

    @classmethod
    def x(cls, coeff_ring: RingDescriptor, truncation: int) -> "Series2":
        return TruncatedSeries.variable_series(coeff_ring, truncation, 0, 2)

    @classmethod
    def y(cls, coeff_ring: RingDescriptor, truncation: int) -> "Series2":
        return TruncatedSeries.variable_series(coeff_ring, truncation, 1, 2)

    def swap(self) -> "Series2":
        """``F(y, x)``."""
        return TruncatedSeries._raw(
            self.coeff_ring, self.truncation, {(j, i): c for (i, j), c in self.coeffs.items()}, 2
        )


def series_class(arity: int) -> type:
    if arity == 1:
        return Series1
    if arity == 2:
        return Series2
    return TruncatedSeries


def variables(coeff_ring: RingDescriptor, truncation: int, arity: int) -> list[TruncatedSeries]:
    """The coordinate series ``x, y, ...`` in ``arity`` variables."""
    return [TruncatedSeries.variable_series(coeff_ring, truncation, i, arity) for i in range(arity)]


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b
