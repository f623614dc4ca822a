"""
Tensor products of truncated GF(2) polynomial rings.

A tensor is a set of tuples of monomials, one per factor. Duplicate tuples cancel.
Each factor respects its own ring truncation; an optional total-degree bound
makes coproducts well defined on truncated rings.
"""

from collections.abc import Callable, Iterable, Sequence
from typing import Optional, Union

from fgl_steenrod.errors import RingMismatchError
from fgl_steenrod.ring_core.data_models.ring_model import Monomial, RingDescriptor, same_ring
from fgl_steenrod.ring_core.element import RingElement, RingHom, _toggle, apply_hom, multiply_monomials

TensorTerm = tuple[Monomial, ...]


class TensorElement:
    """An element of ``factors[0] ⊗ factors[1] ⊗ ...`` (binary by default)."""

    __slots__ = ("factors", "terms", "total_truncation")

    def __init__(
        self,
        factors: Sequence[RingDescriptor],
        terms: Iterable[TensorTerm] = (),
        total_truncation: Optional[int] = None,
    ):
        factors = tuple(factors)
        if len(factors) < 2:
            raise ValueError("A tensor needs at least two factors")
        kept: set = set()
        for term in terms:
            if len(term) != len(factors):
                raise RingMismatchError(f"Term {term} does not have {len(factors)} factors")
            if _admissible(factors, term, total_truncation):
                _toggle(kept, tuple(tuple(sorted(m)) for m in term))
        self.factors = factors
        self.terms = frozenset(kept)
        self.total_truncation = total_truncation

    @classmethod
    def _raw(cls, factors: tuple, terms: frozenset, total_truncation: Optional[int]) -> "TensorElement":
        tensor = cls.__new__(cls)
        tensor.factors = factors
        tensor.terms = terms
        tensor.total_truncation = total_truncation
        return tensor

    @classmethod
    def zero(cls, factors: Sequence[RingDescriptor], total_truncation: Optional[int] = None) -> "TensorElement":
        return cls._raw(tuple(factors), frozenset(), total_truncation)

    @classmethod
    def one(cls, factors: Sequence[RingDescriptor], total_truncation: Optional[int] = None) -> "TensorElement":
        return cls._raw(tuple(factors), frozenset({((),) * len(factors)}), total_truncation)

    @classmethod
    def pure(cls, *elements: RingElement, total_truncation: Optional[int] = None) -> "TensorElement":
        """The elementary tensor ``elements[0] ⊗ elements[1] ⊗ ...`` expanded over monomials."""
        factors = tuple(e.ring for e in elements)
        terms: Iterable[TensorTerm] = [()]
        for element in elements:
            terms = [t + (m,) for t in terms for m in element.terms]
        return cls(factors, terms, total_truncation)

    @classmethod
    def from_tensor_square(
        cls, element: RingElement, ring: RingDescriptor, total_truncation: Optional[int] = None
    ) -> "TensorElement":
        """Split an element of ``ring.tensor_square()`` into a tensor ``ring ⊗ ring``.

        Generator ``i < rank`` goes to the left factor, generator ``rank + i`` to the right one.
        """
        rank = ring.rank
        if element.ring.rank != 2 * rank:
            raise RingMismatchError(f"{element.ring} is not the tensor square of {ring}")
        terms = []
        for monomial in element.terms:
            left = tuple((i, e) for i, e in monomial if i < rank)
            right = tuple((i - rank, e) for i, e in monomial if i >= rank)
            terms.append((left, right))
        return cls((ring, ring), terms, total_truncation)

    def to_tensor_square(self, square: Optional[RingDescriptor] = None) -> RingElement:
        """Inverse of ``from_tensor_square`` for a binary tensor over ``ring ⊗ ring``."""
        if self.arity != 2 or not same_ring(self.factors[0], self.factors[1]):
            raise RingMismatchError("Only tensors over ring ⊗ ring live in the tensor square")
        ring = self.factors[0]
        square = square if square is not None else ring.tensor_square()
        rank = ring.rank
        return RingElement(square, [left + tuple((i + rank, e) for i, e in right) for left, right in self.terms])

    # Shape ---------------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def left_ring(self) -> RingDescriptor:
        return self.factors[0]

    @property
    def right_ring(self) -> RingDescriptor:
        return self.factors[-1]

    def _check_compatible(self, other: "TensorElement") -> None:
        if self.arity != other.arity or not all(same_ring(a, b) for a, b in zip(self.factors, other.factors)):
            raise RingMismatchError("Tensors over different factor rings cannot be combined")

    # Arithmetic ------------------------------------------------------------

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_compatible(other)
        return TensorElement._raw(self.factors, self.terms ^ other.terms, self._bound(other))

    __sub__ = __add__

    def _bound(self, other: "TensorElement") -> Optional[int]:
        bounds = [b for b in (self.total_truncation, other.total_truncation) if b is not None]
        return min(bounds) if bounds else None

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_compatible(other)
        bound = self._bound(other)
        factors = self.factors
        product: set = set()
        for t1 in self.terms:
            for t2 in other.terms:
                term = tuple(multiply_monomials(a, b) for a, b in zip(t1, t2))
                if _admissible(factors, term, bound):
                    _toggle(product, term)
        return TensorElement._raw(factors, frozenset(product), bound)

    def square(self) -> "TensorElement":
        """Frobenius on tensors: cross terms carry a factor 2."""
        doubled = (tuple(tuple((i, 2 * e) for i, e in m) for m in term) for term in self.terms)
        kept = frozenset(t for t in doubled if _admissible(self.factors, t, self.total_truncation))
        return TensorElement._raw(self.factors, kept, self.total_truncation)

    def __pow__(self, exponent: int) -> "TensorElement":
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = TensorElement.one(self.factors, self.total_truncation)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base.square()
        return result

    def expand_factor(self, index: int, image: Callable[[Monomial], "TensorElement"]) -> "TensorElement":
        """Replace factor ``index`` by the tensor ``image(monomial)``, raising the arity.

        With ``image`` the coproduct, ``expand_factor(0, ...)`` is ``(Δ ⊗ id)`` and
        ``expand_factor(arity - 1, ...)`` is ``(id ⊗ Δ)``.
        """
        factors: Optional[tuple] = None
        result: set = set()
        for term in self.terms:
            replacement = image(term[index])
            if factors is None:
                factors = self.factors[:index] + replacement.factors + self.factors[index + 1 :]
            for inner in replacement.terms:
                new_term = term[:index] + inner + term[index + 1 :]
                if _admissible(factors, new_term, self.total_truncation):
                    _toggle(result, new_term)
        if factors is None:
            unit_image = image(())
            factors = self.factors[:index] + unit_image.factors + self.factors[index + 1 :]
        return TensorElement._raw(factors, frozenset(result), self.total_truncation)

    def apply(self, homs: Sequence[Optional[RingHom]]) -> "TensorElement":
        """Apply one homomorphism per factor (``None`` keeps the factor)."""
        if len(homs) != self.arity:
            raise RingMismatchError(f"Expected {self.arity} homomorphisms, got {len(homs)}")
        factors = tuple(h.target if h is not None else f for h, f in zip(homs, self.factors))
        result = TensorElement.zero(factors, self.total_truncation)
        for term in self.terms:
            images = [
                apply_hom(h, RingElement._raw(f, frozenset({m}))) if h is not None else RingElement._raw(f, frozenset({m}))
                for h, f, m in zip(homs, self.factors, term)
            ]
            result = result + TensorElement.pure(*images, total_truncation=self.total_truncation)
        return result

    def multiply_out(
        self,
        maps: Optional[Sequence[Optional[Callable[[RingElement], RingElement]]]] = None,
        target: Optional[RingDescriptor] = None,
    ) -> RingElement:
        """Multiplication ``m(f_0 ⊗ f_1 ⊗ ...)`` into a common ring.

        Args:
            maps: Optional per-factor maps applied before multiplying (``None`` entries keep the factor).
                After mapping, all factors must share one ring.
            target: Ring of the result, needed only to type the zero tensor; defaults to the first factor.

        Returns:
            The product, summed over all terms.
        """
        maps = list(maps) if maps is not None else [None] * self.arity
        total = RingElement.zero(target if target is not None else self.factors[0])
        first = True
        for term in self.terms:
            product: Optional[RingElement] = None
            for f, m, fn in zip(self.factors, term, maps):
                piece = RingElement._raw(f, frozenset({m}))
                if fn is not None:
                    piece = fn(piece)
                product = piece if product is None else product * piece
            total = product if first else total + product
            first = False
        return total

    def counit_factor(self, index: int) -> Union["TensorElement", RingElement]:
        """Apply the augmentation (kill every positive-degree monomial) to factor ``index``.

        Returns a tensor of one lower arity, or a ring element when one factor remains.
        """
        kept = [term[:index] + term[index + 1 :] for term in self.terms if not term[index]]
        factors = self.factors[:index] + self.factors[index + 1 :]
        if len(factors) == 1:
            return RingElement(factors[0], [t[0] for t in kept])
        return TensorElement(factors, kept, self.total_truncation)

    # Comparison and printing ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.arity == other.arity
            and all(same_ring(a, b) for a, b in zip(self.factors, other.factors))
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self, term: TensorTerm) -> int:
        return sum(f.monomial_degree(m) for f, m in zip(self.factors, term))

    def lowest_degree(self) -> Optional[int]:
        return min((self.total_degree(t) for t in self.terms), default=None)

    def is_homogeneous(self, d: int) -> bool:
        return all(self.total_degree(t) == d for t in self.terms)

    def sort_key(self, term: TensorTerm) -> tuple:
        return (self.total_degree(term), *(f.monomial_sort_key(m) for f, m in zip(self.factors, term)))

    def sorted_terms(self) -> list[TensorTerm]:
        return sorted(self.terms, key=self.sort_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            " ⊗ ".join(f.format_monomial(m) for f, m in zip(self.factors, term)) for term in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"TensorElement({self})"


def _admissible(factors: Sequence[RingDescriptor], term: TensorTerm, total_truncation: Optional[int]) -> bool:
    total = 0
    for ring, monomial in zip(factors, term):
        d = ring.monomial_degree(monomial)
        if d > ring.truncation_degree:
            return False
        total += d
    return total_truncation is None or total <= total_truncation


def tensor_add(a: TensorElement, b: TensorElement) -> TensorElement:
    return a + b


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    return a * b
