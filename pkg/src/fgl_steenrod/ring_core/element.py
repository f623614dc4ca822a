"""
Elements of truncated graded polynomial rings over GF(2) and ring homomorphisms between them.

Coefficients are GF(2), so an element is just the set of monomials that occur.
Adding a monomial twice cancels it, and every product is truncated eagerly.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from typing import Union

import numpy as np

from fgl_steenrod.errors import RingMismatchError
from fgl_steenrod.ring_core.data_models.ring_model import Monomial, RingDescriptor, require_same_ring, same_ring

logger = logging.getLogger(__name__)

Scalar = Union[int, "RingElement"]


def multiply_monomials(left: Monomial, right: Monomial) -> Monomial:
    """Merge two sparse exponent maps, adding exponents."""
    if not left:
        return right
    if not right:
        return left
    merged = dict(left)
    for i, e in right:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


def _toggle(bucket: set, item) -> None:
    if item in bucket:
        bucket.remove(item)
    else:
        bucket.add(item)


class RingElement:
    """An element of ``ring``: a set of monomials with GF(2) coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingDescriptor, terms: Iterable[Monomial] = ()):
        cutoff = ring.truncation_degree
        kept: set = set()
        for monomial in terms:
            monomial = tuple(sorted((i, e) for i, e in monomial if e))
            if any(i < 0 or i >= ring.rank for i, _ in monomial):
                raise RingMismatchError(f"Monomial {monomial} uses a generator index outside {ring}")
            if ring.monomial_degree(monomial) <= cutoff:
                _toggle(kept, monomial)
        self.ring = ring
        self.terms = frozenset(kept)

    @classmethod
    def _raw(cls, ring: RingDescriptor, terms: frozenset) -> "RingElement":
        element = cls.__new__(cls)
        element.ring = ring
        element.terms = terms
        return element

    # Constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "RingElement":
        return cls._raw(ring, frozenset())

    @classmethod
    def one(cls, ring: RingDescriptor) -> "RingElement":
        return cls._raw(ring, frozenset({()}))

    @classmethod
    def generator(cls, ring: RingDescriptor, name: str) -> "RingElement":
        return cls(ring, [((ring.index_of(name), 1),)])

    @classmethod
    def monomial(cls, ring: RingDescriptor, exponents: Mapping[str, int]) -> "RingElement":
        """Single monomial from a name -> exponent map, e.g. ``{"a1": 2, "a3": 1}``."""
        return cls(ring, [tuple(sorted((ring.index_of(n), e) for n, e in exponents.items() if e))])

    @classmethod
    def scalar(cls, ring: RingDescriptor, value: int) -> "RingElement":
        return cls.one(ring) if value % 2 else cls.zero(ring)

    # Arithmetic ---------------------------------------------------------

    def _coerce(self, other: Scalar) -> "RingElement":
        if isinstance(other, RingElement):
            if not same_ring(self.ring, other.ring):
                raise RingMismatchError(f"Cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, int):
            return RingElement.scalar(self.ring, other)
        return NotImplemented

    def __add__(self, other: Scalar) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement._raw(self.ring, self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "RingElement":
        return self

    def __mul__(self, other: Scalar) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return RingElement.zero(self.ring)
        if self.terms == {()}:
            return other
        if other.terms == {()}:
            return self
        ring = self.ring
        cutoff = ring.truncation_degree
        degree = ring.monomial_degree
        right = [(m, degree(m)) for m in other.terms]
        product: set = set()
        for m1 in self.terms:
            d1 = degree(m1)
            for m2, d2 in right:
                if d1 + d2 <= cutoff:
                    _toggle(product, multiply_monomials(m1, m2))
        return RingElement._raw(ring, frozenset(product))

    __rmul__ = __mul__

    def square(self) -> "RingElement":
        """Frobenius: the square of a sum is the sum of the squares in characteristic 2."""
        cutoff = self.ring.truncation_degree
        degree = self.ring.monomial_degree
        doubled = (tuple((i, 2 * e) for i, e in m) for m in self.terms if 2 * degree(m) <= cutoff)
        return RingElement._raw(self.ring, frozenset(doubled))

    def frobenius(self, times: int) -> "RingElement":
        """Raise to the power ``2**times`` by repeated squaring."""
        result = self
        for _ in range(times):
            if not result.terms:
                break
            result = result.square()
        return result

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            raise ValueError("Negative powers are not defined in a polynomial ring")
        result = RingElement.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base.square()
        return result

    # Comparison and inspection -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == RingElement.scalar(self.ring, other).terms
        if not isinstance(other, RingElement):
            return NotImplemented
        return same_ring(self.ring, other.ring) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {()}

    @property
    def constant_term(self) -> int:
        """The counit: coefficient of the empty monomial."""
        return 1 if () in self.terms else 0

    def degrees(self) -> list[int]:
        """Sorted distinct degrees of the monomials present."""
        return sorted({self.ring.monomial_degree(m) for m in self.terms})

    def homogeneous_part(self, d: int) -> "RingElement":
        degree = self.ring.monomial_degree
        return RingElement._raw(self.ring, frozenset(m for m in self.terms if degree(m) == d))

    def is_homogeneous(self, d: int) -> bool:
        """Zero counts as homogeneous of every degree."""
        degree = self.ring.monomial_degree
        return all(degree(m) == d for m in self.terms)

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=self.ring.monomial_sort_key)

    def coordinates(self, basis: Sequence[Monomial]) -> np.ndarray:
        """GF(2) coordinate vector of the element against ``basis`` (which must span its terms)."""
        position = {m: i for i, m in enumerate(basis)}
        vector = np.zeros(len(basis), dtype=np.uint8)
        for m in self.terms:
            if m not in position:
                raise ValueError(f"Monomial {self.ring.format_monomial(m)} is not in the given basis")
            vector[position[m]] = 1
        return vector

    @classmethod
    def from_coordinates(cls, ring: RingDescriptor, basis: Sequence[Monomial], vector: np.ndarray) -> "RingElement":
        return cls(ring, [basis[i] for i in np.flatnonzero(vector)])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(self.ring.format_monomial(m) for m in self.sorted_terms())

    def __repr__(self) -> str:
        return f"RingElement({self})"


class RingHom:
    """A ring homomorphism given by the images of the source generators.

    Assignments need not be homogeneous of the generator's degree; such maps are
    permitted but flagged through ``is_graded``.
    """

    __slots__ = ("assignments", "is_graded", "source", "target")

    def __init__(
        self,
        source: RingDescriptor,
        target: RingDescriptor,
        assignments: Union[Mapping[str, RingElement], Sequence[RingElement]],
    ):
        if isinstance(assignments, Mapping):
            unknown = set(assignments) - set(source.names)
            if unknown:
                raise RingMismatchError(f"Assignments for unknown generators {sorted(unknown)}")
            images = [assignments.get(name, RingElement.zero(target)) for name in source.names]
        else:
            images = list(assignments)
            if len(images) != source.rank:
                raise RingMismatchError(f"Expected {source.rank} assignments, got {len(images)}")
        for name, image in zip(source.names, images):
            if not same_ring(image.ring, target):
                raise RingMismatchError(f"Image of {name} does not live in the target ring {target}")
        self.source = source
        self.target = target
        self.assignments = tuple(images)
        self.is_graded = all(
            image.is_homogeneous(gen.degree) for gen, image in zip(source.generators, self.assignments)
        )
        if not self.is_graded:
            logger.debug(f"Non-graded homomorphism {self}")

    @classmethod
    def identity(cls, ring: RingDescriptor) -> "RingHom":
        return cls(ring, ring, [RingElement.generator(ring, n) for n in ring.names])

    @classmethod
    def zero(cls, source: RingDescriptor, target: RingDescriptor) -> "RingHom":
        return cls(source, target, [RingElement.zero(target)] * source.rank)

    def image_of(self, name: str) -> RingElement:
        return self.assignments[self.source.index_of(name)]

    def __call__(self, element: RingElement) -> RingElement:
        return apply_hom(self, element)

    def compose(self, inner: "RingHom") -> "RingHom":
        """The homomorphism ``self ∘ inner``."""
        require_same_ring(inner.target, self.source, "composed homomorphisms")
        return RingHom(inner.source, self.target, [apply_hom(self, image) for image in inner.assignments])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingHom):
            return NotImplemented
        return (
            same_ring(self.source, other.source)
            and same_ring(self.target, other.target)
            and self.assignments == other.assignments
        )

    def __hash__(self) -> int:
        return hash(self.assignments)

    def __str__(self) -> str:
        return ", ".join(f"{name} -> {image}" for name, image in zip(self.source.names, self.assignments))

    def __repr__(self) -> str:
        return f"RingHom({self})"


def element_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def element_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def apply_hom(hom: RingHom, element: RingElement) -> RingElement:
    """Substitute the generator images into every monomial of ``element`` and expand in the target.

    Args:
        hom: The homomorphism.
        element: An element of ``hom.source``.

    Returns:
        The image, truncated in the target ring.

    Raises:
        RingMismatchError: If ``element`` does not live in ``hom.source``.
    """
    require_same_ring(element.ring, hom.source, "element and homomorphism source")
    powers: dict[tuple[int, int], RingElement] = {}
    result = RingElement.zero(hom.target)
    for monomial in element.terms:
        image = RingElement.one(hom.target)
        for i, e in monomial:
            key = (i, e)
            if key not in powers:
                powers[key] = hom.assignments[i] ** e
            image = image * powers[key]
            if not image:
                break
        result = result + image
    return result
