"""
Data models for graded polynomial rings over GF(2).

This module contains the Pydantic models describing a coefficient ring:
its named, graded generators and the hard truncation degree above which
every monomial is discarded.
"""

import re
from pathlib import Path
from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from fgl_steenrod.errors import RingMismatchError

Monomial = tuple[tuple[int, int], ...]
"""Sparse exponent map: sorted ``(generator index, exponent)`` pairs, no zero exponents."""


class GeneratorSpec(BaseModel):
    """A named polynomial generator with its internal grading weight."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Short identifier used when printing (e.g. 'xi1', 'a2')")
    degree: int = Field(ge=1, description="Internal grading weight, at least 1")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        """Validate generator name format."""
        if not re.match(r"^[A-Za-z][A-Za-z0-9_']*$", v):
            raise ValueError(f"Invalid generator name: {v!r}")
        return v


class RingDescriptor(BaseModel):
    """Model of the truncated graded polynomial algebra GF(2)[generators] / (degree > N)."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[GeneratorSpec, ...] = Field(
        default=(), description="Ordered generators; the order fixes the canonical monomial ordering"
    )
    truncation_degree: int = Field(ge=1, description="Monomials of weighted degree above this are discarded")

    _degrees: tuple[int, ...] = PrivateAttr(default=())
    _index: dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("generators")
    @classmethod
    def validate_unique_names(cls, v: tuple[GeneratorSpec, ...]) -> tuple[GeneratorSpec, ...]:
        """Generator names must be unique within one ring."""
        names = [g.name for g in v]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"Duplicate generator names: {duplicates}")
        return v

    def model_post_init(self, __context: Any) -> None:
        self._degrees = tuple(g.degree for g in self.generators)
        self._index = {g.name: i for i, g in enumerate(self.generators)}

    @classmethod
    def from_config(cls, path: Union[str, Path]) -> "RingDescriptor":
        """Load a ring from its JSON configuration file.

        Args:
            path: File with fields ``generators`` (list of ``{name, degree}``) and ``truncation_degree``.

        Returns:
            The validated ring descriptor.
        """
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def rank(self) -> int:
        """Number of generators."""
        return len(self.generators)

    @property
    def is_degenerate(self) -> bool:
        """True when some generator cannot appear at all below the cutoff."""
        return any(d > self.truncation_degree for d in self._degrees)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatchError(f"Generator {name!r} not in ring {list(self.names)}") from None

    def monomial_degree(self, monomial: Monomial) -> int:
        degrees = self._degrees
        return sum(degrees[i] * e for i, e in monomial)

    def monomial_sort_key(self, monomial: Monomial) -> tuple:
        """Graded lexicographic key: degree first, then larger exponents of earlier generators first."""
        dense = [0] * len(self._degrees)
        for i, e in monomial:
            dense[i] = -e
        return (self.monomial_degree(monomial), tuple(dense))

    def format_monomial(self, monomial: Monomial) -> str:
        if not monomial:
            return "1"
        names = self.names
        return "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in monomial)

    def with_truncation(self, truncation_degree: int) -> "RingDescriptor":
        return RingDescriptor(generators=self.generators, truncation_degree=truncation_degree)

    def tensor_square(self, left_suffix: str = "_l", right_suffix: str = "_r") -> "RingDescriptor":
        """The polynomial ring on a left and a right copy of the generators.

        Left copies come first, so generator ``i`` of the left factor keeps index ``i`` and generator ``i``
        of the right factor gets index ``rank + i``. The truncation bounds the total degree.
        """
        left = [GeneratorSpec(name=g.name + left_suffix, degree=g.degree) for g in self.generators]
        right = [GeneratorSpec(name=g.name + right_suffix, degree=g.degree) for g in self.generators]
        return RingDescriptor(generators=tuple(left + right), truncation_degree=self.truncation_degree)

    def __str__(self) -> str:
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GF(2)[{gens}] / (deg > {self.truncation_degree})"


def same_ring(left: RingDescriptor, right: RingDescriptor) -> bool:
    return left is right or left == right


def require_same_ring(left: RingDescriptor, right: RingDescriptor, what: str = "operands") -> None:
    if not same_ring(left, right):
        raise RingMismatchError(f"{what} live in different rings: {left} vs {right}")
