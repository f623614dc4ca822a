"""Pydantic models for Hopf-axiom verification and oracle comparison reports."""

from typing import Literal, Optional

from pydantic import BaseModel, Field

Identity = Literal[
    "grading",
    "coproduct-recomputed",
    "coassociativity",
    "counit-left",
    "counit-right",
    "antipode-left",
    "antipode-right",
    "antipode-involution",
]


class IdentityCheck(BaseModel):
    """One identity evaluated on one subject (a generator or a sampled product)."""

    identity: Identity
    subject: str = Field(description="Generator name, or 'sample <i>' for randomized checks")
    degree: int = Field(ge=0, description="Degree of the subject, or of the lowest failing term")
    passed: bool
    residual: Optional[str] = Field(default=None, description="Canonical text of the nonzero residual")


class HopfReport(BaseModel):
    generator_count: int = Field(ge=0)
    truncation: int = Field(ge=1)
    checks: list[IdentityCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


class OracleEntry(BaseModel):
    generator: str
    derived: str
    recomputed: str
    match: bool


class OracleReport(BaseModel):
    """Term-for-term comparison of the derived coproduct with a naive recomputation."""

    generator_count: int = Field(ge=0)
    truncation: int = Field(ge=1)
    entries: list[OracleEntry] = Field(default_factory=list)

    @property
    def match(self) -> bool:
        return all(e.match for e in self.entries)
