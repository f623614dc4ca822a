"""
Run configuration for the command line.

A ``RunConfig`` names one pipeline and everything it needs; it is built from
parsed arguments and validated before any computation starts.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from fgl_steenrod.utils.parallel import max_workers_from_env

LAW_TRUNCATION = 8
BORDISM_TRUNCATION = 8


class Command(str, Enum):
    DERIVE = "derive"
    VERIFY = "verify"
    SOLVE = "solve"
    CHECK = "check"
    TWO_SERIES = "two-series"
    BUILD = "build"
    COACTION = "coaction"
    EV = "ev"
    COMPOSE = "compose"
    COPRODUCT = "coproduct"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


STEENROD_COMMANDS = frozenset({Command.DERIVE, Command.VERIFY})
LAW_COMMANDS = frozenset({Command.SOLVE, Command.CHECK, Command.TWO_SERIES})
BORDISM_COMMANDS = frozenset({Command.BUILD, Command.COACTION, Command.EV, Command.COMPOSE, Command.COPRODUCT})


class RunConfig(BaseModel):
    """One command line invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command
    generators: int = Field(default=3, ge=0, description="k for the Steenrod commands, m for the bordism commands")
    truncation: Optional[int] = Field(default=None, ge=1, description="Series truncation N; per-command default when unset")
    output_format: OutputFormat = Field(default=OutputFormat.JSON)
    seed: int = Field(default=0, description="Seed for the randomized suites")
    output: Optional[Path] = Field(default=None, description="Report file; stdout when unset")
    law: Optional[str] = Field(default=None, description="Bivariate series in x, y, as text or JSON")
    ring_config: Optional[str] = Field(
        default=None, description="Coefficient/target ring: a bundled preset name or a JSON configuration path"
    )
    maps: tuple[str, ...] = Field(default=(), description="Ring-map assignments such as 'a1=t, a2=t^2'")
    samples: int = Field(default=8, ge=0, description="Random products checked against the recomputed coproduct")
    max_workers: int = Field(default_factory=max_workers_from_env, ge=1)

    @field_validator("law")
    @classmethod
    def validate_law(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and not v.strip():
            raise ValueError("Law must not be empty")
        return v

    @model_validator(mode="after")
    def validate_inputs(self) -> "RunConfig":
        """Each command gets exactly the inputs it consumes."""
        if self.command in LAW_COMMANDS and self.law is None:
            raise ValueError(f"'{self.command.value}' needs --law")
        if self.command == Command.EV and len(self.maps) != 1:
            raise ValueError("'ev' needs exactly one --map")
        if self.command == Command.COMPOSE and len(self.maps) != 2:
            raise ValueError("'compose' needs exactly two --map options")
        if self.command in BORDISM_COMMANDS and self.truncation is not None and self.generators + 1 > self.truncation:
            raise ValueError(f"{self.generators} generators need truncation at least {self.generators + 1}")
        return self

    def resolved_truncation(self) -> int:
        """The truncation to run at, filling in the command's default."""
        if self.truncation is not None:
            return self.truncation
        if self.command in STEENROD_COMMANDS:
            return 2**self.generators
        if self.command in BORDISM_COMMANDS:
            return max(BORDISM_TRUNCATION, self.generators + 1)
        return LAW_TRUNCATION
