"""
Report documents written by the command line.

JSON (``model_dump_json(indent=2)``) is the stable surface and carries a
``schema_version``; the text format is a set of pandas tables for reading.
"""

from typing import Any, Literal, Optional

import pandas as pd
from pydantic import BaseModel, Field

from fgl_steenrod import __version__
from fgl_steenrod.bordism.bordism_model import EV_CONVENTION
from fgl_steenrod.ring_core.data_models.ring_model import GeneratorSpec
from fgl_steenrod.steenrod.data_models.verification_model import IdentityCheck, OracleReport
from fgl_steenrod.steenrod.dual_steenrod import COPRODUCT_CONVENTION

SCHEMA_VERSION = 1
TOOL_NAME = "fgl-steenrod"

Status = Literal["ok", "failed"]


class Report(BaseModel):
    schema_version: int = SCHEMA_VERSION
    tool: str = TOOL_NAME
    version: str = __version__
    command: str
    status: Status = "ok"


class SteenrodReport(Report):
    """Derived dual Steenrod tables and their verification."""

    generators: list[GeneratorSpec]
    truncation: int
    coproduct: dict[str, str]
    antipode: dict[str, str]
    verified: bool
    convention: str = COPRODUCT_CONVENTION
    checks: Optional[list[IdentityCheck]] = Field(default=None, description="Every identity; 'verify' only")
    oracle: Optional[OracleReport] = Field(default=None, description="Naive recomputation; 'verify' only")


class LawReport(Report):
    """Outcome of a formal group law command."""

    law: str
    truncation: int
    degree: Optional[int] = Field(default=None, description="Degree of the first failure")
    axiom: Optional[str] = None
    residual: Optional[str] = Field(default=None, description="2-series residual for 'solve', axiom residual for 'check'")
    law_residual: Optional[str] = Field(default=None, description="Residual of the partially transported law")
    series: Optional[str] = Field(default=None, description="Isomorphism for 'solve', n-series for 'two-series'")
    vanishes: Optional[bool] = None


class BordismReport(Report):
    """Common fields of the bordism model commands."""

    generators: list[GeneratorSpec]
    truncation: int
    convention: str = EV_CONVENTION
    law: str


class BuildReport(BordismReport):
    mishchenko: str
    two_series: str
    additive_isomorphism: str


class CoactionReport(BordismReport):
    coaction: str


class CoproductReport(BordismReport):
    coproduct: dict[str, str]
    coassociative: bool


class EvaluationReport(BordismReport):
    target: list[GeneratorSpec]
    map: str
    series: str
    read_from_coaction: str
    is_additive_automorphism: bool


class CompositionReport(BordismReport):
    """``ev(first) ∘ ev(second)`` along two paths, compared up to the visible truncation."""

    target: list[GeneratorSpec]
    first: str
    second: str
    composite_map: str
    composite_series: str
    composed_series: str
    visible_truncation: int
    agree: bool


def to_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _as_text(value: Any) -> str:
    if isinstance(value, BaseModel):
        return value.model_dump_json()
    return str(value)


def to_text(report: Report) -> str:
    """Scalars in one two-column table, mappings and lists as tables of their own."""
    data = report.model_dump(exclude_none=True)
    scalars = {k: v for k, v in data.items() if not isinstance(v, (dict, list))}
    sections = [pd.DataFrame({"value": [_as_text(v) for v in scalars.values()]}, index=list(scalars)).to_string()]
    for key, value in data.items():
        if isinstance(value, dict) and all(isinstance(v, str) for v in value.values()):
            frame = pd.DataFrame({key: list(value.values())}, index=list(value))
        elif isinstance(value, dict) and "entries" in value:
            frame = pd.DataFrame(value["entries"])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            frame = pd.DataFrame(value)
        elif isinstance(value, list):
            frame = pd.DataFrame({key: value})
        else:
            continue
        sections.append(f"[{key}]\n{frame.to_string()}")
    return "\n\n".join(sections) + "\n"


def render(report: Report, output_format: str) -> str:
    return to_json(report) if output_format == "json" else to_text(report)
