"""
Pipelines behind each command.

``run`` returns an exit code with its report: 0 when every verification
passes, 1 when one fails or an obstruction is found. Invalid input raises and
is mapped to exit code 2 by the entry point.
"""

import logging
from collections.abc import Iterable
from typing import NamedTuple

from fgl_steenrod.bordism.bordism_model import (
    BordismModel,
    build_model,
    coaction,
    coassociativity_residuals,
    ev,
    evaluate_coaction,
    internal_compose,
)
from fgl_steenrod.cli.reports import (
    BuildReport,
    CoactionReport,
    CompositionReport,
    CoproductReport,
    EvaluationReport,
    LawReport,
    Report,
    SteenrodReport,
)
from fgl_steenrod.configs.run_config import Command, RunConfig
from fgl_steenrod.errors import AdditiveObstructionError, AxiomViolationError
from fgl_steenrod.fgl.additive_solver import solve_iso_to_additive
from fgl_steenrod.fgl.formal_group_law import check_axioms, n_series
from fgl_steenrod.ring_core.data_models.ring_model import RingDescriptor
from fgl_steenrod.ring_core.parsing import names_in, parse_polynomial, parse_ring_map, parse_series_coefficients
from fgl_steenrod.ring_core.ring_factory import STANDARD_RINGS, create_standard_ring, infer_ring
from fgl_steenrod.series.composition import compose1
from fgl_steenrod.series.power_series import Series2
from fgl_steenrod.steenrod.dual_steenrod import derive_presentation
from fgl_steenrod.steenrod.hopf_verification import verify_hopf
from fgl_steenrod.steenrod.milnor_oracle import milnor_oracle_compare

logger = logging.getLogger(__name__)


class RunResult(NamedTuple):
    exit_code: int
    report: Report


def _exit_code(report: Report) -> int:
    return 0 if report.status == "ok" else 1


def load_ring(ring_config: str) -> RingDescriptor:
    """A bundled preset by name, otherwise a JSON configuration file."""
    if ring_config in STANDARD_RINGS:
        return create_standard_ring(ring_config)
    return RingDescriptor.from_config(ring_config)


def _target_ring(config: RunConfig, expressions: Iterable[str]) -> RingDescriptor:
    if config.ring_config is not None:
        return load_ring(config.ring_config)
    names = set()
    for expression in expressions:
        names |= names_in(parse_polynomial(expression))
    return infer_ring(names or {"t"}, config.resolved_truncation())


def _right_hand_sides(assignments: str) -> list[str]:
    sides = []
    for part in filter(None, (p.strip() for p in assignments.split(","))):
        for separator in ("->", "=", ":"):
            if separator in part:
                sides.append(part.split(separator, 1)[1])
                break
    return sides


def _run_steenrod(config: RunConfig) -> Report:
    k, N = config.generators, config.resolved_truncation()
    presentation = derive_presentation(k, N)
    hopf = verify_hopf(presentation, samples=config.samples, seed=config.seed, max_workers=config.max_workers)
    oracle = milnor_oracle_compare(k, presentation=presentation)
    verified = hopf.passed and oracle.match
    detailed = config.command == Command.VERIFY
    return SteenrodReport(
        command=config.command.value,
        status="ok" if verified else "failed",
        generators=list(presentation.ring.generators),
        truncation=N,
        coproduct={name: str(value) for name, value in presentation.coproduct_table.items()},
        antipode={name: str(value) for name, value in presentation.antipode_table.items()},
        verified=verified,
        checks=hopf.checks if detailed else None,
        oracle=oracle if detailed else None,
    )


def _parse_law(config: RunConfig) -> Series2:
    N = config.resolved_truncation()
    ring = load_ring(config.ring_config) if config.ring_config is not None else None
    ring, coefficients = parse_series_coefficients(config.law, ("x", "y"), ring, truncation=N)
    return Series2(ring, N, coefficients)


def _run_law(config: RunConfig) -> Report:
    series = _parse_law(config)
    base = {"command": config.command.value, "law": str(series), "truncation": series.truncation}
    try:
        law = check_axioms(series)
    except AxiomViolationError as e:
        return LawReport(**base, status="failed", axiom=e.axiom, degree=e.degree, residual=str(e.residual))
    if config.command == Command.CHECK:
        return LawReport(**base)
    if config.command == Command.TWO_SERIES:
        two_series = n_series(law, 2)
        return LawReport(**base, series=str(two_series), vanishes=not two_series)
    try:
        phi = solve_iso_to_additive(law)
    except AdditiveObstructionError as e:
        return LawReport(
            **base,
            status="failed",
            degree=e.degree,
            residual=str(e.two_series_residual),
            law_residual=str(e.residual),
        )
    return LawReport(**base, series=str(phi))


def _bordism_fields(config: RunConfig, model: BordismModel) -> dict:
    return {
        "command": config.command.value,
        "generators": list(model.base.generators),
        "truncation": model.truncation,
        "law": str(model.law),
    }


def _run_bordism(config: RunConfig) -> Report:
    model = build_model(config.generators, config.resolved_truncation())
    fields = _bordism_fields(config, model)
    if config.command == Command.BUILD:
        return BuildReport(
            **fields,
            mishchenko=str(model.mishchenko),
            two_series=str(n_series(model.law, 2)),
            additive_isomorphism=str(solve_iso_to_additive(model.law)),
        )
    if config.command == Command.COACTION:
        return CoactionReport(**fields, coaction=str(coaction(model)))
    if config.command == Command.COPRODUCT:
        residuals = coassociativity_residuals(model)
        coassociative = not any(residuals.values())
        return CoproductReport(
            **fields,
            status="ok" if coassociative else "failed",
            coproduct={name: str(value) for name, value in model.cooperation_table.items()},
            coassociative=coassociative,
        )

    target = _target_ring(config, [side for m in config.maps for side in _right_hand_sides(m)])
    homs = [parse_ring_map(m, model.base, target) for m in config.maps]
    if config.command == Command.EV:
        point = ev(model, homs[0])
        return EvaluationReport(
            **fields,
            target=list(target.generators),
            map=str(homs[0]),
            series=str(point.series),
            read_from_coaction=str(evaluate_coaction(coaction(model), homs[0])),
            is_additive_automorphism=point.is_additive_automorphism,
        )

    first, second = homs
    composite = internal_compose(model, first, second)
    composite_series = ev(model, composite).series
    composed_series = compose1(ev(model, first).series, ev(model, second).series)
    visible = model.visible_truncation
    agree = composite_series.truncate_to(visible) == composed_series.truncate_to(visible)
    if not agree:
        logger.warning(f"Composite map and composed series disagree below x^{visible + 1}")
    return CompositionReport(
        **fields,
        status="ok" if agree else "failed",
        target=list(target.generators),
        first=str(first),
        second=str(second),
        composite_map=str(composite),
        composite_series=str(composite_series),
        composed_series=str(composed_series),
        visible_truncation=visible,
        agree=agree,
    )


def run(config: RunConfig) -> RunResult:
    """
    Execute one command.

    Args:
        config: Validated run configuration.

    Returns:
        Exit code and report document.

    Raises:
        FglSteenrodError: For input the pipeline cannot accept (a ``ValueError``).
    """
    logger.info(f"Running '{config.command.value}'")
    if config.command in (Command.DERIVE, Command.VERIFY):
        report = _run_steenrod(config)
    elif config.command in (Command.SOLVE, Command.CHECK, Command.TWO_SERIES):
        report = _run_law(config)
    else:
        report = _run_bordism(config)
    return RunResult(_exit_code(report), report)
