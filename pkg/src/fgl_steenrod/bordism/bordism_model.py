"""
Algebraic model of unoriented bordism cooperations.

The cooperation ring is ``GF(2)[a1, ..., am]`` (optionally with extra base
coefficients in front), ``|a_i| = i``. The series ``b(x) = x + sum a_i x^(i+1)``
defines the model law ``b^-1(b(x) + b(y))``; ring maps out of the cooperation ring
are points, evaluated to strict series by reading ``b`` through the map.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Optional

from fgl_steenrod.errors import (
    ModelInconsistencyError,
    NotAnIsomorphismError,
    RingMismatchError,
    SeriesMismatchError,
    TruncationTooSmallError,
)
from fgl_steenrod.fgl.formal_group_law import FormalGroupLaw, is_endomorphism, is_homomorphism, n_series, twist_additive
from fgl_steenrod.ring_core.data_models.ring_model import GeneratorSpec, RingDescriptor, require_same_ring
from fgl_steenrod.ring_core.element import RingElement, RingHom
from fgl_steenrod.ring_core.ring_factory import cooperation_ring, polynomial_ring
from fgl_steenrod.ring_core.tensor import TensorElement
from fgl_steenrod.series.composition import compose1
from fgl_steenrod.series.power_series import Series1, StrictSeries1, TruncatedSeries
from fgl_steenrod.steenrod.dual_steenrod import DualSteenrodPresentation
from fgl_steenrod.steenrod.hopf_verification import coassociativity_residual

logger = logging.getLogger(__name__)

EV_CONVENTION = "ev-left-outer"
ORIENTATION = "e"


def cooperation_name(i: int) -> str:
    return f"a{i}"


@dataclass(frozen=True)
class BordismModel:
    """The cooperation ring, its series ``b`` and the model law ``F_MO``."""

    base: RingDescriptor
    mishchenko: StrictSeries1
    law: FormalGroupLaw
    generator_count: int
    coefficient_generators: tuple[GeneratorSpec, ...] = ()
    cooperation_table: dict[str, TensorElement] = field(default_factory=dict, hash=False, compare=False)

    @property
    def truncation(self) -> int:
        return self.law.truncation

    @property
    def visible_truncation(self) -> int:
        """Highest power of ``x`` whose coefficient a ring map out of the model can set: ``m + 1``."""
        return self.generator_count + 1

    @property
    def cooperation_names(self) -> tuple[str, ...]:
        return tuple(cooperation_name(i) for i in range(1, self.generator_count + 1))

    def orientation_ring(self, truncation: Optional[int] = None) -> RingDescriptor:
        """``GF(2)[e]``, ``|e| = 1``, holding powers of the orientation class."""
        return polynomial_ring({ORIENTATION: 1}, truncation if truncation is not None else self.truncation)

    def coefficient_ring(self) -> RingDescriptor:
        """The base coefficients without the cooperation generators."""
        return RingDescriptor(generators=self.coefficient_generators, truncation_degree=self.base.truncation_degree)


def build_model(
    generator_count: int,
    truncation: int,
    coefficient_generators: Sequence[GeneratorSpec] = (),
) -> BordismModel:
    """
    Build the model with ``m`` cooperation generators.

    Args:
        generator_count: Number ``m`` of generators ``a1 .. am``.
        truncation: Series truncation ``N``; must satisfy ``m + 1 <= N``.
        coefficient_generators: Optional base coefficients placed before ``a1``.

    Raises:
        TruncationTooSmallError: If ``m + 1 > N``.
        ModelInconsistencyError: If the law fails its axioms or its 2-series is nonzero.
    """
    if generator_count < 0:
        raise ValueError(f"Generator count must be non-negative, got {generator_count}")
    if generator_count + 1 > truncation:
        raise TruncationTooSmallError(f"{generator_count} generators need truncation at least {generator_count + 1}")
    base = cooperation_ring(generator_count, truncation, coefficient_generators)
    coeffs = {i + 1: RingElement.generator(base, cooperation_name(i)) for i in range(1, generator_count + 1)}
    coeffs[1] = RingElement.one(base)
    b = StrictSeries1(base, truncation, coeffs)
    law = twist_additive(b)
    two_series = n_series(law, 2)
    if two_series:
        raise ModelInconsistencyError(f"Model law has nonzero 2-series {two_series}")
    model = BordismModel(base, b, law, generator_count, tuple(coefficient_generators))
    model = replace(model, cooperation_table=cooperation_coproduct(model))
    logger.info(f"Built bordism model with {generator_count} generators at truncation {truncation}")
    return model


def coaction(model: BordismModel, truncation: Optional[int] = None) -> TensorElement:
    """
    ``sum_{i>=0} e^(i+1) ⊗ a_i`` with ``a_0 = 1``, powers of ``e`` cut at the truncation.

    Examples:
        >>> str(coaction(build_model(2, 4)))
        'e ⊗ 1 + e^2 ⊗ a1 + e^3 ⊗ a2'
    """
    orientation = model.orientation_ring(truncation)
    e = RingElement.generator(orientation, ORIENTATION)
    total = TensorElement.pure(e, RingElement.one(model.base))
    for i in range(1, model.generator_count + 1):
        total = total + TensorElement.pure(e ** (i + 1), RingElement.generator(model.base, cooperation_name(i)))
    return total


def evaluate_coaction(coaction_tensor: TensorElement, hom: RingHom) -> Series1:
    """
    Apply ``(id ⊗ hom)`` and read the coefficient of ``e^n`` as the coefficient of ``x^n``.
    """
    mapped = coaction_tensor.apply([None, hom])
    orientation = mapped.left_ring
    coeffs: dict[int, RingElement] = {}
    for left, right in mapped.terms:
        n = orientation.monomial_degree(left)
        piece = RingElement(hom.target, [right])
        coeffs[n] = coeffs[n] + piece if n in coeffs else piece
    return Series1(hom.target, orientation.truncation_degree, coeffs)


@dataclass(frozen=True)
class EvaluatedPoint:
    """A ring map out of the model and its strict series ``hom(b)``."""

    target: RingDescriptor
    hom: RingHom
    series: StrictSeries1
    is_additive_automorphism: bool


def _check_source(model: BordismModel, hom: RingHom) -> None:
    if hom.source != model.base:
        raise RingMismatchError(f"Ring map must start at the model base {model.base}, not {hom.source}")


def ev(model: BordismModel, hom: RingHom) -> EvaluatedPoint:
    """
    Evaluate a ring map to the strict series ``x + sum hom(a_i) x^(i+1)``.

    The series is certified as a strict isomorphism from the base-changed model
    law to the additive law; it is also checked for being an automorphism of the
    additive law.

    Raises:
        ModelInconsistencyError: If the certificate fails.
    """
    _check_source(model, hom)
    series = StrictSeries1.from_series(model.mishchenko.map_coefficients(hom, hom.target))
    pushed = model.law.base_change(hom)
    additive = FormalGroupLaw.additive(hom.target, model.truncation)
    certificate = is_homomorphism(series, pushed, additive)
    if not certificate:
        raise ModelInconsistencyError(
            f"ev({hom}) is not an isomorphism to the additive law: degree {certificate.degree}, residual {certificate.residual}"
        )
    return EvaluatedPoint(hom.target, hom, series, bool(is_endomorphism(series, additive)))


def pair_to_ring_map(model: BordismModel, phi: Series1, coefficient_map: Optional[RingHom] = None) -> RingHom:
    """
    The ring map sending ``a_i`` to the coefficient of ``x^(i+1)`` in ``phi``.

    Args:
        model: The model.
        phi: Strict series over the target ring, with no terms beyond ``x^(m+1)``.
        coefficient_map: Images of the base coefficients (zero when omitted).

    Raises:
        SeriesMismatchError: If ``phi`` has terms the model cannot see.
    """
    phi = phi if isinstance(phi, StrictSeries1) else StrictSeries1.from_series(phi)
    target = phi.coeff_ring
    hidden = [n for n in phi.exponents() if n > model.visible_truncation]
    if hidden:
        raise SeriesMismatchError(f"Exponents {hidden} lie beyond x^{model.visible_truncation}")
    assignments = {name: phi.coefficient(i + 1) for i, name in enumerate(model.cooperation_names, start=1)}
    if coefficient_map is not None:
        require_same_ring(coefficient_map.target, target, "coefficient map and series")
        for spec in model.coefficient_generators:
            assignments[spec.name] = coefficient_map.image_of(spec.name)
    return RingHom(model.base, target, assignments)


class GammaTransport:
    """
    The substitution ``s(e_f) -> s(phi(e_g))`` between series over the two base changes.

    It is linear over the target ring and multiplicative, and sends the orientation
    variable to ``phi``; those properties determine it.
    """

    def __init__(self, phi: StrictSeries1, source_law: FormalGroupLaw, target_law: FormalGroupLaw):
        self.phi = phi
        self.source_law = source_law
        self.target_law = target_law

    def __call__(self, series: TruncatedSeries) -> TruncatedSeries:
        if series.arity != 1:
            raise SeriesMismatchError("gamma acts on series in the orientation variable")
        return compose1(series, self.phi)

    def image_of_orientation(self) -> StrictSeries1:
        return self.phi


def gamma_transport(model: BordismModel, phi: Series1, f: RingHom, g: RingHom) -> GammaTransport:
    """
    Build ``gamma(phi)`` for a strict isomorphism ``phi`` from ``f_* F_MO`` to ``g_* F_MO``.

    Raises:
        NotAnIsomorphismError: If ``phi`` fails the certificate ``phi(F_f(x, y)) = F_g(phi(x), phi(y))``.
    """
    _check_source(model, f)
    _check_source(model, g)
    require_same_ring(f.target, g.target, "the two base changes")
    phi = phi if isinstance(phi, StrictSeries1) else StrictSeries1.from_series(phi)
    source_law = model.law.base_change(f)
    target_law = model.law.base_change(g)
    certificate = is_homomorphism(phi, source_law, target_law)
    if not certificate:
        raise NotAnIsomorphismError(
            f"{phi} does not carry the f-law to the g-law: degree {certificate.degree}, residual {certificate.residual}"
        )
    return GammaTransport(phi, source_law, target_law)


def cooperation_coproduct(model: BordismModel) -> dict[str, TensorElement]:
    """
    ``Δ(a_n)``: coefficient of ``x^(n+1)`` in ``b_l∘b_r``, the outer series in the left slot.

    Examples:
        >>> str(cooperation_coproduct(build_model(3, 4))["a3"])
        '1 ⊗ a3 + a1 ⊗ a1^2 + a2 ⊗ a1 + a3 ⊗ 1'
    """
    base, N = model.base, model.truncation
    square = base.tensor_square()
    rank = base.rank

    def lift(series: StrictSeries1, offset: int) -> StrictSeries1:
        def shift(c: RingElement) -> RingElement:
            return RingElement(square, [tuple((i + offset, e) for i, e in m) for m in c.terms])

        return StrictSeries1.from_series(series.map_coefficients(shift, square))

    composite = compose1(lift(model.mishchenko, 0), lift(model.mishchenko, rank))
    return {
        name: TensorElement.from_tensor_square(composite.coefficient(i + 1), base, total_truncation=N)
        for i, name in enumerate(model.cooperation_names, start=1)
    }


def internal_compose(model: BordismModel, first: RingHom, second: RingHom) -> RingHom:
    """
    The ring map whose point is ``ev(first) ∘ ev(second)``, read through the cooperation coproduct.

    ``a_n`` goes to ``m((first ⊗ second) Δ(a_n))``; base coefficients follow ``second``.
    Agreement with composing the evaluated series holds up to ``x^(m+1)``.
    """
    _check_source(model, first)
    _check_source(model, second)
    require_same_ring(first.target, second.target, "composed ring maps")
    target = first.target
    table = model.cooperation_table or cooperation_coproduct(model)
    assignments = {name: table[name].multiply_out([first, second], target) for name in model.cooperation_names}
    for spec in model.coefficient_generators:
        assignments[spec.name] = second.image_of(spec.name)
    return RingHom(model.base, target, assignments)


def coassociativity_residuals(model: BordismModel) -> dict[str, TensorElement]:
    """
    ``(Δ⊗id)Δ(a_n) - (id⊗Δ)Δ(a_n)`` for every generator; base coefficients are primitive on the left.
    """
    table = dict(model.cooperation_table or cooperation_coproduct(model))
    one = RingElement.one(model.base)
    for spec in model.coefficient_generators:
        table[spec.name] = TensorElement.pure(
            RingElement.generator(model.base, spec.name), one, total_truncation=model.truncation
        )
    presentation = DualSteenrodPresentation(model.base, table, convention=EV_CONVENTION)
    return {
        name: coassociativity_residual(presentation, RingElement.generator(model.base, name))
        for name in model.cooperation_names
    }
