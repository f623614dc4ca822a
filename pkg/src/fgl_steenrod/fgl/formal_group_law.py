"""
Formal group laws up to truncation.

A ``FormalGroupLaw`` is a ``Series2`` together with the degree up to which the
axioms were checked. Axioms are checked degree by degree so that a failure
reports the lowest homogeneous degree where it happens.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from fgl_steenrod.errors import AxiomViolationError, DegreeOutOfRangeError, ModelInconsistencyError, SeriesMismatchError
from fgl_steenrod.ring_core.data_models.ring_model import RingDescriptor
from fgl_steenrod.ring_core.element import RingHom
from fgl_steenrod.series.composition import revert, substitute
from fgl_steenrod.series.power_series import Series1, Series2, StrictSeries1, TruncatedSeries, variables

logger = logging.getLogger(__name__)

AXIOMS = ("unitality", "commutativity", "associativity")


@dataclass(frozen=True)
class FormalGroupLaw:
    """A bivariate series certified against the formal group law axioms up to ``validated_to``."""

    law: Series2
    validated_to: int

    @property
    def coeff_ring(self) -> RingDescriptor:
        return self.law.coeff_ring

    @property
    def truncation(self) -> int:
        return self.law.truncation

    @classmethod
    def additive(cls, coeff_ring: RingDescriptor, truncation: int) -> "FormalGroupLaw":
        """The additive law ``x + y``."""
        return check_axioms(Series2(coeff_ring, truncation, {(1, 0): 1, (0, 1): 1}))

    @classmethod
    def multiplicative(cls, coeff_ring: RingDescriptor, truncation: int) -> "FormalGroupLaw":
        """The multiplicative law ``x + y + xy``."""
        return check_axioms(Series2(coeff_ring, truncation, {(1, 0): 1, (0, 1): 1, (1, 1): 1}))

    def is_additive(self) -> bool:
        return self.law == Series2(self.coeff_ring, self.truncation, {(1, 0): 1, (0, 1): 1})

    def base_change(self, hom: RingHom) -> "FormalGroupLaw":
        """Push the coefficients forward along ``hom``; ring maps preserve the axioms."""
        if hom.source != self.coeff_ring:
            raise SeriesMismatchError(f"Homomorphism source {hom.source} is not the coefficient ring {self.coeff_ring}")
        mapped = self.law.map_coefficients(hom, hom.target)
        return FormalGroupLaw(mapped, self.validated_to)

    def __call__(self, u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
        return substitute(self.law, [u, v])

    def __str__(self) -> str:
        return str(self.law)


def _axiom_residuals(F: Series2) -> dict[str, list[TruncatedSeries]]:
    ring, n = F.coeff_ring, F.truncation
    x1 = Series1.identity(ring, n)
    zero1 = Series1.zero(ring, n)
    a, b, c = variables(ring, n, 3)
    left = substitute(F, [substitute(F, [a, b]), c])
    right = substitute(F, [a, substitute(F, [b, c])])
    return {
        "unitality": [substitute(F, [x1, zero1]) - x1, substitute(F, [zero1, x1]) - x1],
        "commutativity": [F - F.swap()],
        "associativity": [left - right],
    }


def check_axioms(F: Series2, d: Optional[int] = None) -> FormalGroupLaw:
    """
    Certify ``F`` as a formal group law up to degree ``d``.

    Args:
        F: Candidate law.
        d: Degree to certify, at most ``F.truncation``; defaults to the truncation.

    Returns:
        The certified law.

    Raises:
        AxiomViolationError: With the first failing axiom, the lowest failing degree
            and the homogeneous residual there. At equal degrees unitality is reported
            before commutativity, and commutativity before associativity.
    """
    d = F.truncation if d is None else d
    if not 1 <= d <= F.truncation:
        raise DegreeOutOfRangeError(f"Cannot certify degree {d} of a series truncated at {F.truncation}")
    residuals = _axiom_residuals(F)
    for degree in range(1, d + 1):
        for axiom in AXIOMS:
            for residual in residuals[axiom]:
                part = residual.homogeneous_part(degree)
                if part:
                    logger.debug(f"{axiom} fails at degree {degree}: {part}")
                    raise AxiomViolationError(axiom, degree, part)
    return FormalGroupLaw(F, d)


def n_series(F: FormalGroupLaw, n: int) -> Series1:
    """
    The ``n``-series by left iteration: ``[0] = 0`` and ``[n](x) = F(x, [n-1](x))``.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import ground_field
        >>> str(n_series(FormalGroupLaw.multiplicative(ground_field(), 4), 2))
        'x^2'
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    ring, N = F.coeff_ring, F.truncation
    x = Series1.identity(ring, N)
    result = Series1.zero(ring, N)
    for _ in range(n):
        result = F(x, result)
    return result


def _in_two_variables(f: Series1) -> tuple[TruncatedSeries, TruncatedSeries]:
    x, y = variables(f.coeff_ring, f.truncation, 2)
    return substitute(f, [x]), substitute(f, [y])


def twist_additive(phi: StrictSeries1) -> FormalGroupLaw:
    """
    The law ``phi^-1(phi(x) + phi(y))``, isomorphic to the additive one by construction.

    Raises:
        ModelInconsistencyError: If the constructed law fails its own axiom check.
    """
    phi = phi if isinstance(phi, StrictSeries1) else StrictSeries1.from_series(phi)
    phi_x, phi_y = _in_two_variables(phi)
    law = substitute(revert(phi), [phi_x + phi_y])
    try:
        return check_axioms(law)
    except AxiomViolationError as e:
        raise ModelInconsistencyError(f"Twisted additive law is not a formal group law: {e}") from e


def transport(F: FormalGroupLaw, phi: StrictSeries1) -> FormalGroupLaw:
    """``phi(F(phi^-1(x), phi^-1(y)))``: the law that ``phi`` carries ``F`` to."""
    phi = phi if isinstance(phi, StrictSeries1) else StrictSeries1.from_series(phi)
    if phi.coeff_ring != F.coeff_ring or phi.truncation != F.truncation:
        raise SeriesMismatchError("transport needs a series over the law's ring and truncation")
    inv_x, inv_y = _in_two_variables(revert(phi))
    law = substitute(phi, [F(inv_x, inv_y)])
    try:
        return check_axioms(law, F.validated_to)
    except AxiomViolationError as e:
        raise ModelInconsistencyError(f"Transported law is not a formal group law: {e}") from e


@dataclass(frozen=True)
class HomomorphismCheck:
    """Outcome of a homomorphism test: ``degree`` and ``residual`` describe the first failure."""

    holds: bool
    degree: Optional[int] = None
    residual: Optional[TruncatedSeries] = None

    def __bool__(self) -> bool:
        return self.holds


def is_homomorphism(f: Series1, F: FormalGroupLaw, G: FormalGroupLaw) -> HomomorphismCheck:
    """Whether ``f(F(x, y)) = G(f(x), f(y))`` up to truncation."""
    if not (f.coeff_ring == F.coeff_ring == G.coeff_ring):
        raise SeriesMismatchError("Series and laws must share their coefficient ring")
    if not (f.truncation == F.truncation == G.truncation):
        raise SeriesMismatchError("Series and laws must share their truncation")
    f_x, f_y = _in_two_variables(f)
    residual = substitute(f, [F.law]) - G(f_x, f_y)
    degree = residual.lowest_degree()
    if degree is None:
        return HomomorphismCheck(True)
    return HomomorphismCheck(False, degree, residual.homogeneous_part(degree))


def is_endomorphism(f: Series1, F: FormalGroupLaw) -> HomomorphismCheck:
    """
    Whether ``f(F(x, y)) = F(f(x), f(y))`` up to truncation.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import ground_field
        >>> additive = FormalGroupLaw.additive(ground_field(), 4)
        >>> bool(is_endomorphism(Series1(ground_field(), 4, {1: 1, 3: 1}), additive))
        False
    """
    return is_homomorphism(f, F, F)
