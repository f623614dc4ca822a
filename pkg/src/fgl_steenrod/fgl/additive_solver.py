"""
Degree-by-degree construction of a strict isomorphism to the additive law.

Suppose ``phi`` already carries ``F`` to a law ``G`` that agrees with ``x + y``
below degree ``d``. Replacing ``phi`` by ``(x + c x^d)∘phi`` changes the degree ``d``
part of ``G`` by exactly ``c((x + y)^d - x^d - y^d)``. Killing it is a GF(2)
linear system in the coordinates of ``c``: for ``0 < i < d``,
``binom(d, i) c = G_{i, d-i}``.
"""

import logging
from math import comb

import numpy as np

from fgl_steenrod.errors import AdditiveObstructionError, ModelInconsistencyError
from fgl_steenrod.fgl.formal_group_law import FormalGroupLaw, transport
from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.ring_core.graded import graded_basis, solve_gf2
from fgl_steenrod.series.composition import compose1, revert, substitute
from fgl_steenrod.series.power_series import Series1, StrictSeries1, TruncatedSeries, variables

logger = logging.getLogger(__name__)


def transported_law(F: FormalGroupLaw, phi: StrictSeries1) -> TruncatedSeries:
    """``phi(F(phi^-1(x), phi^-1(y)))`` without re-certifying the axioms."""
    x, y = variables(F.coeff_ring, F.truncation, 2)
    inverse = revert(phi)
    return substitute(phi, [F(substitute(inverse, [x]), substitute(inverse, [y]))])


def _correction(F: FormalGroupLaw, residual: TruncatedSeries, d: int) -> RingElement:
    ring = F.coeff_ring
    coefficient_degrees = sorted({deg for c in residual.coeffs.values() for deg in c.degrees()})
    basis = [m for deg in coefficient_degrees for m in graded_basis(ring, deg)]
    identity = np.eye(len(basis), dtype=np.uint8)
    blocks = []
    rhs = []
    for i in range(1, d):
        blocks.append((comb(d, i) % 2) * identity)
        rhs.append(residual.coefficient(i, d - i).coordinates(basis))
    solution = solve_gf2(np.concatenate(blocks), np.concatenate(rhs))
    if solution is None:
        x = Series1.identity(ring, F.truncation)
        two_series_part = substitute(residual, [x, x])
        raise AdditiveObstructionError(d, residual, two_series_part)
    return RingElement.from_coordinates(ring, basis, solution)


def solve_iso_to_additive(F: FormalGroupLaw) -> StrictSeries1:
    """
    Find a strict ``phi`` with ``transport(F, phi) = x + y`` up to the truncation.

    Free choices are resolved to the lexicographically smallest coordinate vector,
    so the additive law gets the identity series.

    Args:
        F: A certified law over a graded GF(2) polynomial ring.

    Returns:
        The strict isomorphism.

    Raises:
        AdditiveObstructionError: At the first degree where no correction exists, with the
            degree ``d`` part of the partially transported law and of its 2-series.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import ground_field
        >>> try:
        ...     solve_iso_to_additive(FormalGroupLaw.multiplicative(ground_field(), 4))
        ... except AdditiveObstructionError as e:
        ...     print(e.degree, e.two_series_residual)
        2 x^2
    """
    ring, N = F.coeff_ring, F.truncation
    phi = Series1.identity(ring, N)
    for d in range(2, N + 1):
        residual = transported_law(F, phi).homogeneous_part(d)
        if not residual:
            logger.debug(f"Degree {d}: already additive")
            continue
        try:
            c = _correction(F, residual, d)
        except AdditiveObstructionError as e:
            logger.info(f"Not isomorphic to the additive law: obstruction at degree {d}")
            logger.debug(f"Residual {e.residual}, 2-series residual {e.two_series_residual}")
            raise
        logger.debug(f"Degree {d}: correction x + ({c})*x^{d}")
        phi = compose1(StrictSeries1(ring, N, {1: 1, d: c}), phi)
    if not transport(F, phi).is_additive():
        raise ModelInconsistencyError(f"Solver result {phi} does not transport the law to x + y")
    logger.info(f"Found strict isomorphism to the additive law: {phi}")
    return phi
