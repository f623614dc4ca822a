"""
Independent recomputation of the coproduct with sympy.

The two generic points are written out as plain polynomials in
``x, xi1_l, ..., xik_l, xi1_r, ..., xik_r`` over GF(2) and the composite is
expanded naively, ``sum_j L_j * g^(2^j)``, with sympy's sparse polynomial
rings. Nothing here goes through the series or ring-core arithmetic.
"""

import logging
from typing import Optional

from sympy import GF
from sympy.polys.orderings import grlex
from sympy.polys.rings import xring

from fgl_steenrod.ring_core.element import RingElement
from fgl_steenrod.ring_core.tensor import TensorElement
from fgl_steenrod.steenrod.data_models.verification_model import OracleEntry, OracleReport
from fgl_steenrod.steenrod.dual_steenrod import DualSteenrodPresentation, derive_coproduct, generator_name

logger = logging.getLogger(__name__)


def naive_coproduct(generator_count: int, truncation: int, skew: bool = False) -> dict[int, dict]:
    """
    Coefficients of ``x^(2^n)`` in the composite of two generic points.

    Args:
        generator_count: Number ``k`` of generators.
        truncation: Highest power of ``x`` kept.
        skew: Compose in the opposite order, putting the inner point's coefficients
            in the left slot. Used to check that the comparison can fail.

    Returns:
        For each ``n``, a map from ``(left exponents, right exponents)`` to 1.
    """
    k = generator_count
    names = ["x"] + [f"L{j}" for j in range(1, k + 1)] + [f"R{j}" for j in range(1, k + 1)]
    _, gens = xring(",".join(names), GF(2), grlex)
    x, left, right = gens[0], gens[1 : k + 1], gens[k + 1 :]
    outer_coeffs, inner_coeffs = (right, left) if skew else (left, right)

    inner = x + sum((c * x ** (2**j) for j, c in enumerate(inner_coeffs, start=1)), 0 * x)
    composite = inner
    for j, c in enumerate(outer_coeffs, start=1):
        composite += c * inner ** (2**j)

    tables: dict[int, dict] = {n: {} for n in range(1, k + 1)}
    wanted = {2**n: n for n in range(1, k + 1) if 2**n <= truncation}
    for monom, coeff in composite.terms():
        if monom[0] in wanted and int(coeff) % 2:
            key = (tuple(monom[1 : k + 1]), tuple(monom[k + 1 :]))
            table = tables[wanted[monom[0]]]
            table[key] = table.get(key, 0) ^ 1
    return tables


def _to_tensor(table: dict, presentation: DualSteenrodPresentation) -> TensorElement:
    ring = presentation.ring

    def sparse(dense):
        return tuple((i, e) for i, e in enumerate(dense) if e)

    terms = [(sparse(left), sparse(right)) for (left, right), bit in table.items() if bit]
    return TensorElement((ring, ring), terms, total_truncation=presentation.truncation)


def naive_coproduct_of(
    presentation: DualSteenrodPresentation, element: RingElement, tables: Optional[dict[int, dict]] = None
) -> TensorElement:
    """
    ``Δ(element)`` recomputed in sympy from the naive generator coproducts.

    Each ``Δ(xi_n)`` becomes a polynomial in ``L1, ..., Lk, R1, ..., Rk`` and the
    monomials of ``element`` are raised and multiplied out there, so the result
    does not depend on the presentation's tables or the tensor arithmetic.

    Args:
        presentation: Supplies the ring, the generator count and the truncation.
        element: Element of the presentation's ring.
        tables: Output of ``naive_coproduct``; recomputed when omitted.
    """
    p = presentation
    k = p.generator_count
    factors = (p.ring, p.ring)
    if k == 0:
        if element.constant_term:
            return TensorElement.one(factors, p.truncation)
        return TensorElement.zero(factors, p.truncation)
    if tables is None:
        tables = naive_coproduct(k, p.truncation)
    ring, _ = xring(",".join([f"L{j}" for j in range(1, k + 1)] + [f"R{j}" for j in range(1, k + 1)]), GF(2), grlex)
    images = [
        ring.from_dict({left + right: 1 for (left, right), bit in tables[n].items() if bit}) for n in range(1, k + 1)
    ]
    total = ring.zero
    for monomial in element.terms:
        term = ring.one
        for index, exp in monomial:
            term *= images[index] ** exp
        total += term
    return _to_tensor({(monom[:k], monom[k:]): 1 for monom, coeff in total.terms() if int(coeff) % 2}, p)


def milnor_oracle_compare(
    generator_count: int,
    truncation: Optional[int] = None,
    presentation: Optional[DualSteenrodPresentation] = None,
    skew: bool = False,
) -> OracleReport:
    """
    Compare a derived coproduct table with the naive recomputation, term for term.

    Args:
        generator_count: Number ``k`` of generators.
        truncation: Truncation; defaults to ``2^k``.
        presentation: Derived tables to check; derived here when omitted.
        skew: Recompute with the composition order reversed.

    Returns:
        One entry per generator; ``report.match`` is true iff all agree.
    """
    p = presentation if presentation is not None else derive_coproduct(generator_count, truncation)
    recomputed = naive_coproduct(generator_count, p.truncation, skew=skew)
    entries = []
    for n in range(1, generator_count + 1):
        name = generator_name(n)
        derived = p.coproduct_table[name]
        oracle = _to_tensor(recomputed[n], p)
        entries.append(OracleEntry(generator=name, derived=str(derived), recomputed=str(oracle), match=derived == oracle))
    report = OracleReport(generator_count=generator_count, truncation=p.truncation, entries=entries)
    if not report.match:
        logger.warning(f"Coproduct disagrees with the naive recomputation for {[e.generator for e in entries if not e.match]}")
    return report
