"""
Text parser for ring elements, power series and ring-map assignments.

Expressions are read by sympy and reduced to GF(2) polynomials, so the canonical
printed form, parentheses and integer powers of sums all work:
``a2*x^2*y + (a1 + a3)*x^3``. ``^`` and ``**`` both mean power, integer literals
are read mod 2 and ``-`` is the same as ``+``.
"""

import json
import re
from collections.abc import Iterable, Mapping, Sequence
from tokenize import TokenError
from typing import Optional

from sympy import Expr, Float, Integer, Poly, Rational, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import auto_number, auto_symbol, convert_xor, parse_expr
from sympy.polys.polyerrors import BasePolynomialError

from fgl_steenrod.errors import ParseError
from fgl_steenrod.ring_core.data_models.ring_model import RingDescriptor
from fgl_steenrod.ring_core.element import RingElement, RingHom, _toggle
from fgl_steenrod.ring_core.ring_factory import infer_ring

NamedMonomial = tuple[tuple[str, int], ...]

_TRANSFORMATIONS = (auto_symbol, auto_number, convert_xor)


def _namespace() -> dict:
    # Every other name becomes a Symbol, so E, I, gamma and friends stay plain generators.
    return {"Symbol": Symbol, "Integer": Integer, "Float": Float, "Rational": Rational}


def _to_expr(text: str) -> Expr:
    if not text.strip():
        raise ParseError("Empty expression")
    try:
        expr = parse_expr(text, global_dict=_namespace(), transformations=_TRANSFORMATIONS)
    except (SympifyError, SyntaxError, TokenError, TypeError, NameError, AttributeError, ValueError) as e:
        raise ParseError(f"Cannot parse {text!r}: {e}") from e
    if not isinstance(expr, Expr):
        raise ParseError(f"{text!r} is not a polynomial expression")
    return expr


def parse_polynomial(text: str) -> frozenset:
    """
    Parse ``text`` into a set of named monomials (sorted ``(name, exponent)`` tuples) with GF(2) coefficients.

    Examples:
        >>> sorted(parse_polynomial("(a1 + t)^2 + 3*t^2"))
        [(('a1', 2),)]
    """
    expr = _to_expr(text)
    if not expr.free_symbols:
        if not expr.is_Integer:
            raise ParseError(f"Constant {text!r} is not an integer")
        return frozenset({()}) if int(expr) % 2 else frozenset()
    gens = sorted(expr.free_symbols, key=lambda s: s.name)
    try:
        poly = Poly(expr, *gens, modulus=2)
    except BasePolynomialError as e:
        raise ParseError(f"{text!r} is not a polynomial over GF(2): {e}") from e
    if poly.is_zero:
        return frozenset()
    return frozenset(
        tuple((g.name, e) for g, e in zip(gens, monom) if e) for monom, _ in poly.terms()
    )


def names_in(polynomial: Iterable[NamedMonomial]) -> set[str]:
    return {name for monomial in polynomial for name, _ in monomial}


def _monomial_text(monomial: NamedMonomial) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in monomial) or "1"


def _to_element(polynomial: Iterable[NamedMonomial], ring: RingDescriptor) -> RingElement:
    try:
        indexed = [(m, tuple((ring.index_of(n), e) for n, e in m)) for m in polynomial]
    except ValueError as e:
        raise ParseError(str(e)) from e
    above = sorted(_monomial_text(m) for m, index in indexed if ring.monomial_degree(index) > ring.truncation_degree)
    if above:
        raise ParseError(f"{', '.join(above)} lies above the truncation degree {ring.truncation_degree} of {ring}")
    return RingElement(ring, [index for _, index in indexed])


def parse_element(text: str, ring: RingDescriptor) -> RingElement:
    """
    Parse an element of ``ring`` from its text form.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import polynomial_ring
        >>> ring = polynomial_ring({"a1": 1, "a2": 2}, truncation_degree=4)
        >>> str(parse_element("(a1 + a2)^2 + a2^2", ring))
        'a1^2'
    """
    return _to_element(parse_polynomial(text), ring)


def split_series_terms(
    polynomial: Iterable[NamedMonomial], variables: Sequence[str]
) -> dict[tuple[int, ...], list[NamedMonomial]]:
    """Group named monomials by their exponents in ``variables``; the rest is the coefficient."""
    grouped: dict[tuple[int, ...], list[NamedMonomial]] = {}
    for monomial in polynomial:
        exponents = dict(monomial)
        key = tuple(exponents.pop(v, 0) for v in variables)
        grouped.setdefault(key, []).append(tuple(sorted(exponents.items())))
    return grouped


def parse_series_coefficients(
    text: str,
    variables: Sequence[str],
    ring: Optional[RingDescriptor] = None,
    truncation: Optional[int] = None,
) -> tuple[RingDescriptor, dict[tuple[int, ...], RingElement]]:
    """
    Parse a series in ``variables`` into a coefficient table.

    Args:
        text: Series text, or its JSON form (list of ``{"exponent", "coefficient"}`` objects).
        variables: Names of the series variables, e.g. ``("x", "y")``.
        ring: Coefficient ring; inferred from the coefficient names when omitted.
        truncation: Cutoff used when the ring has to be inferred.

    Returns:
        The coefficient ring and a map from exponent tuples to coefficients.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        grouped = _json_terms(stripped, len(variables))
    else:
        grouped = split_series_terms(parse_polynomial(stripped), variables)
    if ring is None:
        names = {name for coefficient in grouped.values() for name in names_in(coefficient)}
        cutoff = truncation if truncation is not None else max((sum(k) for k in grouped), default=1)
        ring = infer_ring(names, max(cutoff, 1))
    coefficients = {}
    for key, monomials in grouped.items():
        coefficient = _to_element(monomials, ring)
        if coefficient:
            coefficients[key] = coefficient
    return ring, coefficients


def _json_terms(text: str, arity: int) -> dict[tuple[int, ...], list[NamedMonomial]]:
    try:
        entries = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON series: {e}") from e
    grouped: dict[tuple[int, ...], list[NamedMonomial]] = {}
    for entry in entries:
        if not isinstance(entry, Mapping) or "exponent" not in entry or "coefficient" not in entry:
            raise ParseError(f"JSON series entries need 'exponent' and 'coefficient': {entry!r}")
        exponent = entry["exponent"]
        key = tuple(exponent) if isinstance(exponent, list) else (exponent,)
        if len(key) != arity:
            raise ParseError(f"Exponent {exponent!r} does not have {arity} entries")
        coefficient = parse_polynomial(str(entry["coefficient"]))
        bucket: set = set(grouped.get(key, []))
        for monomial in coefficient:
            _toggle(bucket, monomial)
        grouped[key] = list(bucket)
    return grouped


def parse_ring_map(text: str, source: RingDescriptor, target: RingDescriptor) -> RingHom:
    """
    Parse assignments like ``"a1=t, a2=t^2"`` (``->`` works too); unnamed generators map to zero.
    """
    assignments: dict[str, RingElement] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        match = re.match(r"^([A-Za-z][A-Za-z0-9_']*)\s*(?:=|->|:)\s*(.+)$", part)
        if match is None:
            raise ParseError(f"Cannot read assignment {part!r}; expected 'name=expression'")
        name, expression = match.groups()
        if name not in source.names:
            raise ParseError(f"{name!r} is not a generator of {source}")
        assignments[name] = parse_element(expression, target)
    return RingHom(source, target, assignments)
