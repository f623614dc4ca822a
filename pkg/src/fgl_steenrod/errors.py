"""
Exception hierarchy for fgl-steenrod.

Every concrete error is also a ``ValueError`` so callers that only care about
"bad input" can catch that.
"""

from typing import Any, Optional


class FglSteenrodError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(FglSteenrodError, ValueError):
    """Operands live in different rings (or different tensor factors)."""


class DegreeOutOfRangeError(FglSteenrodError, ValueError):
    """A requested degree lies outside ``0..truncation_degree``."""


class ParseError(FglSteenrodError, ValueError):
    """Text could not be parsed as an element, series or ring-map assignment."""


class NonReducedSeriesError(FglSteenrodError, ValueError):
    """A power series with a nonzero constant term was constructed."""


class NonStrictSeriesError(FglSteenrodError, ValueError):
    """A series whose linear coefficient is not 1 was used where a strict one is required."""


class SeriesMismatchError(FglSteenrodError, ValueError):
    """Series with different coefficient rings, truncations or arities were combined."""


class TruncationTooSmallError(FglSteenrodError, ValueError):
    """The requested truncation cannot see every generator of the construction."""


class ModelInconsistencyError(FglSteenrodError, ValueError):
    """A certificate that holds by construction failed; the model itself is broken."""


class NotAnIsomorphismError(FglSteenrodError, ValueError):
    """A series does not carry one formal group law to the other."""


class AxiomViolationError(FglSteenrodError, ValueError):
    """A bivariate series failed a formal group law axiom.

    Attributes:
        axiom: Name of the first failing axiom.
        degree: Lowest homogeneous degree at which it fails.
        residual: The homogeneous residual series at that degree.
    """

    def __init__(self, axiom: str, degree: int, residual: Any):
        self.axiom = axiom
        self.degree = degree
        self.residual = residual
        super().__init__(f"{axiom} fails at degree {degree}: residual {residual}")


class AdditiveObstructionError(FglSteenrodError, ValueError):
    """No strict isomorphism to the additive law exists at some degree.

    Attributes:
        degree: Degree at which the per-degree linear system is inconsistent.
        residual: Degree-``degree`` part of the partially transported law.
        two_series_residual: Degree-``degree`` part of its 2-series.
    """

    def __init__(self, degree: int, residual: Any, two_series_residual: Optional[Any] = None):
        self.degree = degree
        self.residual = residual
        self.two_series_residual = two_series_residual
        super().__init__(
            f"not isomorphic to the additive law at degree {degree}: residual {residual}"
            f" (2-series residual {two_series_residual})"
        )


class NotAdditiveError(FglSteenrodError, ValueError):
    """A series is not an endomorphism of the additive formal group law."""

    def __init__(self, degree: int, residual: Any):
        self.degree = degree
        self.residual = residual
        super().__init__(f"not an endomorphism of the additive law: fails at degree {degree}, residual {residual}")
