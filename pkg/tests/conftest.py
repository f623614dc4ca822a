import random

import pytest
from hypothesis import strategies as st

from fgl_steenrod.ring_core.ring_factory import create_standard_ring, ground_field, polynomial_ring
from fgl_steenrod.series.power_series import Series1, StrictSeries1


def strict_series_over_gf2(bits, truncation: int) -> StrictSeries1:
    """``x + sum x^n`` over the exponents ``n >= 2`` whose bit is set."""
    coeffs = {n: 1 for n, bit in enumerate(bits, start=2) if bit}
    coeffs[1] = 1
    return StrictSeries1(ground_field(), truncation, coeffs)


def strict_series(truncation: int):
    """Hypothesis strategy for strict series with GF(2) coefficients."""
    return st.lists(st.booleans(), min_size=truncation - 1, max_size=truncation - 1).map(
        lambda bits: strict_series_over_gf2(bits, truncation)
    )


def reduced_series(truncation: int):
    """Hypothesis strategy for reduced (possibly non-strict) series with GF(2) coefficients."""
    return st.lists(st.booleans(), min_size=truncation, max_size=truncation).map(
        lambda bits: Series1(ground_field(), truncation, {n: 1 for n, bit in enumerate(bits, start=1) if bit})
    )


@pytest.fixture
def k():
    """The ground field GF(2)."""
    return ground_field()


@pytest.fixture
def small_ring():
    """GF(2)[a1, a2] truncated at degree 4."""
    return polynomial_ring({"a1": 1, "a2": 2}, truncation_degree=4)


@pytest.fixture
def poly_t():
    """GF(2)[t] truncated at degree 6."""
    return create_standard_ring("polynomial-t")


@pytest.fixture
def rng():
    return random.Random(0)
