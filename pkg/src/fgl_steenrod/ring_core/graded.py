"""
Per-degree linear algebra over GF(2).

Each graded piece of a truncated polynomial ring is a finite GF(2) vector space
with the monomials of that degree as basis. Linear systems over GF(2) are solved
with numpy ``uint8`` matrices and XOR row reduction.
"""

from typing import Optional

import numpy as np

from fgl_steenrod.errors import DegreeOutOfRangeError
from fgl_steenrod.ring_core.data_models.ring_model import Monomial, RingDescriptor


def graded_basis(ring: RingDescriptor, d: int) -> list[Monomial]:
    """All monomials of weighted degree exactly ``d``, in canonical order.

    Args:
        ring: The polynomial ring.
        d: Degree, ``0 <= d <= ring.truncation_degree``.

    Returns:
        Monomials sorted graded-lexicographically (larger exponents of earlier generators first).

    Raises:
        DegreeOutOfRangeError: If ``d`` is outside the truncation window.

    Examples:
        >>> from fgl_steenrod.ring_core.ring_factory import polynomial_ring
        >>> ring = polynomial_ring({"a1": 1, "a2": 2}, truncation_degree=4)
        >>> [ring.format_monomial(m) for m in graded_basis(ring, 3)]
        ['a1^3', 'a1*a2']
    """
    if not 0 <= d <= ring.truncation_degree:
        raise DegreeOutOfRangeError(f"Degree {d} outside 0..{ring.truncation_degree}")
    degrees = ring.degrees
    found: list[Monomial] = []

    def extend(index: int, remaining: int, prefix: tuple) -> None:
        if remaining == 0:
            found.append(prefix)
            return
        if index == len(degrees):
            return
        # Largest exponent first keeps the canonical order without a sort.
        for e in range(remaining // degrees[index], -1, -1):
            step = ((index, e),) if e else ()
            extend(index + 1, remaining - e * degrees[index], prefix + step)

    extend(0, d, ())
    return found


def graded_dimension(ring: RingDescriptor, d: int) -> int:
    return len(graded_basis(ring, d))


def row_reduce(matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2).

    Returns:
        The reduced matrix and the list of pivot columns.
    """
    reduced = (matrix.copy() % 2).astype(np.uint8)
    rows, cols = reduced.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.flatnonzero(reduced[r:, c])
        if candidates.size == 0:
            continue
        pivot = r + candidates[0]
        if pivot != r:
            reduced[[r, pivot]] = reduced[[pivot, r]]
        others = np.flatnonzero(reduced[:, c])
        others = others[others != r]
        reduced[others] ^= reduced[r]
        pivots.append(c)
        r += 1
    return reduced, pivots


def is_consistent(matrix: np.ndarray, rhs: np.ndarray) -> bool:
    augmented = np.concatenate([matrix, rhs.reshape(-1, 1)], axis=1).astype(np.uint8)
    _, pivots = row_reduce(augmented)
    return matrix.shape[1] not in pivots


def solve_gf2(matrix: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """Lexicographically smallest solution of ``matrix @ v = rhs`` over GF(2).

    Coordinates are fixed from first to last, each to 0 whenever the system stays
    consistent, so the result is the smallest solution with the first coordinate most significant.

    Returns:
        The solution vector, or ``None`` if the system is inconsistent.
    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.uint8))
    rhs = np.asarray(rhs, dtype=np.uint8).reshape(-1)
    n = matrix.shape[1]
    if not is_consistent(matrix, rhs):
        return None
    solution = np.zeros(n, dtype=np.uint8)
    constraints = matrix
    values = rhs
    for j in range(n):
        pin = np.zeros((1, n), dtype=np.uint8)
        pin[0, j] = 1
        trial = np.concatenate([constraints, pin])
        chosen = 0 if is_consistent(trial, np.concatenate([values, [0]]).astype(np.uint8)) else 1
        constraints = trial
        values = np.concatenate([values, [chosen]]).astype(np.uint8)
        solution[j] = chosen
    return solution
