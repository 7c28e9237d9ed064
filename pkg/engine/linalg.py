"""Exact rational linear algebra on tuples of ``Fraction``."""

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matvec(a: Matrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int], int]:
    """Gauss-Jordan elimination in place on the first ``ncols`` columns.

    Returns the reduced rows, the pivot columns and the number of row swaps.
    """
    pivots = []
    swaps = 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            swaps += 1
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots, swaps


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    rows = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    rows, pivots, _ = _row_reduce(rows, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def solve_in_span(basis: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Coefficients c with sum c_k basis_k == target, or None when target is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return () if all(x == 0 for x in target) else None
    # columns are basis vectors; augment with the target
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(len(target))]
    rows, pivots, _ = _row_reduce(rows, k)
    if len(pivots) != k:
        raise ValueError("basis is linearly dependent")
    for row in rows[k:]:
        if row[k] != 0:
            return None
    return tuple(rows[i][k] for i in range(k))
