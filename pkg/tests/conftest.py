"""Shared independent oracles for the test suite.

These deliberately avoid the library's own elimination code: determinants
and ranks are recomputed over Fractions with plain Gaussian elimination, and
small determinants by cofactor expansion, so normal-form bugs cannot hide
behind themselves.
"""
from fractions import Fraction

from mukaitwist import IntMatrix


def rational_det(m: IntMatrix) -> Fraction:
    """Determinant by fraction-based Gaussian elimination."""
    assert m.rows == m.cols
    n = m.rows
    a = [[Fraction(x) for x in m.row(i)] for i in range(n)]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def rational_rank(m: IntMatrix) -> int:
    """Rank by fraction-based row reduction."""
    a = [[Fraction(x) for x in m.row(i)] for i in range(m.rows)]
    rank = 0
    for col in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        for i in range(rank + 1, m.rows):
            f = a[i][col] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def cofactor_det(m: IntMatrix) -> int:
    """Recursive cofactor expansion; fine for dims <= 4."""
    assert m.rows == m.cols
    n = m.rows
    if n == 0:
        return 1
    if n == 1:
        return m[0, 0]
    total = 0
    for j in range(n):
        if m[0, j] == 0:
            continue
        minor = IntMatrix.from_rows(
            [[m[i, t] for t in range(n) if t != j] for i in range(1, n)]
        )
        total += (-1) ** j * m[0, j] * cofactor_det(minor)
    return total


def random_matrix(rng, rows: int, cols: int, bound: int = 9) -> IntMatrix:
    return IntMatrix(rows, cols, [rng.randint(-bound, bound) for _ in range(rows * cols)])
