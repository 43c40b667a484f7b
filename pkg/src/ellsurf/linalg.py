"""Exact linear algebra over the rationals for intersection-matrix solves.

Matrices are lists of rows of Fractions.  Solves use fraction-free-style
Gaussian elimination with exact rational pivots, so residuals are
identically zero; negative definiteness is decided by the signs of the
leading principal minors (Sylvester), again exactly.
"""

from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ValueError):
    """Raised when a solve meets a singular system."""


def determinant(matrix) -> Fraction:
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] / a[col][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= a[i][i]
    return out


def is_negative_definite(matrix) -> bool:
    """Sylvester criterion: (-1)^k det(leading k x k minor) > 0 for all k."""
    n = len(matrix)
    for k in range(1, n + 1):
        minor = [row[:k] for row in matrix[:k]]
        if (-1) ** k * determinant(minor) <= 0:
            return False
    return True


def solve(matrix, rhs) -> list:
    """Unique exact solution of matrix * x = rhs."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("singular intersection matrix")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
