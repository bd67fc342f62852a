"""Dense exact linear algebra over the rationals.

Small-scale Gaussian elimination on lists of `Fraction` rows. Graph
configurations in this package have a handful of vertices, so clarity
beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]


def _rows(matrix: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in matrix]


def mat_vec(matrix: Matrix, vec: Sequence[Fraction | int]) -> list[Fraction]:
    return [sum((Fraction(a) * Fraction(x) for a, x in zip(row, vec)), Fraction(0))
            for row in matrix]


def determinant(matrix: Matrix) -> Fraction:
    """Determinant by fraction elimination with partial pivoting."""
    rows = _rows(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant requires a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] == 0:
                continue
            factor = rows[r][col] * inv
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
    return det


def leading_principal_minors(matrix: Matrix) -> list[Fraction]:
    """Determinants of the k x k upper-left submatrices, k = 1..n."""
    n = len(matrix)
    return [determinant([row[: k + 1] for row in list(matrix)[: k + 1]])
            for k in range(n)]


def is_positive_definite(matrix: Matrix) -> bool:
    """Sylvester criterion: all leading principal minors positive.

    One fraction-free (Bareiss) elimination pass; the pivot produced at
    step k is exactly the k-th leading principal minor, so a pivot <= 0
    ends the check early. On integer input all divisions are exact
    integer divisions.
    """
    n = len(matrix)
    rows = [list(row) for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("definiteness requires a square matrix")
    integral = all(isinstance(x, int) for row in rows for x in row)
    if not integral:
        rows = [[Fraction(x) for x in row] for row in rows]
    prev = 1
    for k in range(n):
        pivot = rows[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = num // prev if integral else num / prev
        prev = pivot
    return True


def solve(matrix: Matrix, rhs: Sequence[Fraction | int]) -> list[Fraction]:
    """Solve the square system matrix * x = rhs exactly.

    Raises ArithmeticError if the matrix is singular.
    """
    rows = _rows(matrix)
    n = len(rows)
    if len(rhs) != n or any(len(row) != n for row in rows):
        raise ValueError("solve requires a square system")
    b = [Fraction(x) for x in rhs]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular matrix")
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] == 0:
                continue
            factor = rows[r][col] * inv
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
            b[r] -= factor * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = b[r] - sum((rows[r][c] * x[c] for c in range(r + 1, n)), Fraction(0))
        x[r] = acc / rows[r][r]
    return x


def rank(matrix: Matrix) -> int:
    """Rank over the rationals."""
    rows = _rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = 1 / rows[rk][col]
        for r in range(rk + 1, len(rows)):
            if rows[r][col] == 0:
                continue
            factor = rows[r][col] * inv
            for c in range(col, ncols):
                rows[r][c] -= factor * rows[rk][c]
        rk += 1
        if rk == len(rows):
            break
    return rk
