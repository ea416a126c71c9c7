"""
Exact linear algebra over the rationals.

Matrices are tuples of row tuples of Fractions. Elimination is done on
integer-scaled rows with Bareiss' fraction-free scheme, so intermediate
entries stay integral and singularity is detected exactly.
"""

import math
from fractions import Fraction
from typing import Iterable, Sequence

from app.arithmetic.exceptions import (
    DimensionMismatchError,
    SingularSystemError,
)

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def to_vector(values: Iterable[Fraction | int]) -> Vector:
    return tuple(Fraction(x) for x in values)


def to_matrix(rows: Iterable[Iterable[Fraction | int]]) -> Matrix:
    return tuple(to_vector(row) for row in rows)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(
            f"Cannot multiply vectors of length {len(u)} and {len(v)}."
        )
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(matrix: Sequence[Sequence], vector: Sequence) -> Vector:
    return tuple(dot(row, vector) for row in matrix)


def transpose(matrix: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in col) for col in zip(*matrix))


def subtract(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(
            f"Cannot subtract vectors of length {len(u)} and {len(v)}."
        )
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def outer(u: Sequence, v: Sequence) -> Matrix:
    return tuple(tuple(Fraction(a) * b for b in v) for a in u)


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    integer_rows = []
    for row in rows:
        fractions = [Fraction(x) for x in row]
        scale = math.lcm(*(f.denominator for f in fractions))
        integer_rows.append([int(f * scale) for f in fractions])
    return integer_rows


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """
    Fraction-free forward elimination with row pivoting.
    Returns the echelon rows and the pivot column of each leading row.
    """
    m = [list(row) for row in rows]
    pivots: list[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, len(m[i])):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // previous
            m[i][c] = 0
        previous = m[r][c]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    _, pivots = _bareiss(_integer_rows(rows), len(rows[0]))
    return len(pivots)


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Vector:
    """
    Solves matrix · x = rhs for a square nonsingular matrix
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise DimensionMismatchError(
            f"Expected a {n}x{n} system, got ragged input."
        )

    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    echelon, pivots = _bareiss(_integer_rows(augmented), n)
    if pivots != list(range(n)):
        raise SingularSystemError("Linear system is singular.")

    solution = [Fraction(0)] * n
    for i in reversed(range(n)):
        row = echelon[i]
        acc = Fraction(row[n]) - sum(
            (row[j] * solution[j] for j in range(i + 1, n)), Fraction(0)
        )
        solution[i] = acc / row[i]
    return tuple(solution)


def inverse(matrix: Sequence[Sequence]) -> Matrix:
    n = len(matrix)
    columns = [
        solve(matrix, [int(i == j) for i in range(n)]) for j in range(n)
    ]
    return transpose(columns)


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatchError("Determinant needs a square matrix.")

    scales = [
        math.lcm(*(Fraction(x).denominator for x in row)) for row in matrix
    ]
    m = _integer_rows(matrix)
    sign = 1
    previous = 1
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // previous
            m[i][k] = 0
        previous = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], math.prod(scales))


def leading_minors(matrix: Sequence[Sequence]) -> list[Fraction]:
    """
    Leading principal minors, read off the pivots of Bareiss elimination
    without row exchanges. Stops after the first vanishing minor.
    """
    n = len(matrix)
    common = math.lcm(*(Fraction(x).denominator for row in matrix for x in row))
    m = [[int(Fraction(x) * common) for x in row] for row in matrix]
    minors = []
    previous = 1
    for k in range(n):
        minors.append(Fraction(m[k][k], common ** (k + 1)))
        if m[k][k] == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // previous
            m[i][k] = 0
        previous = m[k][k]
    return minors


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """
    Basis of {x : rows · x = 0}, one vector per free column
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1

    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for i, c in enumerate(pivots):
            vector[c] = -m[i][free]
        basis.append(tuple(vector))
    return basis
