import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from app.arithmetic.forms import GramForm, IntVector
from app.arithmetic.linalg import to_vector


@lru_cache(maxsize=256)
def square_completion(
    form: GramForm,
) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]]:
    """
    Rational decomposition Q(y) = Σᵢ dᵢ (yᵢ + Σ_{j>i} μᵢⱼ yⱼ)², obtained by
    completing squares (an LDLᵀ factorisation without square roots)
    """
    n = form.n
    a = [list(row) for row in form.entries]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for m in range(i + 1, n):
                a[j][m] -= d[i] * mu[i][j] * mu[i][m]
    return tuple(d), tuple(tuple(row) for row in mu)


def enumerate_in_ellipsoid(
    form: GramForm, center: Sequence, radius_sq: Fraction | int
) -> list[IntVector]:
    """
    Every lattice point z with Q(z − c) ≤ r², found by Fincke-Pohst style
    coordinate bounds. Bounds are widened by one and every candidate is
    tested exactly, so no point is lost to rounding.
    """
    radius_sq = Fraction(radius_sq)
    if radius_sq < 0:
        raise ValueError("Squared radius must be non-negative.")

    n = form.n
    c = to_vector(center)
    d, mu = square_completion(form)
    z = [0] * n
    points: list[IntVector] = []

    def search(i: int, budget: Fraction):
        shift = sum((mu[i][j] * (z[j] - c[j]) for j in range(i + 1, n)), Fraction(0))
        target = c[i] - shift
        reach = math.isqrt(math.floor(budget / d[i])) + 1
        for zi in range(math.floor(target) - reach, math.ceil(target) + reach + 1):
            used = d[i] * (zi - target) ** 2
            if used > budget:
                continue
            z[i] = zi
            if i == 0:
                points.append(tuple(z))
            else:
                search(i - 1, budget - used)
        z[i] = 0

    search(n - 1, radius_sq)
    return sorted(points)
