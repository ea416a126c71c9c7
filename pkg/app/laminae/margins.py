"""
Empty-sphere margins as functions of the extension parameter.

Every cell is re-based at its lexicographically least vertex of minimal
k-value, with n independent vertex offsets vᵢ as a frame. A lattice point u
with u − base = Σ zᵢvᵢ has margin

    Δ(λ) = Δ(0) + λ·α²·(k(u − base)² − Σ zᵢ·k(vᵢ)²)

under Q + λα²kkᵀ. The margin is zero exactly when u lies on the sphere
through the frame.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from app.arithmetic.forms import GramForm, IntVector, sphere_excess
from app.arithmetic.linalg import Matrix, Vector, inverse, mat_vec, transpose
from app.arithmetic.rationals import format_rational
from app.delaunay.enumeration import enumerate_in_ellipsoid
from app.delaunay.star import DelaunayCell, DelaunayStar, independent_offsets
from app.laminae.extension import alpha_squared

DEFAULT_MARGIN_SCALE = 2
WITNESS_MULTIPLES = (1, 2)


def _k(k: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(k, v))


@dataclass(frozen=True)
class CellFrame:
    base: IntVector
    offsets: tuple[IntVector, ...]
    to_frame: Matrix

    def coordinates(self, u: Sequence[int]) -> Vector:
        return mat_vec(self.to_frame, [x - y for x, y in zip(u, self.base)])


def cell_frame(cell: DelaunayCell, k: Sequence[int]) -> CellFrame:
    low = min(_k(k, v) for v in cell.vertices)
    base = min(v for v in cell.vertices if _k(k, v) == low)
    offsets = independent_offsets(base, [v for v in cell.vertices if v != base])
    return CellFrame(
        base=base, offsets=offsets, to_frame=inverse(transpose(offsets))
    )


@dataclass(frozen=True)
class MarginLine:
    base: Fraction
    slope: Fraction
    cell_id: int
    witness: IntVector

    def at(self, lam: Fraction) -> Fraction:
        return self.base + lam * self.slope

    @property
    def root(self) -> Fraction | None:
        if self.slope == 0:
            return None
        return -self.base / self.slope

    def as_dict(self) -> dict:
        return {
            "cell": self.cell_id,
            "witness": list(self.witness),
            "base": format_rational(self.base),
            "slope": format_rational(self.slope),
        }


def _line(
    frame: CellFrame,
    k: Sequence[int],
    alpha_sq: Fraction,
    u: IntVector,
    base_margin: Fraction,
    cell_id: int,
) -> MarginLine:
    z = frame.coordinates(u)
    k_u = _k(k, u) - _k(k, frame.base)
    spread = sum(
        (zi * _k(k, v) ** 2 for zi, v in zip(z, frame.offsets)), Fraction(0)
    )
    return MarginLine(
        base=base_margin,
        slope=alpha_sq * (k_u**2 - spread),
        cell_id=cell_id,
        witness=u,
    )


def margin_line(
    form: GramForm,
    cell: DelaunayCell,
    k: Sequence[int],
    u: IntVector,
    cell_id: int = 0,
) -> MarginLine:
    return _line(
        cell_frame(cell, k),
        k,
        alpha_squared(form, k),
        u,
        sphere_excess(form, cell.center, cell.radius_sq, u),
        cell_id,
    )


@lru_cache(maxsize=4096)
def cell_neighbourhood(
    form: GramForm, cell: DelaunayCell, scale: int
) -> tuple[tuple[IntVector, Fraction], ...]:
    """
    Lattice points in the cell's sphere enlarged `scale` times, with their
    margins at λ = 0
    """
    points = enumerate_in_ellipsoid(form, cell.center, scale**2 * cell.radius_sq)
    return tuple(
        (u, sphere_excess(form, cell.center, cell.radius_sq, u)) for u in points
    )


def witness_points(cell: DelaunayCell, k: Sequence[int]) -> set[IntVector]:
    """
    Points o + q(k₁w₂ − k₂w₁) for a vertex o and offsets w₁, w₂ to vertices
    strictly above and below o, i.e. k₁ = k·w₁ > 0 > k₂ = k·w₂. They sit on
    the hyperplane through o parallel to k·x = 0.
    """
    witnesses = set()
    for o in cell.vertices:
        level = _k(k, o)
        above = [v for v in cell.vertices if _k(k, v) > level]
        below = [v for v in cell.vertices if _k(k, v) < level]
        for a in above:
            for b in below:
                w1 = [x - y for x, y in zip(a, o)]
                w2 = [x - y for x, y in zip(b, o)]
                k1, k2 = _k(k, w1), _k(k, w2)
                for q in WITNESS_MULTIPLES:
                    witnesses.add(
                        tuple(
                            p + q * (k1 * y - k2 * x)
                            for p, x, y in zip(o, w1, w2)
                        )
                    )
    return witnesses


def vertex_lines(
    form: GramForm, star: DelaunayStar, k: Sequence[int]
) -> list[MarginLine]:
    alpha_sq = alpha_squared(form, k)
    lines = []
    for cell_id, cell in enumerate(star.cells):
        frame = cell_frame(cell, k)
        lines.extend(
            _line(frame, k, alpha_sq, v, Fraction(0), cell_id)
            for v in cell.vertices
        )
    return lines


def margin_lines(
    form: GramForm,
    star: DelaunayStar,
    k: Sequence[int],
    scale: int = DEFAULT_MARGIN_SCALE,
    witnesses: bool = False,
) -> list[MarginLine]:
    alpha_sq = alpha_squared(form, k)
    lines = []
    for cell_id, cell in enumerate(star.cells):
        frame = cell_frame(cell, k)
        points = dict(cell_neighbourhood(form, cell, scale))
        if witnesses:
            for u in witness_points(cell, k) - set(points):
                points[u] = sphere_excess(form, cell.center, cell.radius_sq, u)
        lines.extend(
            _line(frame, k, alpha_sq, u, delta, cell_id)
            for u, delta in sorted(points.items())
        )
    return lines
