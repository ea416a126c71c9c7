"""
Delaunay cells around the origin, built from the vertices of the Voronoi
polytope (each Voronoi vertex is the center of one empty sphere through 0).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from app.arithmetic.double_description import cone_generators
from app.arithmetic.exceptions import (
    EmptinessViolationError,
    StarInvariantError,
)
from app.arithmetic.forms import (
    GramForm,
    IntVector,
    circumcenter,
    eval_form,
    sphere_excess,
)
from app.arithmetic.linalg import Vector, rank, to_vector
from app.arithmetic.rationals import format_rational
from app.delaunay.enumeration import enumerate_in_ellipsoid
from app.voronoi.polytope import enumerate_vertices, voronoi_polytope

logger = logging.getLogger(__name__)


def affine_rank(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    first = points[0]
    return rank([[x - y for x, y in zip(p, first)] for p in points[1:]])


def independent_offsets(
    base: Sequence[int], points: Sequence[IntVector]
) -> tuple[IntVector, ...]:
    """
    Greedily picks offsets p − base, in the given order, that are linearly
    independent
    """
    chosen: list[IntVector] = []
    for p in points:
        offset = tuple(x - y for x, y in zip(p, base))
        if rank(chosen + [offset]) > len(chosen):
            chosen.append(offset)
        if len(chosen) == len(base):
            break
    return tuple(chosen)


@dataclass(frozen=True)
class CellFacet:
    """
    Facet {x : normal·x = offset} of a cell, which lies in normal·x ≤ offset
    """

    normal: IntVector
    offset: int
    vertices: tuple[IntVector, ...]

    @property
    def through_origin(self) -> bool:
        return self.offset == 0


@dataclass(frozen=True)
class DelaunayCell:
    vertices: tuple[IntVector, ...]
    center: Vector
    radius_sq: Fraction

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.n + 1

    @cached_property
    def facets(self) -> tuple[CellFacet, ...]:
        """
        Facets of the convex hull of the vertices: the extreme rays (a, b) of
        {b − a·p ≥ 0 for every vertex p}, minus the trivial ray a = 0
        """
        rows = [tuple(-x for x in p) + (1,) for p in self.vertices]
        generators = cone_generators(rows, self.n + 1)
        facets = []
        for ray in generators.rays:
            normal, offset = ray.vector[:-1], ray.vector[-1]
            if not any(normal):
                continue
            vertices = tuple(self.vertices[i] for i in sorted(ray.tight))
            facets.append(CellFacet(normal=normal, offset=offset, vertices=vertices))
        return tuple(facets)

    def as_dict(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "center": [format_rational(x) for x in self.center],
            "radiusSq": format_rational(self.radius_sq),
        }


@dataclass(frozen=True)
class LTypeFingerprint:
    encoding: str

    def __str__(self):
        return self.encoding


@dataclass(frozen=True)
class DelaunayStar:
    cells: tuple[DelaunayCell, ...]

    @property
    def n(self) -> int:
        return self.cells[0].n

    @cached_property
    def fingerprint(self) -> LTypeFingerprint:
        return fingerprint(self)

    def cells_containing(self, points: Sequence[IntVector]) -> list[int]:
        wanted = set(points)
        return [
            index
            for index, cell in enumerate(self.cells)
            if wanted.issubset(cell.vertices)
        ]


def fingerprint(star: DelaunayStar) -> LTypeFingerprint:
    """
    Canonical text of the star: cells sorted by their sorted vertex lists
    """
    cells = sorted(tuple(sorted(cell.vertices)) for cell in star.cells)
    encoding = ";".join(
        " ".join(",".join(str(x) for x in v) for v in cell) for cell in cells
    )
    return LTypeFingerprint(encoding=encoding)


def star_cell_at(form: GramForm, w: Sequence) -> DelaunayCell:
    """
    The Delaunay cell whose empty sphere is centered at the Voronoi vertex w
    and passes through 0
    """
    center = to_vector(w)
    radius_sq = eval_form(form, center)
    points = enumerate_in_ellipsoid(form, center, radius_sq)

    inside = [
        z for z in points if sphere_excess(form, center, radius_sq, z) < 0
    ]
    if inside:
        raise EmptinessViolationError(
            f"Lattice point {inside[0]} lies strictly inside the sphere around "
            f"{[format_rational(x) for x in center]}; not a Voronoi vertex."
        )

    vertices = tuple(sorted(points))
    if len(vertices) < form.n + 1 or affine_rank(vertices) < form.n:
        raise StarInvariantError(
            f"Sphere around {[format_rational(x) for x in center]} carries a "
            f"degenerate vertex set {vertices}."
        )
    return DelaunayCell(vertices=vertices, center=center, radius_sq=radius_sq)


def verify_star(form: GramForm, star: DelaunayStar):
    """
    Checks the star invariants: 0 is a vertex of every cell, each cell's
    center is recovered as the circumcenter of its vertices, and every facet
    through 0 is shared by exactly two cells
    """
    origin = (0,) * form.n
    for cell in star.cells:
        if origin not in cell.vertices:
            raise StarInvariantError(f"Cell {cell.vertices} misses the origin.")

        frame = independent_offsets(origin, cell.vertices)
        center, radius_sq = circumcenter(form, frame)
        if center != cell.center or radius_sq != cell.radius_sq:
            raise StarInvariantError(
                f"Cell {cell.vertices} is not centered on its Voronoi vertex."
            )

        for facet in cell.facets:
            if not facet.through_origin:
                continue
            owners = star.cells_containing(facet.vertices)
            if len(owners) != 2:
                raise StarInvariantError(
                    f"Facet {facet.vertices} through 0 lies in {len(owners)} "
                    "star cells, expected 2."
                )


@lru_cache(maxsize=128)
def delaunay_star(form: GramForm, verify: bool = True) -> DelaunayStar:
    """
    One cell per vertex of the Voronoi polytope, sorted by vertex list
    """
    vertices = enumerate_vertices(voronoi_polytope(form))
    cells = tuple(
        sorted(
            (star_cell_at(form, w) for w in vertices),
            key=lambda cell: cell.vertices,
        )
    )
    if len({cell.vertices for cell in cells}) != len(vertices):
        raise StarInvariantError(
            "Distinct Voronoi vertices produced the same Delaunay cell."
        )

    star = DelaunayStar(cells=cells)
    if verify:
        verify_star(form, star)
    logger.debug("Delaunay star with %d cells for %s", len(cells), form)
    return star
