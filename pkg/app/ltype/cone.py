"""
The closure of the L-type domain of a form, as a polyhedral cone in the
space of symmetric matrices, coordinatised by the upper triangle.

A margin u² − Σ zᵢvᵢ² of a lattice point u over a cell frame v₁..vₙ is
linear in the form: it is Σᵢⱼ Cᵢⱼ·Q̃ᵢⱼ for C = uuᵀ − Σ zᵢvᵢvᵢᵀ. Co-spherical
vertices give equalities, the apex of each neighbouring cell gives an
inequality.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from app.arithmetic.double_description import cone_generators
from app.arithmetic.exceptions import PreconditionError, StarInvariantError
from app.arithmetic.forms import GramForm, IntVector, basis_coordinates
from app.arithmetic.linalg import Matrix, nullspace, outer, rank, to_matrix
from app.arithmetic.rationals import format_rational, normalize_sign, primitive
from app.delaunay.star import DelaunayStar, independent_offsets
from app.laminae.extension import Rank1Form

logger = logging.getLogger(__name__)


def triangle_indices(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def _from_coordinates(n: int, coordinates: Sequence) -> Matrix:
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), x in zip(triangle_indices(n), coordinates):
        matrix[i][j] = matrix[j][i] = Fraction(x)
    return to_matrix(matrix)


@dataclass(frozen=True)
class FormFunctional:
    """
    The linear functional Q̃ ↦ Σᵢⱼ Cᵢⱼ·Q̃ᵢⱼ on symmetric matrices
    """

    coefficients: Matrix

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def evaluate(self, matrix: Sequence[Sequence]) -> Fraction:
        return sum(
            (
                c * q
                for row, q_row in zip(self.coefficients, matrix)
                for c, q in zip(row, q_row)
            ),
            Fraction(0),
        )

    def coordinates(self) -> tuple[Fraction, ...]:
        """
        Coefficients against the upper-triangular entries (off-diagonal
        entries appear twice in the full sum)
        """
        return tuple(
            self.coefficients[i][j] * (1 if i == j else 2)
            for i, j in triangle_indices(self.n)
        )

    def as_rows(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.coefficients]


def _canonical(coefficients: Matrix, signed: bool) -> FormFunctional:
    n = len(coefficients)
    scaled = primitive(x for row in coefficients for x in row)
    if not signed:
        scaled = normalize_sign(scaled)
    return FormFunctional(
        coefficients=to_matrix(
            scaled[i * n : (i + 1) * n] for i in range(n)
        )
    )


def margin_functional(
    frame: Sequence[IntVector], u: Sequence[int]
) -> Matrix:
    """
    C = uuᵀ − Σ zᵢvᵢvᵢᵀ for u = Σ zᵢvᵢ in the frame v₁..vₙ based at 0
    """
    z = basis_coordinates(frame, u)
    coefficients = [list(row) for row in outer(u, u)]
    for zi, v in zip(z, frame):
        for i, row in enumerate(outer(v, v)):
            for j, x in enumerate(row):
                coefficients[i][j] -= zi * x
    return to_matrix(coefficients)


@dataclass(frozen=True)
class ExtremeRay:
    generator: tuple[tuple[int, ...], ...]

    @cached_property
    def classification(self) -> "RayClassification":
        return classify_ray(self)

    @property
    def rank(self) -> int:
        return self.classification.rank

    @property
    def k(self) -> IntVector | None:
        return self.classification.k

    def as_dict(self) -> dict:
        return {
            "generator": [list(row) for row in self.generator],
            "rank": self.rank,
            "k": list(self.k) if self.k is not None else None,
        }


@dataclass(frozen=True)
class RayClassification:
    rank: int
    k: IntVector | None = None


def classify_ray(ray: ExtremeRay) -> RayClassification:
    """
    Rank of the generator; a rank 1 generator is c·kkᵀ and also reports the
    primitive k (sign normalised)
    """
    matrix_rank = rank(ray.generator)
    if matrix_rank != 1:
        return RayClassification(rank=matrix_rank)
    row = next(row for row in ray.generator if any(row))
    return RayClassification(rank=1, k=normalize_sign(primitive(row)))


@dataclass(frozen=True)
class SecondaryCone:
    n: int
    equalities: tuple[FormFunctional, ...]
    inequalities: tuple[FormFunctional, ...]

    @property
    def ambient_dim(self) -> int:
        return self.n * (self.n + 1) // 2

    @cached_property
    def dimension(self) -> int:
        return self.ambient_dim - rank([f.coordinates() for f in self.equalities])

    @property
    def is_general(self) -> bool:
        return self.dimension == self.ambient_dim

    @cached_property
    def rays(self) -> tuple[ExtremeRay, ...]:
        return tuple(extreme_rays(self))

    def contains(self, matrix: Sequence[Sequence]) -> bool:
        return all(f.evaluate(matrix) == 0 for f in self.equalities) and all(
            f.evaluate(matrix) >= 0 for f in self.inequalities
        )

    def as_dict(self) -> dict:
        return {
            "ambientDim": self.ambient_dim,
            "dimension": self.dimension,
            "general": self.is_general,
            "equalities": [f.as_rows() for f in self.equalities],
            "inequalities": [f.as_rows() for f in self.inequalities],
            "rays": [ray.as_dict() for ray in self.rays],
            "dicing": is_dicing(self),
        }


def cone_of_ltype(form: GramForm, star: DelaunayStar) -> SecondaryCone:
    n = form.n
    origin = (0,) * n
    equalities: set[FormFunctional] = set()
    inequalities: set[FormFunctional] = set()

    for cell in star.cells:
        frame = independent_offsets(origin, [v for v in cell.vertices if any(v)])
        for v in cell.vertices:
            if any(v) and v not in frame:
                equalities.add(_canonical(margin_functional(frame, v), signed=False))

        for facet in cell.facets:
            if not facet.through_origin:
                continue
            neighbour = next(
                other
                for index in star.cells_containing(facet.vertices)
                if (other := star.cells[index]) is not cell
            )
            apex = min(v for v in neighbour.vertices if v not in facet.vertices)
            inequalities.add(
                _canonical(margin_functional(frame, apex), signed=True)
            )

    for functional in equalities:
        if functional.evaluate(form.entries) != 0:
            raise StarInvariantError("Form violates its own co-sphericity equality.")
    for functional in inequalities:
        if functional.evaluate(form.entries) <= 0:
            raise StarInvariantError("Form is not interior to its L-type domain.")

    cone = SecondaryCone(
        n=n,
        equalities=tuple(sorted(equalities, key=lambda f: f.coefficients)),
        inequalities=tuple(sorted(inequalities, key=lambda f: f.coefficients)),
    )
    logger.debug(
        "L-type cone: %d equalities, %d inequalities, dimension %d",
        len(cone.equalities),
        len(cone.inequalities),
        cone.dimension,
    )
    return cone


def extreme_rays(cone: SecondaryCone) -> list[ExtremeRay]:
    """
    Double description in coordinates of the equality subspace; each ray is
    mapped back to a symmetric matrix with coprime integer entries
    """
    basis = nullspace(
        [f.coordinates() for f in cone.equalities], cone.ambient_dim
    )
    if not basis:
        return []

    rows = [
        tuple(
            sum((h * b for h, b in zip(f.coordinates(), vector)), Fraction(0))
            for vector in basis
        )
        for f in cone.inequalities
    ]
    generators = cone_generators(rows, len(basis))
    if not generators.is_pointed:
        raise PreconditionError("L-type cone contains a line.")

    rays = []
    for ray in generators.rays:
        coordinates = [
            sum((y * vector[i] for y, vector in zip(ray.vector, basis)), Fraction(0))
            for i in range(cone.ambient_dim)
        ]
        matrix = _from_coordinates(cone.n, coordinates)
        scaled = primitive(x for row in matrix for x in row)
        rays.append(
            ExtremeRay(
                generator=tuple(
                    scaled[i * cone.n : (i + 1) * cone.n] for i in range(cone.n)
                )
            )
        )
    return sorted(rays, key=lambda ray: ray.generator)


def is_dicing(cone: SecondaryCone) -> bool:
    return all(ray.rank == 1 for ray in cone.rays)


def ray_membership(cone: SecondaryCone, form: Rank1Form) -> bool:
    """
    Whether the rank 1 form is a positive multiple of an extreme ray
    """
    flat = [x for row in form.matrix for x in row]
    if not any(flat):
        return False
    target = primitive(flat)
    return any(
        tuple(x for row in ray.generator for x in row) == target
        for ray in cone.rays
    )
