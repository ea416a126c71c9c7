"""
Generators of polyhedral cones through cddlib's double description method.

Given constraints h₁..hₘ, computes the extreme rays and lines of the cone
{y : hᵢ·y ≥ 0}. cddlib runs with its exact rational number type;
constraints are scaled to coprime integers on the way in and rays on the
way out, so callers only ever see integer vectors.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import cdd

from app.arithmetic.exceptions import DimensionMismatchError
from app.arithmetic.rationals import normalize_sign, primitive

logger = logging.getLogger(__name__)

NUMBER_TYPE = "fraction"


@dataclass(frozen=True)
class Ray:
    vector: tuple[int, ...]
    tight: frozenset[int]


@dataclass(frozen=True)
class ConeGenerators:
    rays: tuple[Ray, ...]
    lines: tuple[tuple[int, ...], ...]

    @property
    def is_pointed(self) -> bool:
        return not self.lines


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def cone_generators(
    constraints: Sequence[Sequence[Fraction | int]], dim: int
) -> ConeGenerators:
    """
    Generators of {y ∈ Qᵈ : h·y ≥ 0 for every constraint h}.
    Each ray carries the indices of the constraints it satisfies with
    equality.
    """
    rows = []
    for row in constraints:
        if len(row) != dim:
            raise DimensionMismatchError(
                f"Constraint of length {len(row)} in a cone of dimension {dim}."
            )
        rows.append(primitive(row))

    if not any(any(row) for row in rows):
        return ConeGenerators(
            rays=(),
            lines=tuple(
                tuple(int(i == j) for j in range(dim)) for i in range(dim)
            ),
        )

    # cdd reads a row (b, a) as b + a·y ≥ 0
    matrix = cdd.Matrix([[0, *row] for row in rows], number_type=NUMBER_TYPE)
    matrix.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(matrix).get_generators()

    rays, lines = [], []
    for index in range(generators.row_size):
        kind, *vector = generators[index]
        if not any(vector):
            continue
        if index in generators.lin_set:
            lines.append(normalize_sign(primitive(vector)))
        elif kind == 0:
            ray = primitive(vector)
            rays.append(
                Ray(
                    vector=ray,
                    tight=frozenset(
                        i for i, row in enumerate(rows) if _dot(row, ray) == 0
                    ),
                )
            )

    logger.debug(
        "Double description: %d constraints, %d rays, %d lines",
        len(rows),
        len(rays),
        len(lines),
    )
    return ConeGenerators(
        rays=tuple(sorted(rays, key=lambda ray: ray.vector)),
        lines=tuple(sorted(lines)),
    )
