import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from app.arithmetic.double_description import cone_generators
from app.arithmetic.exceptions import PosetInvariantError, UnboundedPolytopeError
from app.arithmetic.forms import GramForm, IntVector, eval_form
from app.arithmetic.linalg import Vector, mat_vec, rank
from app.arithmetic.rationals import format_rational
from app.delaunay.cosets import relevant_vectors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Halfspace:
    """
    2·xᵀQv ≤ Q(v) for the relevant vector v
    """

    normal: IntVector
    rhs: Fraction

    def as_dict(self) -> dict:
        return {"normal": list(self.normal), "rhs": format_rational(self.rhs)}


@dataclass(frozen=True)
class HPolytope:
    form: GramForm
    inequalities: tuple[Halfspace, ...]

    def functional(self, index: int) -> Vector:
        return tuple(
            2 * x for x in mat_vec(self.form.entries, self.inequalities[index].normal)
        )


def voronoi_polytope(form: GramForm) -> HPolytope:
    normals = relevant_vectors(form)
    if set(normals) != {tuple(-x for x in v) for v in normals}:
        raise PosetInvariantError("Relevant vectors are not centrally symmetric.")
    return HPolytope(
        form=form,
        inequalities=tuple(
            Halfspace(normal=v, rhs=eval_form(form, v)) for v in normals
        ),
    )


@lru_cache(maxsize=128)
def vertex_incidences(
    polytope: HPolytope,
) -> tuple[tuple[Vector, frozenset[int]], ...]:
    """
    Vertices of the polytope with the indices of their active inequalities,
    by double description on the homogenised cone
    {(x, t) : Q(v)·t − 2xᵀQv ≥ 0, t ≥ 0}
    """
    n = polytope.form.n
    rows = [(0,) * n + (1,)]
    for index, halfspace in enumerate(polytope.inequalities):
        rows.append(
            tuple(-x for x in polytope.functional(index)) + (halfspace.rhs,)
        )

    generators = cone_generators(rows, n + 1)
    if not generators.is_pointed or any(
        ray.vector[-1] == 0 for ray in generators.rays
    ):
        raise UnboundedPolytopeError(
            "Voronoi polytope is unbounded; the relevant vector set is incomplete."
        )

    incidences = []
    for ray in generators.rays:
        scale = ray.vector[-1]
        vertex = tuple(Fraction(x, scale) for x in ray.vector[:-1])
        active = frozenset(i - 1 for i in ray.tight if i > 0)
        if rank([polytope.inequalities[i].normal for i in active]) != n:
            raise PosetInvariantError(
                f"Vertex {vertex} does not lie on {n} independent facets."
            )
        incidences.append((vertex, active))
    incidences.sort(key=lambda item: item[0])

    for index in range(len(polytope.inequalities)):
        on_facet = [v for v, active in incidences if index in active]
        if len(on_facet) < n or (
            rank([[x - y for x, y in zip(v, on_facet[0])] for v in on_facet[1:]])
            != n - 1
        ):
            raise PosetInvariantError(
                f"Inequality {index} does not support a facet."
            )

    logger.debug(
        "Voronoi polytope: %d facets, %d vertices",
        len(polytope.inequalities),
        len(incidences),
    )
    return tuple(incidences)


def enumerate_vertices(polytope: HPolytope) -> list[Vector]:
    return [vertex for vertex, _ in vertex_incidences(polytope)]
