import logging
from dataclasses import dataclass
from functools import cached_property

from app.arithmetic.exceptions import PosetInvariantError
from app.arithmetic.linalg import Vector, rank
from app.arithmetic.rationals import format_rational
from app.voronoi.polytope import HPolytope, vertex_incidences

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    dim: int
    vertex_set: tuple[int, ...]
    active_inequalities: tuple[int, ...]


@dataclass(frozen=True)
class FacePoset:
    """
    Faces of the Voronoi polytope, graded by dimension, each identified by
    the set of polytope vertices it contains. The polytope itself is the
    single face of dimension n.
    """

    polytope: HPolytope
    vertices: tuple[Vector, ...]
    faces: tuple[Face, ...]
    incidence: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.polytope.form.n

    def face_ids(self, dim: int) -> list[int]:
        return [i for i, face in enumerate(self.faces) if face.dim == dim]

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.face_ids(d)) for d in range(self.n))

    def as_dict(self) -> dict:
        return {
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
            "faces": {
                str(d): [list(self.faces[i].vertex_set) for i in self.face_ids(d)]
                for d in range(self.n + 1)
            },
            "fVector": list(self.f_vector),
        }


def _affine_dim(vertices: tuple[Vector, ...], members: frozenset[int]) -> int:
    ordered = sorted(members)
    first = vertices[ordered[0]]
    return rank(
        [[x - y for x, y in zip(vertices[i], first)] for i in ordered[1:]]
    )


def build_face_poset(polytope: HPolytope) -> FacePoset:
    """
    Closes the facet vertex sets under intersection. Every nonempty
    intersection of facets is a face, so this yields all proper faces.
    """
    n = polytope.form.n
    incidences = vertex_incidences(polytope)
    vertices = tuple(vertex for vertex, _ in incidences)

    facet_sets = [
        frozenset(i for i, (_, active) in enumerate(incidences) if j in active)
        for j in range(len(polytope.inequalities))
    ]
    found = set(facet_sets)
    frontier = list(found)
    while frontier:
        face = frontier.pop()
        for facet in facet_sets:
            meet = face & facet
            if meet and meet not in found:
                found.add(meet)
                frontier.append(meet)
    found.add(frozenset(range(len(vertices))))

    graded = sorted(
        ((_affine_dim(vertices, members), tuple(sorted(members))) for members in found)
    )
    faces = tuple(
        Face(
            dim=dim,
            vertex_set=members,
            active_inequalities=tuple(
                j
                for j, facet in enumerate(facet_sets)
                if facet.issuperset(members) and dim < n
            ),
        )
        for dim, members in graded
    )

    incidence = []
    for lower, face in enumerate(faces):
        for upper, other in enumerate(faces):
            if other.dim == face.dim + 1 and set(face.vertex_set) <= set(
                other.vertex_set
            ):
                incidence.append((lower, upper))

    poset = FacePoset(
        polytope=polytope,
        vertices=vertices,
        faces=faces,
        incidence=tuple(incidence),
    )
    _check_poset(poset)
    logger.debug("Face poset with f-vector %s", poset.f_vector)
    return poset


def _check_poset(poset: FacePoset):
    n = poset.n
    f = poset.f_vector
    if sum((-1) ** d * count for d, count in enumerate(f)) != 1 - (-1) ** n:
        raise PosetInvariantError(f"f-vector {f} violates the Euler relation.")

    for i in poset.face_ids(1):
        if len(poset.faces[i].vertex_set) != 2:
            raise PosetInvariantError(
                f"Edge {poset.faces[i].vertex_set} does not have 2 vertices."
            )

    negated = {tuple(-x for x in v) for v in poset.vertices}
    if negated != set(poset.vertices):
        raise PosetInvariantError("Vertex set is not centrally symmetric.")

    for i in poset.face_ids(n - 1):
        facet = [poset.vertices[j] for j in poset.faces[i].vertex_set]
        centroid = [sum(coords) / len(facet) for coords in zip(*facet)]
        reflected = {tuple(2 * c - x for c, x in zip(centroid, v)) for v in facet}
        if reflected != set(facet):
            raise PosetInvariantError(
                f"Facet {poset.faces[i].vertex_set} is not centrally symmetric."
            )
