from dataclasses import dataclass, replace

from app.arithmetic.forms import GramForm, IntVector
from app.arithmetic.linalg import mat_vec
from app.arithmetic.rationals import canonical_direction
from app.voronoi.poset import FacePoset


@dataclass(frozen=True)
class Zone:
    """
    A class of mutually parallel edges of the Voronoi polytope.
    `closed` is None until the zone has been classified.
    """

    direction: IntVector
    edge_ids: tuple[int, ...]
    closed: bool | None = None

    def as_dict(self) -> dict:
        return {
            "direction": list(self.direction),
            "edges": list(self.edge_ids),
            "closed": self.closed,
        }


def edge_direction(poset: FacePoset, edge_id: int) -> IntVector:
    a, b = poset.faces[edge_id].vertex_set
    start, end = poset.vertices[a], poset.vertices[b]
    return canonical_direction(y - x for x, y in zip(start, end))


def zones(poset: FacePoset) -> list[Zone]:
    groups: dict[IntVector, list[int]] = {}
    for edge_id in poset.face_ids(1):
        groups.setdefault(edge_direction(poset, edge_id), []).append(edge_id)
    return [
        Zone(direction=direction, edge_ids=tuple(edge_ids))
        for direction, edge_ids in sorted(groups.items())
    ]


def classify_zone(poset: FacePoset, zone: Zone) -> bool:
    """
    A zone is closed when every 2-face holds either two of its edges or none
    """
    edges = [set(poset.faces[i].vertex_set) for i in zone.edge_ids]
    for face_id in poset.face_ids(2):
        members = set(poset.faces[face_id].vertex_set)
        if sum(edge <= members for edge in edges) not in (0, 2):
            return False
    return True


def classified_zones(poset: FacePoset) -> list[Zone]:
    return [
        replace(zone, closed=classify_zone(poset, zone)) for zone in zones(poset)
    ]


def zone_functional(form: GramForm, zone: Zone) -> IntVector:
    """
    The primitive k parallel to Q·d for the zone direction d
    """
    return canonical_direction(mat_vec(form.entries, zone.direction))
