import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from app.arithmetic.forms import GramForm, IntVector, eval_form
from app.arithmetic.rationals import normalize_sign
from app.delaunay.enumeration import enumerate_in_ellipsoid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetRecord:
    """
    Minimum-norm vectors of one nonzero class of L/2L, one per ± pair
    """

    representative: IntVector
    min_norm: Fraction
    min_vectors: tuple[IntVector, ...]

    @property
    def simple(self) -> bool:
        return len(self.min_vectors) == 1


def coset_minima(form: GramForm) -> list[CosetRecord]:
    """
    Exhaustive search for the minimal vectors of every coset of 2L in L.
    The search radius starts at twice the largest diagonal entry and
    doubles until every coset has a member of norm at most half the radius.
    """
    n = form.n
    classes = [c for c in itertools.product((0, 1), repeat=n) if any(c)]
    radius = 2 * max(form.entries[i][i] for i in range(n))
    origin = (0,) * n

    while True:
        best: dict[IntVector, tuple[Fraction, set[IntVector]]] = {}
        for z in enumerate_in_ellipsoid(form, origin, radius):
            if not any(z):
                continue
            key = tuple(x % 2 for x in z)
            norm = eval_form(form, z)
            current = best.get(key)
            if current is None or norm < current[0]:
                best[key] = (norm, {normalize_sign(z)})
            elif norm == current[0]:
                current[1].add(normalize_sign(z))

        if all(c in best and best[c][0] <= radius / 2 for c in classes):
            break
        radius *= 2
        logger.debug("Coset search radius raised to %s", radius)

    return [
        CosetRecord(
            representative=c,
            min_norm=best[c][0],
            min_vectors=tuple(sorted(best[c][1])),
        )
        for c in sorted(classes)
    ]


def relevant_vectors(form: GramForm) -> list[IntVector]:
    """
    Minimal vectors (both signs) of the simple cosets; these are the facet
    normals of the Voronoi polytope
    """
    vectors = []
    for record in coset_minima(form):
        if record.simple:
            v = record.min_vectors[0]
            vectors.extend([v, tuple(-x for x in v)])
    return sorted(vectors)
