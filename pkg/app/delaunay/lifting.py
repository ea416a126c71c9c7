import itertools
import logging
from fractions import Fraction

from app.arithmetic.double_description import cone_generators
from app.arithmetic.exceptions import BoxTooSmallError
from app.arithmetic.forms import GramForm, eval_form
from app.arithmetic.linalg import solve
from app.delaunay.star import DelaunayCell, DelaunayStar

logger = logging.getLogger(__name__)


def lifting_oracle(form: GramForm, box_radius: int) -> DelaunayStar:
    """
    Independent construction of the star: lower faces of the convex hull of
    the lifted points (z, Q(z)) over the box |zᵢ| ≤ box_radius that touch the
    lifted origin.

    A lower face through (0, 0) is the graph of a slope a with a·z ≤ Q(z) for
    every box point, so the star cells are the vertices of that slope
    polyhedron, found by double description on its homogenisation.
    """
    n = form.n
    points = [
        z
        for z in itertools.product(range(-box_radius, box_radius + 1), repeat=n)
        if any(z)
    ]
    points.sort(key=lambda z: (eval_form(form, z), z))

    rows = [(0,) * n + (1,)]
    rows += [tuple(-x for x in z) + (eval_form(form, z),) for z in points]
    generators = cone_generators(rows, n + 1)
    if not generators.is_pointed:
        raise BoxTooSmallError(f"Box of radius {box_radius} is too small.")

    doubled = [[2 * x for x in row] for row in form.entries]
    cells = []
    for ray in generators.rays:
        scale = ray.vector[-1]
        if scale == 0:
            raise BoxTooSmallError(
                f"Box of radius {box_radius} leaves the lower hull unbounded."
            )
        touching = [points[i - 1] for i in sorted(ray.tight) if i > 0]
        vertices = tuple(sorted([(0,) * n] + touching))
        if any(abs(x) == box_radius for v in vertices for x in v):
            raise BoxTooSmallError(
                f"Cell {vertices} touches the boundary of the box of radius "
                f"{box_radius}."
            )
        # slope a = 2Qc for the cell's center c
        center = solve(doubled, [Fraction(x, scale) for x in ray.vector[:-1]])
        cells.append(
            DelaunayCell(
                vertices=vertices,
                center=center,
                radius_sq=eval_form(form, center),
            )
        )

    logger.debug("Lifting oracle found %d cells in box %d", len(cells), box_radius)
    return DelaunayStar(cells=tuple(sorted(cells, key=lambda c: c.vertices)))
