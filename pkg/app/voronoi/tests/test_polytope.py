from fractions import Fraction

from django.test import SimpleTestCase

from app.arithmetic.forms import eval_form, inner_q
from app.arithmetic.linalg import dot
from app.audit.corpus import STANDARD_ENTRIES, standard_form
from app.delaunay.star import delaunay_star
from app.voronoi.polytope import (
    enumerate_vertices,
    vertex_incidences,
    voronoi_polytope,
)

HALF = Fraction(1, 2)


class TestVoronoiPolytope(SimpleTestCase):
    def test_square(self):
        polytope = voronoi_polytope(standard_form("Z2"))
        self.assertEqual(len(polytope.inequalities), 4)
        self.assertEqual(
            enumerate_vertices(polytope),
            [(-HALF, -HALF), (-HALF, HALF), (HALF, -HALF), (HALF, HALF)],
        )

    def test_hexagon(self):
        polytope = voronoi_polytope(standard_form("A2"))
        self.assertEqual(len(polytope.inequalities), 6)
        vertices = enumerate_vertices(polytope)
        self.assertEqual(len(vertices), 6)
        self.assertIn((Fraction(1, 3), Fraction(1, 3)), vertices)

    def test_cube(self):
        polytope = voronoi_polytope(standard_form("Z3"))
        self.assertEqual(len(polytope.inequalities), 6)
        self.assertEqual(len(enumerate_vertices(polytope)), 8)

    def test_vertices_are_feasible_and_tight(self):
        form = standard_form("BCC")
        polytope = voronoi_polytope(form)
        for vertex, active in vertex_incidences(polytope):
            for index, halfspace in enumerate(polytope.inequalities):
                lhs = dot(polytope.functional(index), vertex)
                if index in active:
                    self.assertEqual(lhs, halfspace.rhs)
                else:
                    self.assertLess(lhs, halfspace.rhs)
            self.assertGreaterEqual(len(active), 3)

    def test_rhs_is_norm(self):
        form = standard_form("FCC")
        for halfspace in voronoi_polytope(form).inequalities:
            self.assertEqual(halfspace.rhs, eval_form(form, halfspace.normal))


class TestDuality(SimpleTestCase):
    """
    Voronoi vertices are the centers of the star cells
    """

    def test_vertex_count_and_centers(self):
        for name in STANDARD_ENTRIES:
            with self.subTest(name=name):
                form = standard_form(name)
                vertices = enumerate_vertices(voronoi_polytope(form))
                star = delaunay_star(form)
                self.assertEqual(len(vertices), len(star.cells))
                self.assertEqual(
                    sorted(vertices), sorted(cell.center for cell in star.cells)
                )

    def test_central_symmetry(self):
        for name in ["A2", "FCC", "BCC", "D4"]:
            vertices = set(enumerate_vertices(voronoi_polytope(standard_form(name))))
            self.assertEqual(vertices, {tuple(-x for x in v) for v in vertices})

    def test_edges_are_orthogonal_to_dual_facets(self):
        form = standard_form("BCC")
        polytope = voronoi_polytope(form)
        incidences = vertex_incidences(polytope)
        star = delaunay_star(form)
        by_center = {cell.center: cell for cell in star.cells}
        for (a, active_a) in incidences:
            for (b, active_b) in incidences:
                shared = active_a & active_b
                if a >= b or len(shared) != 2:
                    continue
                # an edge: the two cells share the facet dual to it
                common = set(by_center[a].vertices) & set(by_center[b].vertices)
                direction = tuple(y - x for x, y in zip(a, b))
                p = min(common)
                for q in common:
                    offset = tuple(x - y for x, y in zip(q, p))
                    self.assertEqual(inner_q(form, direction, offset), 0)
