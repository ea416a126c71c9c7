from dataclasses import replace
from fractions import Fraction

from django.test import SimpleTestCase

from app.arithmetic.exceptions import PosetInvariantError
from app.audit.corpus import standard_form
from app.voronoi.polytope import voronoi_polytope
from app.voronoi.poset import _check_poset, build_face_poset


def poset_of(name: str):
    return build_face_poset(voronoi_polytope(standard_form(name)))


class TestBuildFacePoset(SimpleTestCase):
    def test_square(self):
        self.assertEqual(poset_of("Z2").f_vector, (4, 4))

    def test_cube(self):
        self.assertEqual(poset_of("Z3").f_vector, (8, 12, 6))

    def test_truncated_octahedron(self):
        self.assertEqual(poset_of("BCC").f_vector, (24, 36, 14))

    def test_rhombic_dodecahedron(self):
        self.assertEqual(poset_of("FCC").f_vector, (14, 24, 12))

    def test_24_cell(self):
        self.assertEqual(poset_of("D4").f_vector, (24, 96, 96, 24))

    def test_polytope_is_the_top_face(self):
        poset = poset_of("A2")
        (top,) = poset.face_ids(2)
        self.assertEqual(len(poset.faces[top].vertex_set), 6)
        self.assertEqual(poset.faces[top].active_inequalities, ())

    def test_faces_know_their_facets(self):
        poset = poset_of("Z3")
        for face_id in poset.face_ids(0):
            self.assertEqual(len(poset.faces[face_id].active_inequalities), 3)
        for face_id in poset.face_ids(2):
            self.assertEqual(len(poset.faces[face_id].active_inequalities), 1)

    def test_incidence_links_consecutive_grades(self):
        poset = poset_of("Z3")
        for lower, upper in poset.incidence:
            self.assertEqual(poset.faces[upper].dim, poset.faces[lower].dim + 1)
        # every edge of the cube has 2 vertices and lies on 2 squares
        for edge in poset.face_ids(1):
            self.assertEqual(
                sum(1 for lower, _ in poset.incidence if lower == edge), 2
            )
            self.assertEqual(
                sum(1 for _, upper in poset.incidence if upper == edge), 2
            )

    def test_as_dict(self):
        data = poset_of("Z2").as_dict()
        self.assertEqual(data["fVector"], [4, 4])
        self.assertEqual(len(data["faces"]["0"]), 4)
        self.assertEqual(data["faces"]["2"], [[0, 1, 2, 3]])
        self.assertEqual(data["vertices"][0], ["-1/2", "-1/2"])


class TestFacetSymmetry(SimpleTestCase):
    def test_facets_are_centrally_symmetric(self):
        for name in ["A2", "FCC", "BCC", "D4"]:
            poset = poset_of(name)
            for face_id in poset.face_ids(poset.n - 1):
                facet = [poset.vertices[i] for i in poset.faces[face_id].vertex_set]
                centroid = [sum(coords) / len(facet) for coords in zip(*facet)]
                with self.subTest(name=name, facet=face_id):
                    self.assertEqual(
                        {
                            tuple(2 * c - x for c, x in zip(centroid, v))
                            for v in facet
                        },
                        set(facet),
                    )

    def test_asymmetric_facet_is_rejected(self):
        poset = poset_of("Z3")
        half = Fraction(1, 2)
        # lift one pair of opposite corners off the cube
        lifted = {
            (half, half, half): (half, half, Fraction(3, 4)),
            (-half, -half, -half): (-half, -half, Fraction(-3, 4)),
        }
        vertices = tuple(lifted.get(v, v) for v in poset.vertices)
        with self.assertRaises(PosetInvariantError):
            _check_poset(replace(poset, vertices=vertices))
