from django.test import SimpleTestCase

from app.arithmetic.forms import GramForm, eval_form
from app.audit.corpus import standard_form
from app.delaunay.cosets import coset_minima, relevant_vectors
from app.delaunay.star import delaunay_star

IDENTITY_2 = GramForm.from_rows([[1, 0], [0, 1]])
IDENTITY_3 = GramForm.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
A2 = GramForm.from_rows([[2, 1], [1, 2]])
FCC = GramForm.from_rows([[2, 1, 1], [1, 2, 1], [1, 1, 2]])


def record_for(form, representative):
    return next(
        record
        for record in coset_minima(form)
        if record.representative == representative
    )


class TestCosetMinima(SimpleTestCase):
    def test_square_diagonal_coset_is_not_simple(self):
        record = record_for(IDENTITY_2, (1, 1))
        self.assertEqual(record.min_vectors, ((1, -1), (1, 1)))
        self.assertEqual(record.min_norm, 2)
        self.assertFalse(record.simple)

    def test_hexagonal_diagonal_coset_is_simple(self):
        record = record_for(A2, (1, 1))
        self.assertEqual(record.min_vectors, ((1, -1),))
        self.assertEqual(record.min_norm, 2)
        self.assertTrue(record.simple)

    def test_axis_coset(self):
        record = record_for(IDENTITY_2, (1, 0))
        self.assertEqual(record.min_vectors, ((1, 0),))
        self.assertEqual(record.min_norm, 1)
        self.assertTrue(record.simple)

    def test_one_record_per_nonzero_class(self):
        records = coset_minima(FCC)
        self.assertEqual(len(records), 7)
        for record in records:
            for v in record.min_vectors:
                self.assertEqual(tuple(x % 2 for x in v), record.representative)
                self.assertEqual(eval_form(FCC, v), record.min_norm)


class TestRelevantVectors(SimpleTestCase):
    def test_square(self):
        self.assertEqual(
            relevant_vectors(IDENTITY_2), [(-1, 0), (0, -1), (0, 1), (1, 0)]
        )

    def test_hexagon(self):
        self.assertEqual(
            set(relevant_vectors(A2)),
            {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)},
        )

    def test_cube(self):
        self.assertEqual(
            set(relevant_vectors(IDENTITY_3)),
            {
                (1, 0, 0),
                (-1, 0, 0),
                (0, 1, 0),
                (0, -1, 0),
                (0, 0, 1),
                (0, 0, -1),
            },
        )

    def test_rhombic_dodecahedron(self):
        self.assertEqual(len(relevant_vectors(FCC)), 12)


def smallest_face(cell, points) -> set:
    """
    Vertices of the smallest face of the cell holding every given point
    """
    face = set(cell.vertices)
    for facet in cell.facets:
        if set(points) <= set(facet.vertices):
            face &= set(facet.vertices)
    return face


class TestNonSimpleCosets(SimpleTestCase):
    """
    Minimal vectors of a non-simple coset are diagonals of centrally
    symmetric faces of star cells
    """

    def test_minimal_vectors_are_face_diagonals(self):
        for form in [IDENTITY_2, IDENTITY_3, FCC, standard_form("D4")]:
            star = delaunay_star(form)
            for record in coset_minima(form):
                if record.simple:
                    continue
                for m in record.min_vectors:
                    with self.subTest(form=str(form), m=m):
                        placements = [
                            (cell, p, tuple(x + y for x, y in zip(p, m)))
                            for cell in star.cells
                            for p in cell.vertices
                            if tuple(x + y for x, y in zip(p, m)) in cell.vertices
                        ]
                        self.assertTrue(placements)
                        for cell, p, q in placements:
                            face = smallest_face(cell, [p, q])
                            # symmetric about the midpoint of p and q
                            reflected = {
                                tuple(a + b - x for a, b, x in zip(p, q, v))
                                for v in face
                            }
                            self.assertEqual(reflected, face)
