from fractions import Fraction

from django.test import SimpleTestCase

from app.arithmetic.exceptions import (
    DimensionMismatchError,
    NotPositiveDefiniteError,
    PreconditionError,
)
from app.arithmetic.factories import PerturbedGramFormFactory
from app.arithmetic.forms import eval_form
from app.audit.corpus import STANDARD_ENTRIES, standard_form
from app.laminae.extension import (
    ExtensionParams,
    alpha_squared,
    check_functional,
    extend_form,
    rank1_form,
)
from app.utils.testing import ReseedFactoryRandomMixin


class TestCheckFunctional(SimpleTestCase):
    def test_valid(self):
        self.assertEqual(check_functional([1, -1, 0]), (1, -1, 0))

    def test_invalid(self):
        for k in [(2, 0), (0, 0), (1.0, 0)]:
            with self.subTest(k=k), self.assertRaises(PreconditionError):
                check_functional(k)

    def test_wrong_length(self):
        self.assertEqual(check_functional((1, 1), 2), (1, 1))
        with self.assertRaises(DimensionMismatchError):
            check_functional((1, 1, 7), 2)


class TestAlphaSquared(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(alpha_squared(standard_form("Z2"), (1, 0)), 1)
        self.assertEqual(alpha_squared(standard_form("A2"), (1, 1)), Fraction(3, 2))
        self.assertEqual(alpha_squared(standard_form("A2"), (1, -1)), Fraction(1, 2))
        self.assertEqual(alpha_squared(standard_form("A2"), (1, 0)), Fraction(3, 2))

    def test_zero_functional(self):
        with self.assertRaises(PreconditionError):
            alpha_squared(standard_form("Z2"), (0, 0))


class TestRank1Form(SimpleTestCase):
    def test_matrix(self):
        rank1 = rank1_form(standard_form("A2"), (1, -1))
        self.assertEqual(
            rank1.matrix,
            ((Fraction(1, 2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(1, 2))),
        )
        self.assertEqual(rank1.evaluate((1, 0)), Fraction(1, 2))
        self.assertEqual(rank1.evaluate((1, 1)), 0)

    def test_as_dict(self):
        self.assertEqual(
            rank1_form(standard_form("A2"), (1, 1)).as_dict(),
            {
                "k": [1, 1],
                "alphaSq": "3/2",
                "matrix": [["3/2", "3/2"], ["3/2", "3/2"]],
            },
        )


class TestExtendForm(ReseedFactoryRandomMixin):
    def test_rectangle(self):
        extended = extend_form(standard_form("Z2"), (1, 0), 3)
        self.assertEqual(extended.entries, ((4, 0), (0, 1)))

    def test_hexagonal_to_square(self):
        extended = extend_form(standard_form("A2"), (1, -1), 2)
        self.assertEqual(extended.entries, ((3, 0), (0, 3)))

    def test_zero_is_identity(self):
        form = standard_form("BCC")
        self.assertIs(extend_form(form, (1, 0, 0), 0), form)

    def test_collapse(self):
        with self.assertRaises(NotPositiveDefiniteError):
            extend_form(standard_form("Z2"), (1, 0), -1)
        with self.assertRaises(NotPositiveDefiniteError):
            extend_form(standard_form("A2"), (1, 1), Fraction(-3, 2))

    def test_norms_grow_by_projection(self):
        lam = Fraction(5, 7)
        k = (1, -1, 2)
        for _ in range(10):
            form = PerturbedGramFormFactory(base=STANDARD_ENTRIES["FCC"])
            extended = extend_form(form, k, lam)
            alpha_sq = alpha_squared(form, k)
            for v in [(1, 0, 0), (2, -1, 3), (-4, 1, 1), (0, 5, -2)]:
                k_v = sum(a * b for a, b in zip(k, v))
                self.assertEqual(
                    eval_form(extended, v),
                    eval_form(form, v) + lam * alpha_sq * k_v**2,
                )


class TestExtensionParams(SimpleTestCase):
    def test_from_epsilon(self):
        self.assertEqual(ExtensionParams.from_epsilon(1).lam, 3)
        params = ExtensionParams.from_epsilon(Fraction(-1, 2))
        self.assertEqual(params.lam, Fraction(-3, 4))
        self.assertEqual(params.epsilon, Fraction(-1, 2))

    def test_lambda_only(self):
        params = ExtensionParams(lam=2)
        self.assertEqual(params.lam, Fraction(2))
        self.assertIsNone(params.epsilon)

    def test_invalid(self):
        with self.assertRaises(PreconditionError):
            ExtensionParams(lam=-1)
        with self.assertRaises(PreconditionError):
            ExtensionParams.from_epsilon(-1)
        with self.assertRaises(PreconditionError):
            ExtensionParams(lam=3, epsilon=2)
