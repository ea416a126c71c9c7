import json
from fractions import Fraction
from pathlib import Path

from django.test import SimpleTestCase

from rest_framework.exceptions import ValidationError

from app.main.runner import parse_form_file
from app.main.serializers import FormFileSerializer, RationalField

FIXTURES = Path(__file__).resolve().parents[3] / "test" / "fixtures"


class TestRationalField(SimpleTestCase):
    def test_round_trip(self):
        field = RationalField()
        self.assertEqual(field.to_internal_value("-3/4"), Fraction(-3, 4))
        self.assertEqual(field.to_representation(Fraction(6, 3)), "2")

    def test_rejects_decimals(self):
        with self.assertRaises(ValidationError):
            RationalField().to_internal_value("0.75")
        with self.assertRaises(ValidationError):
            RationalField().to_internal_value(3)


class TestFormFileSerializer(SimpleTestCase):
    def test_valid(self):
        serializer = FormFileSerializer(
            data={"dim": 2, "gram": [["2", "1"], ["1", "2"]], "name": "A2"}
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        form_file = serializer.save()
        self.assertEqual(form_file.name, "A2")
        self.assertEqual(form_file.dim, 2)
        self.assertEqual(form_file.form.entries, ((2, 1), (1, 2)))

    def test_name_is_optional(self):
        serializer = FormFileSerializer(data={"dim": 1, "gram": [["5/2"]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertIsNone(serializer.save().name)

    def test_invalid(self):
        cases = {
            "ragged": {"dim": 2, "gram": [["1", "0"], ["0"]]},
            "wrong dim": {"dim": 3, "gram": [["1", "0"], ["0", "1"]]},
            "not symmetric": {"dim": 2, "gram": [["2", "1"], ["0", "2"]]},
            "indefinite": {"dim": 2, "gram": [["1", "2"], ["2", "1"]]},
            "semidefinite": {"dim": 2, "gram": [["1", "1"], ["1", "1"]]},
            "decimal": {"dim": 2, "gram": [["1.5", "0"], ["0", "1"]]},
        }
        for label, data in cases.items():
            with self.subTest(label):
                serializer = FormFileSerializer(data=data)
                self.assertFalse(serializer.is_valid())
                self.assertIn("gram", serializer.errors)

    def test_missing_dim(self):
        serializer = FormFileSerializer(data={"gram": [["1"]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("dim", serializer.errors)


class TestParseFormFile(SimpleTestCase):
    def test_fixture(self):
        form_file = parse_form_file(FIXTURES / "forms" / "a2_perturbed.json")
        self.assertEqual(form_file.name, "Perturbed A2")
        self.assertEqual(form_file.form.entries[0], (Fraction(17, 8), Fraction(7, 8)))

    def test_dumps_is_canonical(self):
        form_file = parse_form_file(FIXTURES / "forms" / "a2_perturbed.json")
        data = json.loads(form_file.dumps())
        self.assertEqual(
            data,
            {"dim": 2, "gram": [["17/8", "7/8"], ["7/8", "2"]], "name": "Perturbed A2"},
        )
        serializer = FormFileSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), form_file)

    def test_canonical_files_round_trip(self):
        for path in sorted((FIXTURES / "forms").glob("*.json")):
            with self.subTest(path.name):
                self.assertEqual(parse_form_file(path).dumps(), path.read_text())

    def test_missing_file(self):
        with self.assertRaises(ValidationError) as context:
            parse_form_file(FIXTURES / "forms" / "missing.json")
        self.assertIn("file", context.exception.detail)

    def test_invalid_files(self):
        for path in sorted((FIXTURES / "invalid").glob("*.json")):
            with self.subTest(path.name), self.assertRaises(ValidationError):
                parse_form_file(path)

    def test_truncated_json(self):
        with self.assertRaises(ValidationError) as context:
            parse_form_file(FIXTURES / "invalid" / "truncated.json")
        self.assertIn("file", context.exception.detail)
