from http import HTTPStatus

from django.test import SimpleTestCase

from app.utils.testing import ignore_warnings


class RoutesTestCase(SimpleTestCase):
    def test_schema(self):
        rv = self.client.get("/api/v1/schema/", {"format": "json"})
        self.assertEqual(rv.status_code, HTTPStatus.OK)
        self.assertIn("/api/v1/analyses/{command}/", rv.json()["paths"])

    def test_analysis_route(self):
        rv = self.client.post(
            "/api/v1/analyses/zones/",
            {"form": {"dim": 2, "gram": [["1", "0"], ["0", "1"]]}},
            content_type="application/json",
        )
        self.assertEqual(rv.status_code, HTTPStatus.OK)
        self.assertEqual(rv.json()["closedZones"], 2)

    def test_unknown_route(self):
        with ignore_warnings("django.request"):
            rv = self.client.get("/healthcheck/live/")
        self.assertEqual(rv.status_code, HTTPStatus.NOT_FOUND)
