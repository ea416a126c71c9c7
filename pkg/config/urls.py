"""
URL configuration for zonelab.

Only the analysis API is exposed; see app/api/urls.py.
"""

from django.urls import include, path

urlpatterns = [
    path("api/v1/", include("app.api.urls")),
]
