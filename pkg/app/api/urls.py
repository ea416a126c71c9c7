from django.urls import path

from drf_spectacular.views import SpectacularAPIView

from app.api.views import AnalysisView

app_name = "api"

urlpatterns = [
    path(
        "analyses/<str:command>/",
        AnalysisView.as_view(),
        name="analysis",
    ),
    path("schema/", SpectacularAPIView.as_view(), name="schema"),
]
