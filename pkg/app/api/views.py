import logging

from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import (
    OpenApiExample,
    OpenApiParameter,
    extend_schema,
)
from rest_framework import status, views
from rest_framework.exceptions import NotFound
from rest_framework.response import Response

from app.api.serializers import AnalysisRequestSerializer
from app.arithmetic.exceptions import LatticeError
from app.main.runner import run_command
from app.main.types import AnalysisCommand

logger = logging.getLogger(__name__)

A2_FORM_EXAMPLE = {
    "dim": 2,
    "gram": [["2", "1"], ["1", "2"]],
    "name": "A2",
}


class AnalysisView(views.APIView):
    """
    Runs one analysis command on the posted form and returns its report
    """

    @extend_schema(
        request=AnalysisRequestSerializer,
        responses={200: OpenApiTypes.OBJECT},
        parameters=[
            OpenApiParameter(
                "command",
                OpenApiTypes.STR,
                OpenApiParameter.PATH,
                enum=AnalysisCommand.values,
            ),
        ],
        examples=[
            OpenApiExample(
                "Audit",
                value={"form": A2_FORM_EXAMPLE},
                request_only=True,
            ),
            OpenApiExample(
                "Extend",
                value={"form": A2_FORM_EXAMPLE, "k": [1, -1], "lambda": "2"},
                request_only=True,
            ),
        ],
    )
    def post(self, request, command):
        if command not in AnalysisCommand.values:
            raise NotFound(f"Unknown analysis {command!r}.")

        serializer = AnalysisRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)

        try:
            result = run_command(
                serializer.run_config(command), serializer.form_file()
            )
        except LatticeError as exc:
            logger.info("Analysis %s rejected: %s", command, exc)
            return Response(
                {"detail": str(exc)},
                status=status.HTTP_422_UNPROCESSABLE_ENTITY,
            )
        return Response(result.report)
