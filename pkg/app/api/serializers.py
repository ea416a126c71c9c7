from rest_framework import serializers

from app.main.runner import RunConfig
from app.main.serializers import FormFileSerializer, RationalField


class AnalysisRequestSerializer(serializers.Serializer):
    form = FormFileSerializer()
    k = serializers.ListField(
        child=serializers.IntegerField(), required=False, min_length=1
    )
    epsilon = RationalField(required=False)
    lambdaSamples = serializers.ListField(
        child=RationalField(),
        required=False,
        min_length=1,
        source="lambda_samples",
    )

    def get_fields(self):
        # "lambda" is a Python keyword, so the field is attached here
        fields = super().get_fields()
        fields["lambda"] = RationalField(required=False, source="lam")
        return fields

    def run_config(self, command: str) -> RunConfig:
        data = self.validated_data
        return RunConfig.from_settings(
            command,
            k=data.get("k"),
            lam=data.get("lam"),
            epsilon=data.get("epsilon"),
            lambda_samples=data.get("lambda_samples"),
        )

    def form_file(self):
        return self.fields["form"].create(self.validated_data["form"])
