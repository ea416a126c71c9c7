import json
from dataclasses import dataclass
from fractions import Fraction

from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import extend_schema_field
from rest_framework import serializers

from app.arithmetic.forms import GramForm, is_positive_definite, is_symmetric
from app.arithmetic.rationals import format_rational, parse_rational


@extend_schema_field(OpenApiTypes.STR)
class RationalField(serializers.Field):
    """
    An exact rational written as text, "p/q" or "p"
    """

    default_error_messages = {
        "invalid": "Expected a rational written as text, e.g. '3/4' or '2'.",
    }

    def to_internal_value(self, data) -> Fraction:
        try:
            return parse_rational(data)
        except ValueError:
            self.fail("invalid")

    def to_representation(self, value) -> str:
        return format_rational(value)


@dataclass(frozen=True)
class FormFile:
    form: GramForm
    name: str | None = None

    @property
    def dim(self) -> int:
        return self.form.n

    def as_dict(self) -> dict:
        data = {"dim": self.dim, "gram": self.form.text_rows()}
        if self.name is not None:
            data["name"] = self.name
        return data

    def dumps(self, indent: int = 2) -> str:
        """
        Canonical text of the form file, one line per Gram row
        """
        pad = " " * indent
        rows = ",\n".join(
            pad * 2 + json.dumps(row) for row in self.form.text_rows()
        )
        fields = [f'{pad}"dim": {self.dim}', f'{pad}"gram": [\n{rows}\n{pad}]']
        if self.name is not None:
            fields.append(f'{pad}"name": {json.dumps(self.name)}')
        return "{\n" + ",\n".join(fields) + "\n}\n"


class FormFileSerializer(serializers.Serializer):
    dim = serializers.IntegerField(min_value=1)
    gram = serializers.ListField(
        child=serializers.ListField(child=RationalField()), min_length=1
    )
    name = serializers.CharField(required=False, allow_blank=True)

    def validate(self, attrs):
        dim, gram = attrs["dim"], attrs["gram"]
        if len(gram) != dim or any(len(row) != dim for row in gram):
            raise serializers.ValidationError(
                {"gram": f"Expected {dim} rows of {dim} entries each."}
            )
        if not is_symmetric(gram):
            raise serializers.ValidationError(
                {"gram": "Gram matrix is not symmetric."}
            )
        if not is_positive_definite(gram):
            raise serializers.ValidationError(
                {"gram": "Gram matrix is not positive definite."}
            )
        return attrs

    def create(self, validated_data) -> FormFile:
        return FormFile(
            form=GramForm.from_rows(validated_data["gram"]),
            name=validated_data.get("name"),
        )
