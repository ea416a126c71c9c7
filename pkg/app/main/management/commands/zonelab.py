from django.core.management.base import BaseCommand, CommandError

from rest_framework.exceptions import ValidationError

from app.arithmetic.exceptions import LatticeError
from app.arithmetic.rationals import parse_rational
from app.main.runner import (
    RunConfig,
    parse_form_file,
    render_report,
    run_command,
    run_corpus,
)
from app.main.types import AnalysisCommand, ExitStatus
from config.util import parse_int_list, parse_rational_list


def describe_validation_error(error: ValidationError) -> str:
    detail = error.detail
    if isinstance(detail, dict):
        return "; ".join(
            f"{field}: {' '.join(str(message) for message in messages)}"
            if isinstance(messages, list)
            else f"{field}: {messages}"
            for field, messages in detail.items()
        )
    return " ".join(str(message) for message in detail)


class Command(BaseCommand):
    help = (
        "Exact Delaunay, Voronoi, zone, lamina and L-type cone analyses of a "
        "positive definite quadratic form read from a JSON form file."
    )

    def add_arguments(self, parser):
        parser.add_argument("analysis", choices=AnalysisCommand.values)
        parser.add_argument("form_file", nargs="?")
        parser.add_argument(
            "--k", type=parse_int_list, help="Functional as integers, e.g. 1,-1"
        )
        parser.add_argument("--lambda", dest="lam", type=parse_rational)
        parser.add_argument("--epsilon", type=parse_rational)
        parser.add_argument(
            "--lambda-samples", dest="lambda_samples", type=parse_rational_list
        )
        parser.add_argument("--dim-limit", dest="dim_limit", type=int)
        parser.add_argument("--out", dest="output_path")
        parser.add_argument(
            "--corpus", help="Directory of form files to audit together"
        )

    def handle(self, *args, **options):
        cfg = RunConfig.from_settings(
            options["analysis"],
            lambda_samples=options["lambda_samples"],
            dim_limit=options["dim_limit"],
            output_path=options["output_path"],
            k=options["k"],
            lam=options["lam"],
            epsilon=options["epsilon"],
        )

        try:
            if options["corpus"]:
                if cfg.command != AnalysisCommand.AUDIT:
                    raise ValidationError(
                        {"corpus": "Only the audit command accepts --corpus."}
                    )
                result = run_corpus(cfg, options["corpus"])
            elif options["form_file"]:
                result = run_command(cfg, parse_form_file(options["form_file"]))
            else:
                raise ValidationError({"form_file": "A form file is required."})
        except ValidationError as exc:
            raise CommandError(
                describe_validation_error(exc),
                returncode=ExitStatus.INPUT_ERROR,
            ) from exc
        except LatticeError as exc:
            returncode = (
                ExitStatus.INPUT_ERROR
                if isinstance(exc, ValueError)
                else ExitStatus.AUDIT_FAILED
            )
            raise CommandError(str(exc), returncode=returncode) from exc

        text = render_report(result.report)
        if cfg.output_path:
            with open(cfg.output_path, "w") as output:
                output.write(text)
        else:
            self.stdout.write(text, ending="")

        if result.status == ExitStatus.AUDIT_FAILED:
            raise CommandError(
                "Audit failed: the equivalent conditions disagree.",
                returncode=ExitStatus.AUDIT_FAILED,
            )
