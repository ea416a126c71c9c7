"""
Dispatches an analysis command on one form. Shared by the `zonelab`
management command and the HTTP API.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from django.conf import settings

from rest_framework.exceptions import ValidationError

from app.arithmetic.exceptions import BoxTooSmallError
from app.arithmetic.forms import GramForm, IntVector
from app.arithmetic.rationals import format_rational
from app.audit.audit import audit_corpus, audit_equivalence
from app.delaunay.lifting import lifting_oracle
from app.delaunay.star import delaunay_star
from app.laminae.extension import ExtensionParams, alpha_squared, extend_form
from app.laminae.laminae import (
    breaking_lambda,
    contraction_limit,
    is_lamina,
    lamina_candidates,
)
from app.ltype.cone import cone_of_ltype
from app.main.serializers import FormFile, FormFileSerializer
from app.main.types import AnalysisCommand, ExitStatus
from app.voronoi.polytope import voronoi_polytope
from app.voronoi.poset import build_face_poset
from app.voronoi.zones import classified_zones, zone_functional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    command: AnalysisCommand
    lambda_samples: tuple[Fraction, ...]
    dim_limit: int
    output_path: str | None = None
    k: IntVector | None = None
    lam: Fraction | None = None
    epsilon: Fraction | None = None
    margin_scale: int = 2
    box_radius: int = 2

    @classmethod
    def from_settings(cls, command: str, **options) -> "RunConfig":
        """
        Fills every option left as None from the ZONELAB_* settings
        """
        defaults = {
            "lambda_samples": tuple(settings.ZONELAB_LAMBDA_SAMPLES),
            "dim_limit": settings.ZONELAB_DIM_LIMIT,
            "margin_scale": settings.ZONELAB_MARGIN_SCALE,
            "box_radius": settings.ZONELAB_LIFTING_BOX_RADIUS,
        }
        given = {key: value for key, value in options.items() if value is not None}
        if "lambda_samples" in given:
            given["lambda_samples"] = tuple(given["lambda_samples"])
        if "k" in given:
            given["k"] = tuple(given["k"])
        return cls(command=AnalysisCommand(command), **(defaults | given))


@dataclass(frozen=True)
class RunResult:
    status: ExitStatus
    report: dict = field(default_factory=dict)


def parse_form_file(path: str | Path) -> FormFile:
    try:
        with open(path) as form_json:
            data = json.load(form_json)
    except FileNotFoundError:
        raise ValidationError({"file": f"{path} does not exist."}) from None
    except json.JSONDecodeError as exc:
        raise ValidationError({"file": f"{path} is not valid JSON: {exc}"}) from None

    serializer = FormFileSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def render_report(report: dict) -> str:
    return json.dumps(report, indent=settings.ZONELAB_JSON_INDENT) + "\n"


def _star_report(cfg: RunConfig, form: GramForm) -> dict:
    star = delaunay_star(form)
    try:
        agrees = (
            lifting_oracle(form, cfg.box_radius).fingerprint == star.fingerprint
        )
    except BoxTooSmallError as exc:
        logger.warning("Lifting cross-check skipped: %s", exc)
        agrees = None
    return {
        "cells": [cell.as_dict() for cell in star.cells],
        "fingerprint": str(star.fingerprint),
        "lifting": {"boxRadius": cfg.box_radius, "agrees": agrees},
    }


def _voronoi_report(cfg: RunConfig, form: GramForm) -> dict:
    polytope = voronoi_polytope(form)
    return {
        "inequalities": [h.as_dict() for h in polytope.inequalities],
        **build_face_poset(polytope).as_dict(),
    }


def _zones_report(cfg: RunConfig, form: GramForm) -> dict:
    zones = classified_zones(build_face_poset(voronoi_polytope(form)))
    return {
        "zones": [
            zone.as_dict() | {"k": list(zone_functional(form, zone))}
            for zone in zones
        ],
        "closedZones": sum(1 for zone in zones if zone.closed),
    }


def _lamina_entry(cfg: RunConfig, form: GramForm, star, k: IntVector) -> dict:
    entry = {
        "k": list(k),
        "isLamina": is_lamina(star, k),
        "alphaSq": format_rational(alpha_squared(form, k)),
    }
    if entry["isLamina"]:
        limit = contraction_limit(form, star, k, cfg.margin_scale)
        entry["contractionLimit"] = format_rational(limit)
    else:
        entry["breakingLambda"] = format_rational(
            breaking_lambda(form, star, k, cfg.margin_scale)
        )
    return entry


def _laminae_report(cfg: RunConfig, form: GramForm) -> dict:
    star = delaunay_star(form)
    candidates = [cfg.k] if cfg.k is not None else lamina_candidates(star)
    return {
        "laminae": [_lamina_entry(cfg, form, star, k) for k in candidates],
    }


def _cone_report(cfg: RunConfig, form: GramForm) -> dict:
    return cone_of_ltype(form, delaunay_star(form)).as_dict()


def _extend_report(cfg: RunConfig, form: GramForm) -> dict:
    if cfg.k is None:
        raise ValidationError({"k": "The extend command needs a functional k."})
    if (cfg.lam is None) == (cfg.epsilon is None):
        raise ValidationError(
            {"lambda": "Give exactly one of lambda and epsilon."}
        )
    params = (
        ExtensionParams.from_epsilon(cfg.epsilon)
        if cfg.epsilon is not None
        else ExtensionParams(lam=cfg.lam)
    )
    report = {"k": list(cfg.k), "lambda": format_rational(params.lam)}
    if params.epsilon is not None:
        report["epsilon"] = format_rational(params.epsilon)
    report["gram"] = extend_form(form, cfg.k, params.lam).text_rows()
    return report


def _audit_report(cfg: RunConfig, form: GramForm) -> dict:
    return audit_equivalence(form, cfg.lambda_samples, cfg.margin_scale).as_dict()


HANDLERS = {
    AnalysisCommand.STAR: _star_report,
    AnalysisCommand.VORONOI: _voronoi_report,
    AnalysisCommand.ZONES: _zones_report,
    AnalysisCommand.LAMINAE: _laminae_report,
    AnalysisCommand.CONE: _cone_report,
    AnalysisCommand.EXTEND: _extend_report,
    AnalysisCommand.AUDIT: _audit_report,
}


def check_dimension(cfg: RunConfig, form_file: FormFile):
    if form_file.dim > cfg.dim_limit:
        raise ValidationError(
            {
                "dim": f"Dimension {form_file.dim} exceeds the limit of "
                f"{cfg.dim_limit}."
            }
        )


def run_command(cfg: RunConfig, form_file: FormFile) -> RunResult:
    check_dimension(cfg, form_file)
    logger.info("Running %s on %s", cfg.command, form_file.name or form_file.form)

    report = {"command": cfg.command.value}
    if form_file.name is not None:
        report["name"] = form_file.name
    report |= HANDLERS[cfg.command](cfg, form_file.form)

    status = ExitStatus.OK
    if cfg.command == AnalysisCommand.AUDIT and not report["pass"]:
        status = ExitStatus.AUDIT_FAILED
    return RunResult(status=status, report=report)


def run_corpus(cfg: RunConfig, directory: str | Path) -> RunResult:
    """
    Audits every *.json form file of a directory, in file name order
    """
    forms = {}
    for path in sorted(Path(directory).glob("*.json")):
        form_file = parse_form_file(path)
        check_dimension(cfg, form_file)
        forms[form_file.name or path.stem] = form_file.form
    if not forms:
        raise ValidationError({"corpus": f"No form files found in {directory}."})

    summary = audit_corpus(forms, cfg.lambda_samples, cfg.margin_scale)
    report = {"command": AnalysisCommand.AUDIT.value} | summary.as_dict()
    status = ExitStatus.OK if summary.passed else ExitStatus.AUDIT_FAILED
    return RunResult(status=status, report=report)
