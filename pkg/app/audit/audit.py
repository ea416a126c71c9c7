import logging
import time
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from app.arithmetic.exceptions import LatticeError
from app.arithmetic.forms import GramForm
from app.audit.types import (
    AuditCounts,
    AuditReport,
    CertificateSummary,
    CorpusEntry,
    CorpusSummary,
    DirectionReport,
)
from app.delaunay.star import delaunay_star
from app.laminae.extension import rank1_form
from app.laminae.margins import DEFAULT_MARGIN_SCALE
from app.laminae.laminae import (
    DEFAULT_LAMBDA_SAMPLES,
    breaking_lambda,
    contraction_limit,
    is_lamina,
    lamina_candidates,
    lamina_certificate,
    sampled_invariance,
)
from app.ltype.cone import cone_of_ltype, ray_membership
from app.voronoi.polytope import voronoi_polytope
from app.voronoi.poset import build_face_poset
from app.voronoi.zones import classified_zones, zone_functional

logger = logging.getLogger(__name__)


def audit_equivalence(
    form: GramForm,
    lambda_samples: Sequence[Fraction] = DEFAULT_LAMBDA_SAMPLES,
    margin_scale: int = DEFAULT_MARGIN_SCALE,
) -> AuditReport:
    """
    Evaluates, for every candidate functional k, whether k·x = 0 is a
    lamina, whether a closed zone maps to k, whether extending along k keeps
    the L-type, and whether the rank 1 form of k spans an extreme ray of the
    L-type cone. The four answers must agree for every k.
    """
    star = delaunay_star(form)
    poset = build_face_poset(voronoi_polytope(form))
    zone_closed = {
        zone_functional(form, zone): zone.closed
        for zone in classified_zones(poset)
    }
    cone = cone_of_ltype(form, star)
    ray_functionals = [ray.k for ray in cone.rays if ray.rank == 1]

    candidates = sorted(
        set(zone_closed) | set(lamina_candidates(star)) | set(ray_functionals)
    )

    directions = []
    for k in candidates:
        try:
            directions.append(
                _audit_direction(
                    form, star, cone, k, zone_closed, lambda_samples, margin_scale
                )
            )
        except LatticeError as exc:
            raise type(exc)(f"Direction {k}: {exc}") from exc

    counts = AuditCounts(
        closed_zones=sum(1 for closed in zone_closed.values() if closed),
        lamina_families=sum(1 for d in directions if d.lamina),
        rank1_rays=len(ray_functionals),
    )
    report = AuditReport(form=form, directions=tuple(directions), counts=counts)

    for direction in directions:
        if not direction.consistent:
            logger.warning(
                "Inconsistent direction %s: lamina=%s closed=%s invariant=%s ray=%s",
                direction.k,
                direction.lamina,
                direction.closed_zone,
                direction.extension_invariant,
                direction.extreme_ray,
            )
    logger.info(
        "Audit of %s: counts %s, %s",
        form,
        counts.as_tuple(),
        "pass" if report.passed else "FAIL",
    )
    return report


def _audit_direction(
    form, star, cone, k, zone_closed, lambda_samples, margin_scale
):
    lamina = is_lamina(star, k)
    report = dict(
        k=k,
        lamina=lamina,
        closed_zone=zone_closed.get(k),
        extension_invariant=sampled_invariance(form, k, lambda_samples),
        extreme_ray=ray_membership(cone, rank1_form(form, k)),
    )
    if lamina:
        lines = lamina_certificate(form, star, k, margin_scale)
        report["certificate"] = CertificateSummary(
            lines=len(lines),
            min_slope=min((line.slope for line in lines), default=None),
        )
        report["contraction_limit"] = contraction_limit(
            form, star, k, margin_scale
        )
    else:
        report["breaking_lambda"] = breaking_lambda(
            form, star, k, margin_scale
        )
    logger.debug("Direction %s audited: %s", k, report)
    return DirectionReport(**report)


def audit_corpus(
    forms: Mapping[str, GramForm] | Iterable[tuple[str, GramForm]],
    lambda_samples: Sequence[Fraction] = DEFAULT_LAMBDA_SAMPLES,
    margin_scale: int = DEFAULT_MARGIN_SCALE,
) -> CorpusSummary:
    """
    Audits every named form; a failure on one form is recorded and does not
    stop the others
    """
    items = forms.items() if isinstance(forms, Mapping) else forms
    entries = []
    for name, form in items:
        started = time.perf_counter()
        try:
            report = audit_equivalence(form, lambda_samples, margin_scale)
        except Exception as exc:
            logger.exception("Audit of %s failed", name)
            entries.append(
                CorpusEntry(
                    name=name,
                    seconds=time.perf_counter() - started,
                    error=str(exc),
                )
            )
            continue
        seconds = time.perf_counter() - started
        logger.info("Audited %s in %.2fs", name, seconds)
        entries.append(CorpusEntry(name=name, seconds=seconds, report=report))
    return CorpusSummary(entries=tuple(entries))
