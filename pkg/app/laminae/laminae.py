import itertools
import logging
from fractions import Fraction
from typing import Iterable, Sequence

from app.arithmetic.exceptions import CertificateError, PreconditionError
from app.arithmetic.forms import GramForm, IntVector
from app.arithmetic.linalg import nullspace, rank
from app.arithmetic.rationals import canonical_direction, format_rational
from app.delaunay.star import DelaunayStar, LTypeFingerprint, delaunay_star
from app.laminae.extension import check_functional, extend_form
from app.laminae.margins import (
    DEFAULT_MARGIN_SCALE,
    MarginLine,
    margin_lines,
    vertex_lines,
)

logger = logging.getLogger(__name__)

DEFAULT_LAMBDA_SAMPLES = (Fraction(1, 4), Fraction(1), Fraction(4))
VALIDATION_SHRINK = Fraction(15, 16)
DEGENERATE_PROBE = Fraction(1, 64)
SCALE_DOUBLINGS = 3


def lamina_candidates(star: DelaunayStar) -> list[IntVector]:
    """
    Normals of hyperplanes through 0 spanned by star cell vertices: the
    facet hyperplanes through 0, and the hyperplanes through 0 and n − 1
    further vertices of one cell
    """
    n = star.n
    candidates = set()
    for cell in star.cells:
        for facet in cell.facets:
            if facet.through_origin:
                candidates.add(canonical_direction(facet.normal))
        others = [v for v in cell.vertices if any(v)]
        for combo in itertools.combinations(others, n - 1):
            if rank(combo) == n - 1:
                (normal,) = nullspace(combo, n)
                candidates.add(canonical_direction(normal))
    return sorted(candidates)


def is_lamina(star: DelaunayStar, k: Sequence[int]) -> bool:
    """
    The hyperplane k·x = 0 is a lamina when no star cell straddles more than
    one layer, i.e. k takes at most two consecutive values on every cell
    """
    k = check_functional(k, star.n)
    for cell in star.cells:
        values = [sum(a * b for a, b in zip(k, v)) for v in cell.vertices]
        if max(values) - min(values) > 1:
            return False
    return True


def laminae(star: DelaunayStar) -> list[IntVector]:
    return [k for k in lamina_candidates(star) if is_lamina(star, k)]


def lamina_certificate(
    form: GramForm,
    star: DelaunayStar,
    k: Sequence[int],
    scale: int = DEFAULT_MARGIN_SCALE,
) -> list[MarginLine]:
    """
    Margin lines proving the star survives every extension λ ≥ 0 along a
    lamina: no slope is negative and vertices keep a zero margin
    """
    k = check_functional(k, form.n)
    if not is_lamina(star, k):
        raise PreconditionError(f"{k} is not a lamina of this star.")

    lines = margin_lines(form, star, k, scale)
    for line in lines:
        if line.base < 0:
            raise CertificateError(
                f"Point {line.witness} lies inside the sphere of cell {line.cell_id}."
            )
        if line.slope < 0 or (line.base == 0 and line.slope != 0):
            raise CertificateError(
                f"Margin of {line.witness} over cell {line.cell_id} has slope "
                f"{format_rational(line.slope)} along lamina {k}."
            )
    return lines


def fingerprint_at(
    form: GramForm, k: Sequence[int], lam: Fraction
) -> LTypeFingerprint:
    return delaunay_star(extend_form(form, k, lam), verify=False).fingerprint


def sampled_invariance(
    form: GramForm, k: Sequence[int], lambdas: Iterable[Fraction]
) -> bool:
    reference = delaunay_star(form).fingerprint
    return all(fingerprint_at(form, k, lam) == reference for lam in lambdas)


def breaking_lambda(
    form: GramForm,
    star: DelaunayStar,
    k: Sequence[int],
    scale: int = DEFAULT_MARGIN_SCALE,
    validate: bool = True,
) -> Fraction:
    """
    Least λ ≥ 0 at which Q + λα²kkᵀ changes the star, for a non-lamina k.

    Zero when some vertex already leaves its cell's sphere at the first
    step. Otherwise the smallest root of a decreasing margin line; the
    result is checked by comparing fingerprints just below and at it, and
    the search region is enlarged when a nearer root was missed.
    """
    k = check_functional(k, form.n)
    if is_lamina(star, k):
        raise PreconditionError(f"{k} is a lamina; the star never breaks.")
    reference = star.fingerprint

    if any(line.slope != 0 for line in vertex_lines(form, star, k)):
        if validate and fingerprint_at(form, k, DEGENERATE_PROBE) == reference:
            raise CertificateError(
                f"Star along {k} is degenerate yet unchanged at λ = "
                f"{format_rational(DEGENERATE_PROBE)}."
            )
        return Fraction(0)

    for _ in range(SCALE_DOUBLINGS + 1):
        roots = [
            line.root
            for line in margin_lines(form, star, k, scale, witnesses=True)
            if line.slope < 0
        ]
        if not roots:
            raise CertificateError(f"No margin decreases along {k}.")
        threshold = min(roots)
        if not validate:
            return threshold
        if fingerprint_at(form, k, threshold * VALIDATION_SHRINK) == reference:
            if fingerprint_at(form, k, threshold) == reference:
                raise CertificateError(
                    f"Star along {k} survives the breaking point "
                    f"{format_rational(threshold)}."
                )
            return threshold
        scale *= 2
        logger.info("Breaking λ along %s missed a nearer root, scale %d", k, scale)

    raise CertificateError(f"Could not bracket the breaking point along {k}.")


def contraction_limit(
    form: GramForm,
    star: DelaunayStar,
    k: Sequence[int],
    scale: int = DEFAULT_MARGIN_SCALE,
    validate: bool = True,
) -> Fraction:
    """
    Greatest λ in [−1, 0) below which shrinking along a lamina changes the
    star, −1 when the star persists until the form degenerates
    """
    k = check_functional(k, form.n)
    if not is_lamina(star, k):
        raise PreconditionError(f"{k} is not a lamina of this star.")
    reference = star.fingerprint

    for _ in range(SCALE_DOUBLINGS + 1):
        limit = max(
            [Fraction(-1)]
            + [
                line.root
                for line in margin_lines(form, star, k, scale)
                if line.slope > 0
            ]
        )
        if not validate:
            return limit
        if fingerprint_at(form, k, limit * VALIDATION_SHRINK) == reference:
            if limit > -1 and fingerprint_at(form, k, limit) == reference:
                raise CertificateError(
                    f"Star along {k} survives the contraction limit "
                    f"{format_rational(limit)}."
                )
            return limit
        scale *= 2
        logger.info("Contraction along %s missed a nearer root, scale %d", k, scale)

    raise CertificateError(f"Could not bracket the contraction limit along {k}.")
