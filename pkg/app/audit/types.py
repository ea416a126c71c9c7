from dataclasses import dataclass, field
from fractions import Fraction

from app.arithmetic.forms import GramForm, IntVector
from app.arithmetic.rationals import format_rational


@dataclass(frozen=True)
class CertificateSummary:
    lines: int
    min_slope: Fraction | None

    def as_dict(self) -> dict:
        return {
            "lines": self.lines,
            "minSlope": (
                format_rational(self.min_slope)
                if self.min_slope is not None
                else None
            ),
        }


@dataclass(frozen=True)
class DirectionReport:
    """
    The four equivalent conditions evaluated for one functional k.
    `closed_zone` is None when no zone of the polytope maps to k.
    """

    k: IntVector
    lamina: bool
    closed_zone: bool | None
    extension_invariant: bool
    extreme_ray: bool
    certificate: CertificateSummary | None = None
    breaking_lambda: Fraction | None = None
    contraction_limit: Fraction | None = None

    @property
    def consistent(self) -> bool:
        return (
            len(
                {
                    self.lamina,
                    bool(self.closed_zone),
                    self.extension_invariant,
                    self.extreme_ray,
                }
            )
            == 1
        )

    def as_dict(self) -> dict:
        report = {
            "k": list(self.k),
            "lamina": self.lamina,
            "closedZone": self.closed_zone,
            "extensionInvariant": self.extension_invariant,
            "extremeRay": self.extreme_ray,
            "consistent": self.consistent,
        }
        if self.certificate is not None:
            report["certificate"] = self.certificate.as_dict()
        if self.breaking_lambda is not None:
            report["breakingLambda"] = format_rational(self.breaking_lambda)
        if self.contraction_limit is not None:
            report["contractionLimit"] = format_rational(self.contraction_limit)
        return report


@dataclass(frozen=True)
class AuditCounts:
    closed_zones: int
    lamina_families: int
    rank1_rays: int

    @property
    def agree(self) -> bool:
        return self.closed_zones == self.lamina_families == self.rank1_rays

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.closed_zones, self.lamina_families, self.rank1_rays)


@dataclass(frozen=True)
class AuditReport:
    form: GramForm
    directions: tuple[DirectionReport, ...]
    counts: AuditCounts

    @property
    def passed(self) -> bool:
        return self.counts.agree and all(d.consistent for d in self.directions)

    def as_dict(self) -> dict:
        return {
            "form": self.form.text_rows(),
            "directions": [d.as_dict() for d in self.directions],
            "counts": {
                "closedZones": self.counts.closed_zones,
                "laminaFamilies": self.counts.lamina_families,
                "rank1Rays": self.counts.rank1_rays,
            },
            "pass": self.passed,
        }


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    seconds: float
    report: AuditReport | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.report is not None and self.report.passed


@dataclass(frozen=True)
class CorpusSummary:
    entries: tuple[CorpusEntry, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def as_dict(self) -> dict:
        return {
            "forms": [
                {
                    "name": entry.name,
                    "pass": entry.passed,
                    "error": entry.error,
                    "report": entry.report.as_dict() if entry.report else None,
                }
                for entry in self.entries
            ],
            "pass": self.passed,
        }
