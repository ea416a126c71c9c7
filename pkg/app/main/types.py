from django.db.models import IntegerChoices, TextChoices


class AnalysisCommand(TextChoices):
    STAR = "star", "Delaunay star"
    VORONOI = "voronoi", "Voronoi polytope and face poset"
    ZONES = "zones", "Zones of the Voronoi polytope"
    LAMINAE = "laminae", "Lamina candidates"
    CONE = "cone", "L-type cone"
    EXTEND = "extend", "Extended form"
    AUDIT = "audit", "Equivalence audit"


class ExitStatus(IntegerChoices):
    OK = 0, "Success"
    AUDIT_FAILED = 1, "Audit failed"
    INPUT_ERROR = 2, "Input error"
