from app.arithmetic.forms import GramForm

STANDARD_ENTRIES = {
    "Z2": ((1, 0), (0, 1)),
    "A2": ((2, 1), (1, 2)),
    "Z3": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "FCC": ((2, 1, 1), (1, 2, 1), (1, 1, 2)),
    "BCC": ((3, -1, -1), (-1, 3, -1), (-1, -1, 3)),
    "Z4": ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    "D4": ((2, 0, -1, 0), (0, 2, -1, 0), (-1, -1, 2, -1), (0, 0, -1, 2)),
}


def standard_form(name: str) -> GramForm:
    try:
        return GramForm.from_rows(STANDARD_ENTRIES[name])
    except KeyError:
        raise KeyError(
            f"Unknown form {name!r}, expected one of {', '.join(STANDARD_ENTRIES)}."
        ) from None


def standard_corpus(*names: str) -> dict[str, GramForm]:
    return {name: standard_form(name) for name in names or STANDARD_ENTRIES}
