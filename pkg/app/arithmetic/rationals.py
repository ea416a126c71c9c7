import math
import re
from fractions import Fraction
from typing import Iterable

RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """
    Parses "p/q" (or plain "p") text into an exact Fraction.
    Decimal or exponent notation is rejected so no value ever passes
    through floating point.
    """
    if not isinstance(text, str):
        raise ValueError(f"Expected rational text, got {type(text).__name__}.")

    match = RATIONAL_PATTERN.match(text)
    if match is None:
        raise ValueError(f"{text!r} is not a rational, expected 'p/q' or 'p'.")

    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"{text!r} has a zero denominator.")

    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction | int) -> str:
    """
    Formats a rational as "p/q", or "p" when the denominator is 1
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def primitive(vector: Iterable[Fraction | int]) -> tuple[int, ...]:
    """
    Scales a rational vector to coprime integers with the same direction
    """
    fractions = [Fraction(x) for x in vector]
    scale = math.lcm(*(f.denominator for f in fractions))
    integers = [int(f * scale) for f in fractions]
    divisor = math.gcd(*integers)
    if divisor <= 1:
        return tuple(integers)
    return tuple(x // divisor for x in integers)


def normalize_sign(vector: Iterable[int]) -> tuple[int, ...]:
    """
    Flips a vector so its first nonzero coordinate is positive
    """
    vector = tuple(vector)
    lead = next((x for x in vector if x != 0), 0)
    return tuple(-x for x in vector) if lead < 0 else vector


def canonical_direction(vector: Iterable[Fraction | int]) -> tuple[int, ...]:
    return normalize_sign(primitive(vector))


def is_primitive(vector: Iterable[int]) -> bool:
    return math.gcd(*vector) == 1
