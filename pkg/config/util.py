from fractions import Fraction

from app.arithmetic.rationals import parse_rational


def strtobool(val):
    """Convert a string representation of truth to true (1) or false (0).
    True values are 'y', 'yes', 't', 'true', 'on', and '1'; false values
    are 'n', 'no', 'f', 'false', 'off', and '0'.  Raises ValueError if
    'val' is anything else.
    """
    val = val.lower()
    if val in ("y", "yes", "t", "true", "on", "1"):
        return True
    elif val in ("n", "no", "f", "false", "off", "0"):
        return False
    else:
        raise ValueError("invalid truth value %r" % (val,))


def parse_rational_list(val: str) -> list[Fraction]:
    """Parse a comma separated list of rationals such as '1/4,1,4'.
    Raises ValueError on an empty list or an entry that is not 'p' or 'p/q'.
    """
    items = [item for item in val.split(",") if item.strip()]
    if not items:
        raise ValueError("empty rational list %r" % (val,))
    return [parse_rational(item) for item in items]


def parse_int_list(val: str) -> tuple[int, ...]:
    """Parse a comma separated list of integers such as '1,-1'."""
    items = [item.strip() for item in val.split(",") if item.strip()]
    if not items:
        raise ValueError("empty integer list %r" % (val,))
    return tuple(int(item) for item in items)
