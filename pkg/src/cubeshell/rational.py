"""Exact scalar handling.

Every coordinate and radius in this package is a ``fractions.Fraction``.
Floats never enter the core algorithms; the helpers here convert between
user-facing text and exact values.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError

Scalar = Fraction


def parse_scalar(text: str) -> Fraction:
    """Parse a decimal ("1.25", "-3", "1e-3") or ratio ("5/4") token exactly."""
    token = text.strip()
    if not token:
        raise UsageError("empty numeric token")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as a number") from exc


def format_ratio(value: Fraction) -> str:
    """Render exactly as "numerator/denominator", denominator always present."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, places: int = 6) -> str:
    """Round half away from zero to ``places`` decimals and trim zeros.

    At least one digit is kept after the point so the output reads as a
    decimal, never as an integer.
    """
    if places < 0:
        raise UsageError("precision must be >= 0")
    places = max(places, 1)
    sign = "-" if value < 0 else ""
    mag = -value if value < 0 else value
    scaled = mag * 10**places
    units = scaled.numerator // scaled.denominator
    rem = scaled.numerator - units * scaled.denominator
    if 2 * rem >= scaled.denominator:
        units += 1
    digits = str(units).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:]
    frac = frac.rstrip("0") or "0"
    if whole == "0" and frac == "0":
        sign = ""
    return f"{sign}{whole}.{frac}"
