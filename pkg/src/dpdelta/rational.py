"""Exact rational scalars and their canonical text form.

Every numeric quantity in this package is a ``fractions.Fraction``.  The
stdlib type already keeps values in lowest terms with a positive
denominator, so it satisfies the normalization this package relies on;
what it lacks is the "p/q" wire format used by the catalog files and the
CLI, which lives here.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rat = Fraction

__all__ = ["Rat", "rat", "parse_rational", "render_rational", "rational_sqrt"]


def rat(value) -> Fraction:
    """Coerce ints, "p/q" strings and Fractions to Fraction (never floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot make an exact rational out of {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "n" into a Fraction.

    Whitespace around the tokens is tolerated; a zero denominator or any
    other malformed input raises ValueError.
    """
    s = text.strip()
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        num = int(num_s.strip())
        den = int(den_s.strip())
        if den == 0:
            raise ValueError(f"zero denominator in rational literal {text!r}")
        return Fraction(num, den)
    return Fraction(int(s))


def render_rational(q: Fraction) -> str:
    """Render canonically: "n" for integers, "p/q" otherwise, sign on p."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of q if it is the square of a rational, else None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
