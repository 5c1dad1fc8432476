"""Helpers for exact rational values and their text form.

All exact quantities in the package are `fractions.Fraction`; floats appear
only inside iterative solvers and as a fallback when an expression contains
transcendental functions.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

#: Largest denominator tried when reconstructing a rational from a float.
RECONSTRUCT_DENOMINATOR_BOUND = 10**6


def as_fraction(value) -> Fraction:
    """Coerce ints, rational strings ("3", "-105/242"), and Fractions exactly.

    Floats are rejected: a binary float is almost never the rational the
    caller meant, so exact entry points refuse them.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def is_exact(value) -> bool:
    """True for values carried in exact rational arithmetic."""
    return isinstance(value, Rational)


def format_number(value) -> str:
    """Canonical text: rationals as ``p/q`` (or ``p`` when integral), floats
    with 17 significant digits."""
    if isinstance(value, Rational):
        frac = Fraction(value)
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"
    return format(float(value), ".17g")


def reconstruct(value: float, max_denominator: int = RECONSTRUCT_DENOMINATOR_BOUND) -> Fraction:
    """Nearest rational with bounded denominator (continued-fraction truncation)."""
    return Fraction(value).limit_denominator(max_denominator)
