"""Exact rational numbers and their wire format.

Every probability, correlation and deviation in this package is a
``fractions.Fraction``: always in lowest terms with positive denominator,
with exact field arithmetic.  ``Rational`` is an alias so signatures can
speak the domain language.

On the wire (space files, CLI output) a rational is always the string
``"num/den"`` in lowest terms, including ``"0/1"`` and ``"1/1"``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_STRICT_RATIO = re.compile(r"^(-?(?:0|[1-9][0-9]*))/([1-9][0-9]*)$")


def format_ratio(value: Fraction) -> str:
    """Render ``value`` as the canonical ``num/den`` string."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_ratio(text: str) -> Fraction:
    """Parse the strict file format: ``num/den``, already in lowest terms.

    Raises ``ValueError`` for anything else, including reducible fractions
    such as ``"2/4"`` (the caller decides which invariant name to report).
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    match = _STRICT_RATIO.match(text)
    if match is None:
        raise ValueError(f"{text!r} is not of the form num/den")
    num, den = int(match.group(1)), int(match.group(2))
    if math.gcd(num, den) != 1:
        raise ValueError(f"{text!r} is not in lowest terms")
    return Fraction(num, den)


def parse_flag_ratio(text: str) -> Fraction:
    """Parse a command-line rational leniently: ``-1/4``, ``0``, ``9/100``."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}") from exc
    if value.denominator < 0:  # pragma: no cover - Fraction normalises
        raise ValueError(f"cannot parse rational {text!r}")
    return value


def ceil_sqrt(value: Fraction) -> Fraction:
    """A rational upper bound on sqrt(value), exact when value is a perfect
    square of a rational with the same denominator."""
    if value < 0:
        raise ValueError("ceil_sqrt of a negative value")
    p, q = value.numerator, value.denominator
    root = math.isqrt(p * q)
    if root * root < p * q:
        root += 1
    return Fraction(root, q)


def sign_of_root_sum(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Exact sign of ``a + b*sqrt(d)`` for rational a, b and d >= 0."""
    if d < 0:
        raise ValueError("discriminant must be non-negative")
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 against b^2 d, the larger magnitude wins
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    if lhs > rhs:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1
