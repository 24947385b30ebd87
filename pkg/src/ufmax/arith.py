"""Exact rational helpers and the common-denominator integer fast path.

All arithmetic is exact: `Rational` is the stdlib `Fraction` (always stored
reduced, positive denominator, zero as 0/1).  The scaled-integer helpers map a
rational r onto the integer r * L for a common denominator L, which is how the
search inner loop avoids per-node gcd work.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Rational = Fraction

# Scaled sums formed by the solver must stay below 2**62; see scale_fits().
SCALE_SAFETY_BITS = 62


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    """Exact reduced sum."""
    return a + b


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """-1, 0 or +1; cross-multiplication under the hood, never floats."""
    return (a > b) - (a < b)


def lcm_of_set(dens) -> int:
    """LCM of a nonempty collection of positive integers."""
    dens = list(dens)
    if not dens:
        raise ValueError("lcm_of_set: empty list")
    return lcm(*dens)


def to_scaled(r: Fraction, scale: int) -> int:
    """Integer v with v / scale == r exactly.  scale must be a multiple of
    r's denominator."""
    if scale % r.denominator != 0:
        raise ValueError(f"scale {scale} not divisible by denominator {r.denominator}")
    return r.numerator * (scale // r.denominator)


def from_scaled(value: int, scale: int) -> Fraction:
    """Inverse of to_scaled (reduces)."""
    return Fraction(value, scale)


def scale_fits(count: int, scale: int) -> bool:
    """True when any sum of `count` reciprocals at this scale is safely below
    2**62.  In CPython overflow is impossible either way; the check marks
    where a fixed-width port would have to fall back to big integers."""
    return count * scale < (1 << SCALE_SAFETY_BITS)


def parse_rational(text: str) -> Fraction:
    """Parse "P/Q" or a bare integer "P".  Raises ValueError on junk."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text), 1)


def format_rational(r: Fraction) -> str:
    """Canonical "P/Q" in lowest terms ("1/1" for one, "0/1" for zero)."""
    return f"{r.numerator}/{r.denominator}"
