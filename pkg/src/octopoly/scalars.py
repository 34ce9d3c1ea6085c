"""Scalar backends shared by every module: exact rationals and float64.

Exact mode stores coordinates as ``fractions.Fraction`` (always reduced,
positive denominator -- the class guarantees both) and every comparison is
exact.  Float mode stores plain ``float`` and routes every zero / equality
decision through a single :class:`ToleranceSpec`, so there is one knob for
all numeric drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)


@dataclass(frozen=True)
class ToleranceSpec:
    """Zero / equality policy for the float backend.

    A float ``x`` is "zero at scale s" iff ``|x| <= abs_eps + rel_eps * |s|``.
    """

    abs_eps: float = 1e-10
    rel_eps: float = 1e-9

    def is_zero(self, x, scale=1.0):
        return abs(x) <= self.abs_eps + self.rel_eps * abs(scale)

    def eq(self, x, y, scale=1.0):
        return self.is_zero(x - y, scale)


def coerce_scalar(value, mode):
    """Coerce ``value`` into the backend's scalar type.

    Exact mode accepts ints, Fractions and 'p/q' strings; floats are rejected
    because they would silently lose exactness.  Float mode accepts anything
    float() accepts, including Fractions.
    """
    if mode == EXACT:
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, float):
            raise TypeError(
                "float scalar %r not allowed in exact mode; pass a Fraction" % value
            )
        raise TypeError("cannot use %r as an exact scalar" % (value,))
    if mode == FLOAT:
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)
    raise ValueError("unknown scalar mode %r" % (mode,))


def format_scalar(x, mode):
    """Canonical text form: reduced 'p/q' (or 'p') exactly, 17 significant
    digits in float mode (enough to round-trip a float64)."""
    if mode == EXACT:
        return str(x)
    return format(float(x), ".17g")


def rational_sqrt(x):
    """Exact square root of a Fraction, or None when x is not a square."""
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    num, den = x.numerator, x.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
