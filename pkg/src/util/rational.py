"""
Author: Brian Gunnison

Brief: Exact-rational parsing and rendering helpers.

Details: Values are read from "p/q" strings, decimal strings or numbers and
written back as "p/q" (integers without a denominator) plus an optional
decimal rendering.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

from src.errors import UsageError

Number = Union[Fraction, float, int]


def parse_rational(value: object) -> Fraction:
    """Parse an exact rational; floats are converted exactly (binary expansion)."""
    if isinstance(value, bool):
        raise UsageError(f"Not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"Not a rational number: {value!r}") from e
    raise UsageError(f"Not a rational number: {value!r}")


def is_exact(value: object) -> bool:
    return isinstance(value, Rational)


def format_rational(value: Number) -> str:
    if isinstance(value, Rational):
        f = Fraction(value)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return repr(float(value))


def format_decimal(value: Number, precision: int = 12) -> str:
    return f"{float(value):.{precision}g}"
