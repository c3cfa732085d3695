"""
Author: Brian Gunnison

Brief: Truncated moment and cumulant sequences.

Details: Entries are exact Fractions or floats (the float mirror used by the
Monte Carlo layer). Sequences are indexed 1..K; m_0 = 1 is implicit and any
request beyond K raises TruncationError instead of padding with zeros.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Literal, Tuple

from src.errors import TruncationError, UsageError
from src.util.env import get_env_int
from src.util.rational import Number, parse_rational

CumulantKind = Literal["free", "classical"]

DEFAULT_ORDER = 8


def default_order() -> int:
    return get_env_int("FREECALC_ORDER", DEFAULT_ORDER, lo=1, hi=64)


def _coerce(values: Iterable[object]) -> Tuple[Number, ...]:
    out = []
    for v in values:
        if isinstance(v, float):
            out.append(v)
        else:
            out.append(parse_rational(v))
    return tuple(out)


def coerce_like(values: Iterable[Number], exact: bool) -> Tuple[Number, ...]:
    return tuple(Fraction(v) if exact else float(v) for v in values)


@dataclass(frozen=True)
class MomentSequence:
    values: Tuple[Number, ...]

    def __post_init__(self) -> None:
        vals = _coerce(self.values)
        if not vals:
            raise UsageError("A moment sequence needs at least one entry")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_values(cls, values: Iterable[object]) -> "MomentSequence":
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Rational) for v in self.values)

    def moment(self, k: int) -> Number:
        if k == 0:
            return Fraction(1) if self.exact else 1.0
        if k < 0 or k > self.order:
            raise TruncationError(f"Moment m_{k} requested from a sequence truncated at K={self.order}")
        return self.values[k - 1]

    def truncate(self, k: int) -> "MomentSequence":
        if k > self.order:
            raise TruncationError(f"Cannot extend a sequence of order {self.order} to {k}")
        return MomentSequence(self.values[:k])

    def as_float(self) -> "MomentSequence":
        return MomentSequence(tuple(float(v) for v in self.values))


@dataclass(frozen=True)
class CumulantSequence:
    values: Tuple[Number, ...]
    kind: CumulantKind = "free"

    def __post_init__(self) -> None:
        if self.kind not in ("free", "classical"):
            raise UsageError(f"Unknown cumulant kind: {self.kind!r}")
        vals = _coerce(self.values)
        if not vals:
            raise UsageError("A cumulant sequence needs at least one entry")
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Rational) for v in self.values)

    def cumulant(self, k: int) -> Number:
        if k < 1 or k > self.order:
            raise TruncationError(f"Cumulant of order {k} requested from a sequence truncated at K={self.order}")
        return self.values[k - 1]

    def truncate(self, k: int) -> "CumulantSequence":
        if k > self.order:
            raise TruncationError(f"Cannot extend a sequence of order {self.order} to {k}")
        return CumulantSequence(self.values[:k], self.kind)
