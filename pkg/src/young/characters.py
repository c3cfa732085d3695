"""
Author: Brian Gunnison

Brief: Cycle types, the free-cumulant character estimate and the exact
Murnaghan-Nakayama oracle.

Details: A CycleType lists only cycles of length >= 2; fixed points are implied
by the diagram size. The estimate of a normalized character on a class with
k_j cycles of length j is prod n^(-j k_j) R_(j+1)^(k_j), with error of order
n^(-1 - |sigma|/2) where |sigma| = sum (j-1) k_j.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from src.errors import SizeLimitError, UsageError
from src.util import debug
from src.util.env import get_env_int
from src.util.rational import Number
from src.young.diagrams import YoungDiagram
from src.young.transition import diagram_free_cumulants

DEFAULT_MN_CAP = 40


def mn_cap() -> int:
    return get_env_int("FREECALC_MN_CAP", DEFAULT_MN_CAP, lo=1, hi=200)


@dataclass(frozen=True)
class CycleType:
    counts: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: Dict[int, int] = {}
        for j, k in self.counts:
            j, k = int(j), int(k)
            if j < 2:
                raise UsageError(f"Cycle lengths must be >= 2, got {j}")
            if k < 0:
                raise UsageError(f"Cycle counts must be >= 0, got {k} for length {j}")
            if k:
                merged[j] = merged.get(j, 0) + k
        object.__setattr__(self, "counts", tuple(sorted(merged.items())))

    @classmethod
    def from_mapping(cls, counts: Mapping[object, object]) -> "CycleType":
        try:
            return cls(tuple((int(j), int(k)) for j, k in counts.items()))
        except (TypeError, ValueError) as e:
            raise UsageError(f"Bad cycle type {dict(counts)!r}: {e}") from e

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """'2:1,3:2' = one 2-cycle and two 3-cycles; '' or 'id' is the identity class."""
        s = text.strip()
        if s in ("", "id", "1"):
            return cls(())
        pairs = []
        for item in s.split(","):
            length, _, count = item.partition(":")
            try:
                pairs.append((int(length), int(count) if count else 1))
            except ValueError as e:
                raise UsageError(f"Bad cycle type {text!r}") from e
        return cls(tuple(pairs))

    @classmethod
    def single(cls, length: int, count: int = 1) -> "CycleType":
        return cls(((length, count),))

    def count(self, j: int) -> int:
        return dict(self.counts).get(j, 0)

    def support(self) -> int:
        """Number of points moved."""
        return sum(j * k for j, k in self.counts)

    def norm(self) -> int:
        """Cayley norm: minimal number of transpositions."""
        return sum((j - 1) * k for j, k in self.counts)

    def concat(self, other: "CycleType") -> "CycleType":
        return CycleType(self.counts + other.counts)

    def cycles(self, n: int) -> Tuple[int, ...]:
        """Full cycle partition of n, fixed points included, largest first."""
        if self.support() > n:
            raise UsageError(f"Cycle type {self} moves {self.support()} points but n = {n}")
        parts = [j for j, k in self.counts for _ in range(k)]
        return tuple(sorted(parts, reverse=True)) + (1,) * (n - self.support())

    def __str__(self) -> str:
        return ",".join(f"{j}:{k}" for j, k in self.counts) if self.counts else "id"


@dataclass(frozen=True)
class CharacterEstimate:
    value: Number
    order_bound_exponent: float
    cycle_type: CycleType

    def __post_init__(self) -> None:
        if self.order_bound_exponent != -1.0 - self.cycle_type.norm() / 2.0:
            raise UsageError("Error exponent does not match the cycle type")

    def error_scale(self, n: int) -> float:
        return float(n) ** self.order_bound_exponent


def character_estimate(d: YoungDiagram, ct: CycleType) -> CharacterEstimate:
    n = d.n
    if ct.support() > n:
        raise UsageError(f"Class {ct} does not fit in a diagram with {n} boxes")
    value: Number = Fraction(1)
    if ct.counts:
        top = max(j for j, _ in ct.counts)
        r = diagram_free_cumulants(d, top + 1)
        for j, k in ct.counts:
            value *= (Fraction(r.cumulant(j + 1)) / Fraction(n) ** j) ** k
    return CharacterEstimate(value, -1.0 - ct.norm() / 2.0, ct)


def _beta_numbers(shape: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(shape)
    return tuple(r + length - 1 - i for i, r in enumerate(shape))


def _shape_of(betas: Tuple[int, ...]) -> Tuple[int, ...]:
    ordered = sorted(betas, reverse=True)
    length = len(ordered)
    return tuple(r for r in (b - (length - 1 - i) for i, b in enumerate(ordered)) if r > 0)


@lru_cache(maxsize=None)
def _mn(shape: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles or cycles[0] == 1:
        return YoungDiagram(shape).dimension()
    r, rest = cycles[0], cycles[1:]
    betas = _beta_numbers(shape)
    occupied = set(betas)
    total = 0
    for b in betas:
        t = b - r
        if t < 0 or t in occupied:
            continue
        # sign of a rim hook = (-1)^(height), height = beads jumped over
        height = sum(1 for c in betas if t < c < b)
        moved = tuple(t if c == b else c for c in betas)
        total += (-1) ** height * _mn(_shape_of(moved), rest)
    return total


def mn_character_value(d: YoungDiagram, cycles: Tuple[int, ...]) -> int:
    """Unnormalized irreducible character on the class with the given cycle partition."""
    if sum(cycles) != d.n:
        raise UsageError(f"Cycle partition {cycles} is not a partition of {d.n}")
    if d.n > mn_cap():
        raise SizeLimitError(f"Character oracle capped at n={mn_cap()} (FREECALC_MN_CAP), got n={d.n}")
    value = _mn(d.rows, tuple(sorted(cycles, reverse=True)))
    if debug.is_verbose():
        debug.log_table("mn_cache", [("entries", _mn.cache_info().currsize)])
    return value


def mn_character(d: YoungDiagram, ct: CycleType) -> Fraction:
    """Normalized character chi(sigma)/chi(id), English labelling of the rows."""
    if ct.support() > d.n:
        raise UsageError(f"Class {ct} does not fit in a diagram with {d.n} boxes")
    return Fraction(mn_character_value(d, ct.cycles(d.n)), d.dimension())


def character_error(d: YoungDiagram, ct: CycleType) -> Fraction:
    """|exact - estimate|; the oracle sees the conjugate to match the profile orientation."""
    estimate = character_estimate(d, ct)
    return abs(mn_character(d.conjugate(), ct) - Fraction(estimate.value))


@dataclass(frozen=True)
class FactorizationDefect:
    defect: Fraction
    scale: float


def factorization_defect(d: YoungDiagram, ct1: CycleType, ct2: CycleType) -> FactorizationDefect:
    """|chi(s1 s2) - chi(s1) chi(s2)| for disjoint s1, s2, with the scale n^(-1-|s1 s2|/2)."""
    joint = ct1.concat(ct2)
    if joint.support() > d.n:
        raise UsageError(f"Classes {ct1} and {ct2} do not fit disjointly in n={d.n}")
    defect = abs(mn_character(d, joint) - mn_character(d, ct1) * mn_character(d, ct2))
    return FactorizationDefect(defect, float(d.n) ** (-1.0 - joint.norm() / 2.0))
