"""
Author: Brian Gunnison

Brief: Lattice operations on NC(n): meet, join, intervals and the Möbius function.

Details: Möbius values come from the defining recursion
sum_{lower <= rho <= upper} Moeb(lower, rho) = [lower == upper], memoized per
interval. The partition-lattice Möbius values used for classical cumulants are
computed by the same kind of recursion on block counts.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List

from src.combinat.partitions import SetPartition, is_noncrossing, refines
from src.errors import UsageError


@dataclass(frozen=True)
class NcInterval:
    lower: SetPartition
    upper: SetPartition

    def __post_init__(self) -> None:
        if self.lower.n != self.upper.n:
            raise UsageError("Interval endpoints have different ground sets")
        if not (is_noncrossing(self.lower) and is_noncrossing(self.upper)):
            raise UsageError("Interval endpoints must be noncrossing")
        if not refines(self.lower, self.upper):
            raise UsageError(f"{self.lower} does not refine {self.upper}")

    @property
    def n(self) -> int:
        return self.lower.n


def _require_nc(*parts: SetPartition) -> None:
    for p in parts:
        if not is_noncrossing(p):
            raise UsageError(f"Partition {p} is not noncrossing")
    if len({p.n for p in parts}) > 1:
        raise UsageError("Partitions of different sizes")


def nc_meet(p: SetPartition, q: SetPartition) -> SetPartition:
    """Common refinement: block-wise intersections."""
    _require_nc(p, q)
    lp, lq = p.labels(), q.labels()
    return SetPartition.from_labels([lp[i] * q.n + lq[i] for i in range(p.n)])


def _find(parent: List[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _crossing_pair(p: SetPartition) -> tuple[int, int] | None:
    lab = p.labels()
    for a, b in enumerate(p.blocks):
        for lo, hi in zip(b, b[1:]):
            for x in range(lo + 1, hi):
                other = p.blocks[lab[x - 1]]
                if other[0] < lo or other[-1] > hi:
                    return a, lab[x - 1]
    return None


def nc_join(p: SetPartition, q: SetPartition) -> SetPartition:
    """Finest noncrossing partition coarser than both p and q."""
    _require_nc(p, q)
    n = p.n
    parent = list(range(n))
    for part in (p, q):
        for b in part.blocks:
            for x in b[1:]:
                ra, rb = _find(parent, b[0] - 1), _find(parent, x - 1)
                if ra != rb:
                    parent[rb] = ra
    joined = SetPartition.from_labels([_find(parent, i) for i in range(n)])
    # Merge crossing blocks until none remain; block count strictly drops.
    while True:
        pair = _crossing_pair(joined)
        if pair is None:
            return joined
        lab = joined.labels()
        a, b = pair
        joined = SetPartition.from_labels([a if x == b else x for x in lab])


def interval_elements(interval: NcInterval) -> List[SetPartition]:
    """All noncrossing rho with lower <= rho <= upper."""
    lower, upper = interval.lower, interval.upper
    up_lab = upper.labels()
    home = [up_lab[b[0] - 1] for b in lower.blocks]
    k = len(lower.blocks)
    out: List[SetPartition] = []
    groups: List[List[int]] = []

    def rec(i: int) -> None:
        if i == k:
            lab = [0] * lower.n
            for g_idx, g in enumerate(groups):
                for bi in g:
                    for x in lower.blocks[bi]:
                        lab[x - 1] = g_idx
            rho = SetPartition.from_labels(lab)
            if is_noncrossing(rho):
                out.append(rho)
            return
        for g in groups:
            if home[g[0]] == home[i]:
                g.append(i)
                rec(i + 1)
                g.pop()
        groups.append([i])
        rec(i + 1)
        groups.pop()

    rec(0)
    return out


@lru_cache(maxsize=None)
def _moebius(lower: SetPartition, upper: SetPartition) -> int:
    if lower == upper:
        return 1
    total = 0
    for rho in interval_elements(NcInterval(lower, upper)):
        if rho != upper:
            total += _moebius(lower, rho)
    return -total


def moebius_nc(interval: NcInterval) -> int:
    return _moebius(interval.lower, interval.upper)


@lru_cache(maxsize=None)
def _set_partition_weight(j: int) -> int:
    # Sum over all partitions of a j-set of the product of per-block Möbius values.
    if j == 0:
        return 1
    return sum(comb(j - 1, k - 1) * moebius_partition_lattice(k) * _set_partition_weight(j - k) for k in range(1, j + 1))


@lru_cache(maxsize=None)
def moebius_partition_lattice(b: int) -> int:
    """Moeb(0, 1) in the lattice of all partitions of a b-set."""
    if b < 1:
        raise UsageError(f"Block count must be positive, got {b}")
    if b == 1:
        return 1
    # Sum over rho < 1 split by the size k < b of the block containing the first element.
    below = sum(comb(b - 1, k - 1) * moebius_partition_lattice(k) * _set_partition_weight(b - k) for k in range(1, b))
    return -below
