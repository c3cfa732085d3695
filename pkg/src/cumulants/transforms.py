"""
Author: Brian Gunnison

Brief: Moment <-> cumulant transforms over NC(n) and over the lattice of all partitions.

Details: The free transforms use the first-block decomposition of NC(n),
m_n = sum_s R_s [w^(n-s)] M(w)^s, solved triangularly for R_n. The direct
NC(n) sum and the Möbius sum stay available as independent oracles. The
classical transforms sum over partition types with their set-partition counts
and the recursively computed partition-lattice Möbius values.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from collections import Counter
from math import factorial, prod
from typing import List, Sequence

from src.combinat.lattice import NcInterval, moebius_nc, moebius_partition_lattice
from src.combinat.partitions import SetPartition, integer_partitions, iter_all_partitions, iter_nc
from src.cumulants.sequences import CumulantSequence, MomentSequence, coerce_like
from src.errors import UsageError
from src.util.rational import Number


def _power_table(moments: Sequence[Number], order: int) -> List[List[Number]]:
    """pw[s][j] = [w^j] M(w)^s with M(w) = 1 + sum m_k w^k, for 0 <= s, j <= order."""
    big_m = [1] + list(moments[:order])
    pw: List[List[Number]] = [[0] * (order + 1) for _ in range(order + 1)]
    pw[0][0] = 1
    for s in range(1, order + 1):
        for j in range(order + 1):
            pw[s][j] = sum(pw[s - 1][j - i] * big_m[i] for i in range(min(j, len(big_m) - 1) + 1))
    return pw


def moments_from_free_cumulants(r: CumulantSequence) -> MomentSequence:
    if r.kind != "free":
        raise UsageError("moments_from_free_cumulants needs free cumulants")
    order = r.order
    big_m: List[Number] = [1] + [0] * order
    pw: List[List[Number]] = [[1] + [0] * order for _ in range(order + 1)]
    for n in range(1, order + 1):
        big_m[n] = sum(r.values[s - 1] * pw[s][n - s] for s in range(1, n + 1))
        for s in range(1, order + 1):
            pw[s][n] = sum(pw[s - 1][n - i] * big_m[i] for i in range(n + 1))
    return MomentSequence(coerce_like(big_m[1:], r.exact))


def free_cumulants_from_moments(m: MomentSequence) -> CumulantSequence:
    order = m.order
    pw = _power_table(m.values, order)
    r: List[Number] = []
    for n in range(1, order + 1):
        lower = sum(r[s - 1] * pw[s][n - s] for s in range(1, n))
        r.append(m.values[n - 1] - lower)
    return CumulantSequence(coerce_like(r, m.exact), "free")


def _block_product(p: SetPartition, seq: Sequence[Number]) -> Number:
    return prod((seq[len(b) - 1] for b in p.blocks), start=1)


def moments_by_nc_sum(r: CumulantSequence) -> MomentSequence:
    """Oracle: m_n as the explicit sum over NC(n) of block products."""
    vals = [sum(_block_product(p, r.values) for p in iter_nc(n)) for n in range(1, r.order + 1)]
    return MomentSequence(coerce_like(vals, r.exact))


def free_cumulants_by_moebius(m: MomentSequence) -> CumulantSequence:
    """Oracle: R_n = sum_{pi in NC(n)} Moeb([pi, 1_n]) m[pi]."""
    vals = []
    for n in range(1, m.order + 1):
        top = SetPartition.one_block(n)
        vals.append(sum(moebius_nc(NcInterval(p, top)) * _block_product(p, m.values) for p in iter_nc(n)))
    return CumulantSequence(coerce_like(vals, m.exact), "free")


def set_partition_count(sizes: Sequence[int]) -> int:
    """Number of set partitions of sum(sizes) elements with the given block sizes."""
    n = sum(sizes)
    denom = prod((factorial(s) for s in sizes), start=1)
    denom *= prod((factorial(c) for c in Counter(sizes).values()), start=1)
    return factorial(n) // denom


def classical_cumulants_from_moments(m: MomentSequence) -> CumulantSequence:
    vals = []
    for n in range(1, m.order + 1):
        total: Number = 0
        for shape in integer_partitions(n):
            weight = set_partition_count(shape) * moebius_partition_lattice(len(shape))
            total += weight * prod((m.values[s - 1] for s in shape), start=1)
        vals.append(total)
    return CumulantSequence(coerce_like(vals, m.exact), "classical")


def moments_from_classical_cumulants(c: CumulantSequence) -> MomentSequence:
    if c.kind != "classical":
        raise UsageError("moments_from_classical_cumulants needs classical cumulants")
    vals = []
    for n in range(1, c.order + 1):
        vals.append(sum(set_partition_count(shape) * prod((c.values[s - 1] for s in shape), start=1)
                        for shape in integer_partitions(n)))
    return MomentSequence(coerce_like(vals, c.exact))


def classical_cumulants_by_enumeration(m: MomentSequence) -> CumulantSequence:
    """Oracle: Möbius sum over every set partition, no aggregation by type."""
    vals = []
    for n in range(1, m.order + 1):
        vals.append(sum(moebius_partition_lattice(len(p)) * _block_product(p, m.values) for p in iter_all_partitions(n)))
    return CumulantSequence(coerce_like(vals, m.exact), "classical")


def free_cumulant_additivity_check(r_a: CumulantSequence, r_b: CumulantSequence) -> CumulantSequence:
    """Free cumulants of a sum of free elements: the component-wise sum."""
    if r_a.kind != "free" or r_b.kind != "free":
        raise UsageError("Additivity holds for free cumulants only")
    if r_a.order != r_b.order:
        raise UsageError(f"Truncation orders differ: {r_a.order} vs {r_b.order}")
    return CumulantSequence(coerce_like((a + b for a, b in zip(r_a.values, r_b.values)), r_a.exact and r_b.exact), "free")
