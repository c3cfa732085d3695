"""
Author: Brian Gunnison

Brief: Induction and restriction of irreducibles: free-probability shape
predictions and exact decomposition oracles.

Details: The induction prediction convolves the two transition measures. Its
oracle computes <Ind(chi1 x chi2), chi_nu> = sum over classes rho1 of S_n1 and
rho2 of S_n2 of chi1(rho1) chi2(rho2) chi_nu(rho1 u rho2) / (z_rho1 z_rho2).
Restriction from S_n to S_m is predicted by the free compression of the
transition measure with ratio m/n. Its oracle applies the branching rule n-m
times, so the multiplicity of mu is the number of ways to strip lambda down to
mu one removable box at a time.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.analytic.convolution import free_compress, free_convolve
from src.combinat.partitions import integer_partitions
from src.cumulants.sequences import MomentSequence, default_order
from src.errors import NumericError, SizeLimitError, UsageError
from src.util import log
from src.util.env import get_env_int
from src.young.characters import mn_character_value
from src.young.diagrams import YoungDiagram
from src.young.transition import diagram_moments

DEFAULT_INDUCE_CAP = 12
DEFAULT_RESTRICT_CAP = 24


def induce_cap() -> int:
    return get_env_int("FREECALC_INDUCE_CAP", DEFAULT_INDUCE_CAP, lo=1, hi=30)


def restrict_cap() -> int:
    return get_env_int("FREECALC_RESTRICT_CAP", DEFAULT_RESTRICT_CAP, lo=1, hi=40)


def induce_shape_prediction(d1: YoungDiagram, d2: YoungDiagram, order: Optional[int] = None) -> MomentSequence:
    k = default_order() if order is None else order
    return free_convolve(diagram_moments(d1, k), diagram_moments(d2, k), k)


def centralizer_size(cycles: Tuple[int, ...]) -> int:
    return math.prod(j ** m * math.factorial(m) for j, m in Counter(cycles).items())


def induced_decomposition_oracle(d1: YoungDiagram, d2: YoungDiagram) -> List[Tuple[YoungDiagram, int]]:
    n1, n2 = d1.n, d2.n
    n = n1 + n2
    if n > induce_cap():
        raise SizeLimitError(f"Induction oracle capped at n={induce_cap()} (FREECALC_INDUCE_CAP), got n={n}")
    # class functions of the two factors, weighted by 1/z
    left = [(rho, Fraction(mn_character_value(d1, rho), centralizer_size(rho))) for rho in integer_partitions(n1)]
    right = [(rho, Fraction(mn_character_value(d2, rho), centralizer_size(rho))) for rho in integer_partitions(n2)]
    out: List[Tuple[YoungDiagram, int]] = []
    for nu in integer_partitions(n):
        target = YoungDiagram(nu)
        mult = Fraction(0)
        for rho1, a in left:
            if a == 0:
                continue
            for rho2, b in right:
                if b:
                    mult += a * b * mn_character_value(target, tuple(sorted(rho1 + rho2, reverse=True)))
        if mult.denominator != 1 or mult < 0:
            raise NumericError(f"Multiplicity of {target} came out as {mult}")
        if mult:
            out.append((target, int(mult)))
    dim = sum(m * nu.dimension() for nu, m in out)
    expected = math.comb(n, n1) * d1.dimension() * d2.dimension()
    if dim != expected:
        raise NumericError(f"Induced dimension {dim} != {expected}")
    log.info(f"Ind({d1} x {d2}): {len(out)} components")
    return out


def induced_moment_average(d1: YoungDiagram, d2: YoungDiagram, order: int) -> MomentSequence:
    """Dimension x multiplicity weighted mean of the components' transition-measure moments."""
    parts = induced_decomposition_oracle(d1, d2)
    total = sum(m * nu.dimension() for nu, m in parts)
    acc = [Fraction(0)] * order
    for nu, m in parts:
        w = Fraction(m * nu.dimension(), total)
        for i, v in enumerate(diagram_moments(nu, order).values):
            acc[i] += w * v
    return MomentSequence(tuple(acc))


# ---------- restriction ----------

def _check_restriction(d: YoungDiagram, m: int) -> None:
    if not 1 <= m <= d.n:
        raise UsageError(f"Restriction target must lie in 1..{d.n}, got {m}")


def restrict_shape_prediction(d: YoungDiagram, m: int, order: Optional[int] = None) -> MomentSequence:
    """Free compression of the transition measure of d by t = m/n."""
    _check_restriction(d, m)
    k = default_order() if order is None else order
    return free_compress(diagram_moments(d, k), Fraction(m, d.n))


def remove_box(d: YoungDiagram) -> List[YoungDiagram]:
    """Diagrams obtained by deleting one removable corner, top row first."""
    rows = d.rows
    out = []
    for i, r in enumerate(rows):
        if i + 1 == len(rows) or rows[i + 1] < r:
            out.append(YoungDiagram(rows[:i] + ((r - 1,) if r > 1 else ()) + rows[i + 1:]))
    return out


def restricted_decomposition_oracle(d: YoungDiagram, m: int) -> List[Tuple[YoungDiagram, int]]:
    _check_restriction(d, m)
    if d.n > restrict_cap():
        raise SizeLimitError(f"Restriction oracle capped at n={restrict_cap()} (FREECALC_RESTRICT_CAP), got n={d.n}")
    layer: Dict[YoungDiagram, int] = {d: 1}
    for _ in range(d.n - m):
        nxt: Dict[YoungDiagram, int] = {}
        for mu, mult in layer.items():
            for nu in remove_box(mu):
                nxt[nu] = nxt.get(nu, 0) + mult
        layer = nxt
    out = sorted(layer.items(), key=lambda item: item[0].rows, reverse=True)
    dim = sum(mult * mu.dimension() for mu, mult in out)
    if dim != d.dimension():
        raise NumericError(f"Restricted dimension {dim} != {d.dimension()}")
    log.info(f"Res({d} -> S_{m}): {len(out)} components")
    return out


def restricted_moment_average(d: YoungDiagram, m: int, order: int) -> MomentSequence:
    """Dimension x multiplicity weighted mean over the components of the restriction."""
    parts = restricted_decomposition_oracle(d, m)
    acc = [Fraction(0)] * order
    for mu, mult in parts:
        w = Fraction(mult * mu.dimension(), d.dimension())
        for i, v in enumerate(diagram_moments(mu, order).values):
            acc[i] += w * v
    return MomentSequence(tuple(acc))
