"""
Author: Brian Gunnison

Brief: Free additive convolution, free compression and dilation of moment sequences.

Details: All three act on free cumulants (add, R_k -> t^(k-1) R_k,
R_k -> lambda^k R_k) and reconstruct moments; results stay exact for exact inputs.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import Optional

from src.analytic.measures import NamedLaw
from src.cumulants.sequences import CumulantSequence, MomentSequence, coerce_like
from src.cumulants.transforms import (
    free_cumulant_additivity_check,
    free_cumulants_from_moments,
    moments_from_free_cumulants,
)
from src.errors import TruncationError, UsageError
from src.util.rational import Number, parse_rational


def free_convolve(a: MomentSequence, b: MomentSequence, order: Optional[int] = None) -> MomentSequence:
    k = min(a.order, b.order) if order is None else order
    if a.order < k or b.order < k:
        raise TruncationError(f"Inputs truncated at {a.order}/{b.order}, need {k}")
    r = free_cumulant_additivity_check(free_cumulants_from_moments(a.truncate(k)), free_cumulants_from_moments(b.truncate(k)))
    return moments_from_free_cumulants(r)


def free_compress(m: MomentSequence, t: Number) -> MomentSequence:
    """Law of the compression p a p (trace renormalized by tau(p) = t)."""
    if not isinstance(t, float):
        t = parse_rational(t)
    if not 0 < t <= 1:
        raise UsageError(f"Compression ratio must lie in (0, 1], got {t}")
    r = free_cumulants_from_moments(m)
    scaled = [t ** (k - 1) * v for k, v in enumerate(r.values, 1)]
    exact = r.exact and not isinstance(t, float)
    return moments_from_free_cumulants(CumulantSequence(coerce_like(scaled, exact), "free"))


def dilate(m: MomentSequence, lam: Number) -> MomentSequence:
    if not isinstance(lam, float):
        lam = parse_rational(lam)
    if lam == 0:
        raise UsageError("Dilation factor must be nonzero")
    exact = m.exact and not isinstance(lam, float)
    return MomentSequence(coerce_like((lam ** k * v for k, v in enumerate(m.values, 1)), exact))


def predicted_sum_law(a: NamedLaw, b: NamedLaw) -> Optional[NamedLaw]:
    """Named law of a ⊞ b when one is known in closed form, else None."""
    half_projection = NamedLaw.projection("1/2")
    if a.tag == "point" and a.params[0] == 0:
        return b
    if b.tag == "point" and b.params[0] == 0:
        return a
    if a == half_projection and b == half_projection:
        return NamedLaw.arcsine02()
    if a.tag == "semicircle" and b.tag == "semicircle":
        return NamedLaw.semicircle(a.params[0] + b.params[0])
    return None
