"""
Author: Brian Gunnison

Brief: Deterministic length-N spectra that realize a named law.

Details: Continuous laws use midpoint quantiles (i + 1/2)/N. Atomic laws get
w*N copies of each atom; when w*N is not an integer the counts are rounded by
largest remainder and a warning is logged.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from src.analytic.measures import DiscreteMeasure, NamedLaw, quantile
from src.errors import UsageError
from src.util import log


def spectrum_of(law: NamedLaw, n: int) -> np.ndarray:
    if n < 1:
        raise UsageError(f"Spectrum length must be >= 1, got {n}")
    if not law.is_discrete:
        return np.array([quantile(law, (i + 0.5) / n) for i in range(n)], dtype=float)
    atoms = law.to_measure().atoms
    raw = [Fraction(w) * n if not isinstance(w, float) else w * n for _, w in atoms]
    counts = [math.floor(c) for c in raw]
    short = n - sum(counts)
    if short:
        log.warn(f"{law} does not split evenly over N={n}; rounding atom counts")
        order = sorted(range(len(raw)), key=lambda i: raw[i] - counts[i], reverse=True)
        for i in order[:short]:
            counts[i] += 1
    out: List[float] = []
    for (x, _), c in zip(atoms, counts):
        out += [float(x)] * c
    return np.array(out, dtype=float)


def explicit_spectrum(values: Sequence[float], n: int) -> np.ndarray:
    arr = np.sort(np.asarray(values, dtype=float))
    if arr.shape != (n,):
        raise UsageError(f"Explicit spectrum has {arr.size} entries, expected N={n}")
    if not np.all(np.isfinite(arr)):
        raise UsageError("Explicit spectrum contains non-finite values")
    return arr


def spectrum_measure(spec: np.ndarray) -> DiscreteMeasure:
    """Empirical measure of a spectrum (float atoms, exact weights)."""
    return DiscreteMeasure.from_samples(float(v) for v in spec)
