"""
Author: Brian Gunnison

Brief: Matrix models X_j = U_j D_j U_j* and the result records of the experiments.

Details: Every realized matrix is checked for unitarity of U_j and for
preservation of the spectrum D_j (tolerance 1e-9); a failed check raises
NumericError.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.errors import NumericError, UsageError
from src.rmt.haar import check_unitary, sample_haar_unitary, trial_rng

SPECTRUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MatrixModel:
    n: int
    spectra: Tuple[np.ndarray, ...]
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise UsageError(f"Matrix size must be >= 1, got {self.n}")
        if not self.spectra:
            raise UsageError("A matrix model needs at least one spectrum")
        spectra = tuple(np.asarray(s, dtype=float) for s in self.spectra)
        for j, s in enumerate(spectra, 1):
            if s.shape != (self.n,):
                raise UsageError(f"Spectrum {j} has shape {s.shape}, expected ({self.n},)")
        object.__setattr__(self, "spectra", spectra)

    @property
    def generators(self) -> int:
        return len(self.spectra)


def realize_model(model: MatrixModel, trial: int, check: bool = True) -> List[np.ndarray]:
    out = []
    for j, d in enumerate(model.spectra):
        u = sample_haar_unitary(model.n, trial_rng(model.seed, trial, j))
        x = (u * d) @ u.conj().T
        x = 0.5 * (x + x.conj().T)
        if check:
            check_unitary(u)
            eigs = np.linalg.eigvalsh(x)
            err = float(np.max(np.abs(eigs - np.sort(d))))
            if err > SPECTRUM_TOL * max(1.0, float(np.max(np.abs(d)))):
                raise NumericError(f"Generator {j + 1} lost its spectrum: max deviation {err:.3e}")
        out.append(x)
    return out


@dataclass(frozen=True, eq=False)
class EmpiricalSpectrum:
    eigenvalues: np.ndarray
    edges: Optional[np.ndarray] = None
    counts: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        eigs = np.asarray(self.eigenvalues, dtype=float)
        if eigs.ndim != 1 or eigs.size == 0:
            raise UsageError("An empirical spectrum needs a non-empty 1-d array")
        if np.any(np.diff(eigs) < 0):
            raise UsageError("Eigenvalues must be sorted ascending")
        object.__setattr__(self, "eigenvalues", eigs)
        if self.counts is not None:
            if self.edges is None or len(self.edges) != len(self.counts) + 1:
                raise UsageError("Histogram needs len(edges) == len(counts) + 1")
            if int(np.sum(self.counts)) != eigs.size:
                raise UsageError(f"Histogram counts sum to {int(np.sum(self.counts))}, not {eigs.size}")

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "EmpiricalSpectrum":
        return cls(np.sort(np.asarray(values, dtype=float)))

    @property
    def size(self) -> int:
        return int(self.eigenvalues.size)

    def with_histogram(self, bins: int, lo: Optional[float] = None, hi: Optional[float] = None) -> "EmpiricalSpectrum":
        if bins < 1:
            raise UsageError(f"Need at least one bin, got {bins}")
        left = float(self.eigenvalues[0]) if lo is None else min(lo, float(self.eigenvalues[0]))
        right = float(self.eigenvalues[-1]) if hi is None else max(hi, float(self.eigenvalues[-1]))
        if right <= left:
            right = left + 1.0
        counts, edges = np.histogram(self.eigenvalues, bins=bins, range=(left, right))
        return EmpiricalSpectrum(self.eigenvalues, edges, counts)

    def moment(self, k: int) -> float:
        return math.fsum(self.eigenvalues ** k) / self.size


@dataclass(frozen=True)
class MomentEstimate:
    value: float
    stderr: float
    trials: int

    def __post_init__(self) -> None:
        if self.stderr < 0:
            raise UsageError(f"Standard error must be >= 0, got {self.stderr}")
        if self.trials < 1:
            raise UsageError(f"Need at least one trial, got {self.trials}")

    @classmethod
    def from_samples(cls, samples: Sequence[float]) -> "MomentEstimate":
        t = len(samples)
        mean = math.fsum(samples) / t
        if t < 2:
            return cls(mean, 0.0, t)
        var = math.fsum((s - mean) ** 2 for s in samples) / (t - 1)
        return cls(mean, math.sqrt(var / t), t)

    def within(self, target: float, sigmas: float = 3.0, floor: float = 1e-12) -> bool:
        return abs(self.value - target) <= sigmas * self.stderr + floor


@dataclass(frozen=True)
class MomentRow:
    k: int
    empirical: MomentEstimate
    predicted: float


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    spectrum: EmpiricalSpectrum
    moments: List[MomentRow] = field(default_factory=list)
    ks: Optional[float] = None


@dataclass(frozen=True)
class EntryCumulantRow:
    n: int
    cumulant: float
    stderr: float
    per_n: float
    per_n2: float
    reference: float


@dataclass(frozen=True)
class HaarVarianceResult:
    variance: MomentEstimate
    exact: float
