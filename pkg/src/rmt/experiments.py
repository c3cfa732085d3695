"""
Author: Brian Gunnison

Brief: Monte Carlo experiments: mixed moments, sums of rotated matrices,
corner submatrices, Haar entry statistics.

Details: Trials run on a thread pool of FREECALC_WORKERS threads. Each trial
owns its own seed stream and results come back in trial order, so estimates
are bit-identical for any worker count. Reductions use math.fsum.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from scipy import stats

from src.analytic import measures
from src.analytic.convolution import free_compress, free_convolve
from src.analytic.measures import NamedLaw
from src.cumulants.sequences import MomentSequence
from src.cumulants.transforms import classical_cumulants_from_moments, free_cumulants_from_moments
from src.errors import UsageError
from src.rmt.haar import check_unitary, sample_haar_unitary, trial_rng
from src.rmt.models import (
    EmpiricalSpectrum,
    EntryCumulantRow,
    HaarVarianceResult,
    MatrixModel,
    MomentEstimate,
    MomentRow,
    SpectrumResult,
    realize_model,
)
from src.rmt.spectra import spectrum_measure
from src.util import debug, log
from src.util.env import get_env_int
from src.util.rational import Number, parse_rational

T = TypeVar("T")

MAX_ENTRY_ORDER = 6


def workers() -> int:
    return get_env_int("FREECALC_WORKERS", 1, lo=1, hi=64)


def run_trials(fn: Callable[[int], T], trials: int) -> List[T]:
    if trials < 1:
        raise UsageError(f"Need at least one trial, got {trials}")
    w = workers()
    if w == 1:
        return [fn(t) for t in range(trials)]
    with ThreadPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, range(trials)))


def ks_distance(eigenvalues: np.ndarray, law: NamedLaw) -> float:
    """Sup distance between the empirical CDF and the law's CDF."""
    cdf = np.vectorize(lambda x: measures.cdf(law, float(x)))
    return float(stats.kstest(eigenvalues, cdf).statistic)


def _spectrum_moments(spec: np.ndarray, order: int) -> MomentSequence:
    return spectrum_measure(spec).moments(order)


def mixed_moment_mc(model: MatrixModel, word: Sequence[int], trials: int) -> MomentEstimate:
    """Mean and stderr of (1/N) Tr(X_w1 ... X_wk); letters are 1-based."""
    w = tuple(int(c) for c in word)
    if not w:
        raise UsageError("Word must be non-empty")
    if any(c < 1 or c > model.generators for c in w):
        raise UsageError(f"Word {w} uses letters outside 1..{model.generators}")

    def one(trial: int) -> float:
        xs = realize_model(model, trial)
        prod = xs[w[0] - 1]
        for c in w[1:]:
            prod = prod @ xs[c - 1]
        return float(np.trace(prod).real) / model.n

    samples = run_trials(one, trials)
    if debug.is_verbose():
        debug.log_table("mixed_moment", enumerate(samples[:10]), {"word": w, "trials": trials})
    return MomentEstimate.from_samples(samples)


def _moment_rows(per_trial: List[np.ndarray], predicted: MomentSequence) -> List[MomentRow]:
    rows = []
    for k in range(1, predicted.order + 1):
        samples = [math.fsum(e ** k) / e.size for e in per_trial]
        rows.append(MomentRow(k, MomentEstimate.from_samples(samples), float(predicted.moment(k))))
    return rows


def _histogram(eigs: np.ndarray, bins: Optional[int], law: Optional[NamedLaw]) -> EmpiricalSpectrum:
    spectrum = EmpiricalSpectrum(np.sort(eigs))
    if not bins:
        return spectrum
    if law is not None:
        lo, hi = measures.support(law)
        return spectrum.with_histogram(bins, lo, hi)
    return spectrum.with_histogram(bins)


def sum_spectrum_experiment(
    spec_a: np.ndarray,
    spec_b: np.ndarray,
    n: int,
    trials: int,
    seed: int,
    bins: Optional[int] = None,
    order: int = 4,
    law: Optional[NamedLaw] = None,
) -> SpectrumResult:
    """Eigenvalues of U_a D_a U_a* + U_b D_b U_b*, pooled over trials, against the free-convolution prediction."""
    model = MatrixModel(n, (spec_a, spec_b), seed)

    def one(trial: int) -> np.ndarray:
        xa, xb = realize_model(model, trial)
        return np.linalg.eigvalsh(xa + xb)

    per_trial = run_trials(one, trials)
    predicted = free_convolve(_spectrum_moments(model.spectra[0], order), _spectrum_moments(model.spectra[1], order), order)
    pooled = np.concatenate(per_trial)
    ks = ks_distance(pooled, law) if law is not None and not law.is_discrete else None
    log.info(f"sum: N={n} trials={trials} pooled={pooled.size}" + (f" ks={ks:.4f}" if ks is not None else ""))
    return SpectrumResult(_histogram(pooled, bins, law), _moment_rows(per_trial, predicted), ks)


def corner_size(n: int, t: Number) -> int:
    ratio = parse_rational(t)
    if not 0 < ratio <= 1:
        raise UsageError(f"Compression ratio must lie in (0, 1], got {t}")
    size = ratio * n
    if size.denominator != 1:
        raise UsageError(f"t*N = {size} is not an integer")
    return int(size)


def submatrix_spectrum(
    spec: np.ndarray,
    n: int,
    t: Number,
    trials: int,
    seed: int,
    bins: Optional[int] = None,
    order: int = 4,
) -> SpectrumResult:
    """Spectrum of the leading tN x tN corner of U D U*, against the free-compression prediction."""
    m = corner_size(n, t)
    model = MatrixModel(n, (spec,), seed)

    def one(trial: int) -> np.ndarray:
        (x,) = realize_model(model, trial)
        return np.linalg.eigvalsh(x[:m, :m])

    per_trial = run_trials(one, trials)
    predicted = free_compress(_spectrum_moments(model.spectra[0], order), Fraction(parse_rational(t)))
    log.info(f"submatrix: N={n} corner={m} trials={trials}")
    return SpectrumResult(_histogram(np.concatenate(per_trial), bins, None), _moment_rows(per_trial, predicted))


def _entry_samples(spec: np.ndarray, n: int, trials: int, seed: int) -> np.ndarray:
    """X_11 = sum_j |U_1j|^2 d_j for each trial."""
    d = np.asarray(spec, dtype=float)
    if d.shape != (n,):
        raise UsageError(f"Spectrum has shape {d.shape}, expected ({n},)")

    def one(trial: int) -> float:
        u = sample_haar_unitary(n, trial_rng(seed, trial, 0))
        check_unitary(u)
        return math.fsum(np.abs(u[0]) ** 2 * d)

    return np.array(run_trials(one, trials), dtype=float)


def _sample_cumulants(y: np.ndarray, n_max: int) -> List[float]:
    moms = [math.fsum(y ** k) / y.size for k in range(1, n_max + 1)]
    return [float(c) for c in classical_cumulants_from_moments(MomentSequence(tuple(moms))).values]


def entry_cumulant_mc(spec: np.ndarray, n: int, n_max: int, trials: int, seed: int) -> List[EntryCumulantRow]:
    """Sample cumulants of Y = N (U D U*)_11 with the 1/N and 1/N^2 rescalings side by side."""
    if not 1 <= n_max <= MAX_ENTRY_ORDER:
        raise UsageError(f"n_max must lie in 1..{MAX_ENTRY_ORDER}, got {n_max}")
    y = n * _entry_samples(spec, n, trials, seed)
    overall = _sample_cumulants(y, n_max)
    batches = min(20, trials)
    if batches >= 2:
        per_batch = [_sample_cumulants(chunk, n_max) for chunk in np.array_split(y, batches)]
    else:
        per_batch = []
    free = free_cumulants_from_moments(_spectrum_moments(np.asarray(spec, dtype=float), n_max))
    rows = []
    for k in range(1, n_max + 1):
        if per_batch:
            vals = [b[k - 1] for b in per_batch]
            stderr = MomentEstimate.from_samples(vals).stderr
        else:
            stderr = 0.0
        c = overall[k - 1]
        rows.append(EntryCumulantRow(k, c, stderr, c / n, c / n ** 2, float(free.cumulant(k)) / k))
    return rows


def centered_unit_spectrum(n: int) -> np.ndarray:
    """Evenly spaced spectrum with sum 0 and sum of squares N."""
    if n < 2:
        raise UsageError(f"Need N >= 2 for a centered spectrum, got {n}")
    d = np.arange(n, dtype=float) - (n - 1) / 2.0
    return d * math.sqrt(n / math.fsum(d * d))


def haar_entry_variance_mc(n: int, trials: int, seed: int) -> HaarVarianceResult:
    """Var(X_11) for a centered unit-variance spectrum; the exact complex-Haar value is 1/(N+1)."""
    x = _entry_samples(centered_unit_spectrum(n), n, trials, seed)
    # E[X_11] = 0 exactly, so the second moment is the variance
    est = MomentEstimate.from_samples(list(x * x))
    log.info(f"haar: N={n} trials={trials} var={est.value:.6g} exact={1.0 / (n + 1):.6g}")
    return HaarVarianceResult(est, 1.0 / (n + 1))
