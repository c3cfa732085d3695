"""
Author: Brian Gunnison

Brief: Normalize and clamp experiment configs before a Monte Carlo run.

Details: Applies bounds and defaults so a config from a file, a preset or the
command line always describes a runnable experiment, and rejects the ones that
cannot be repaired (no seed, letters outside the spectra, t*N not integral).
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from src.errors import UsageError
from src.planner.experiment_plan import ExperimentConfig, to_fraction
from src.util import log

MAX_N = 2000
MAX_TRIALS = 100_000
MAX_BINS = 500
MAX_ENTRY_ORDER = 6
MAX_ORDER = 12

DEFAULT_SPECTRA = {
    "sum": ["proj:1/2", "proj:1/2"],
    "word": ["bernoulli:1/2:-1:1", "bernoulli:1/2:-1:1"],
    "submatrix": ["bernoulli:1/2:-1:1"],
    "entrycum": ["bernoulli:1/2:-1:1"],
    "haar": [],
}


def _clamp(v: int, lo: int, hi: int) -> int:
    return max(lo, min(hi, int(v)))


def normalize_config(cfg: ExperimentConfig) -> ExperimentConfig:
    if cfg.seed is None:
        raise UsageError("--seed is required for Monte Carlo runs")
    if not 0 <= cfg.seed < 2 ** 64:
        raise UsageError(f"Seed must be a 64-bit unsigned integer, got {cfg.seed}")

    n = _clamp(cfg.N, 2 if cfg.experiment == "haar" else 1, MAX_N)
    if n != cfg.N:
        log.warn(f"N={cfg.N} clamped to {n}")
    cfg.N = n
    cfg.trials = _clamp(cfg.trials, 1, MAX_TRIALS)
    if cfg.bins is not None:
        cfg.bins = _clamp(cfg.bins, 1, MAX_BINS)
    cfg.n_max = _clamp(cfg.n_max, 1, MAX_ENTRY_ORDER)
    cfg.order = _clamp(cfg.order, 1, MAX_ORDER)

    needed = {"sum": 2, "word": 2, "submatrix": 1, "entrycum": 1, "haar": 0}[cfg.experiment]
    if len(cfg.spectra) < needed:
        given = len(cfg.spectra)
        cfg.spectra = list(cfg.spectra) + DEFAULT_SPECTRA[cfg.experiment][given:needed]
        if given:
            log.warn(f"{cfg.experiment} needs {needed} spectra, {given} given; filled defaults: {cfg.spectra}")
        else:
            log.info(f"Filled missing spectra: {cfg.spectra}")
    if cfg.experiment == "word":
        if not cfg.word:
            cfg.word = [1, 2]
        if max(cfg.word) > len(cfg.spectra) or min(cfg.word) < 1:
            raise UsageError(f"Word {cfg.word} uses letters outside 1..{len(cfg.spectra)}")
    if cfg.experiment == "submatrix":
        t = to_fraction(cfg.t if cfg.t is not None else "1/2")
        if not 0 < t <= 1:
            raise UsageError(f"t must lie in (0, 1], got {t}")
        if (t * cfg.N).denominator != 1:
            raise UsageError(f"t*N = {t * cfg.N} is not an integer")
        cfg.t = f"{t.numerator}/{t.denominator}" if t.denominator != 1 else str(t.numerator)
    return cfg
