"""
Author: Brian Gunnison

Brief: Haar unitaries and per-trial random streams.

Details: A standard complex Gaussian matrix is orthonormalized by QR and the
columns are multiplied by the phases of diag(R). Without that phase fix the
result is not Haar distributed. Streams are Philox generators keyed by
(seed, trial, generator), so a trial's draws do not depend on scheduling.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import numpy as np
from scipy import linalg

from src.errors import NumericError, UsageError
from src.util.env import get_env_float

UNITARITY_TOL = 1e-9


def unitarity_tol() -> float:
    return get_env_float("FREECALC_UNITARITY_TOL", UNITARITY_TOL)


def trial_rng(seed: int, trial: int, generator: int = 0) -> np.random.Generator:
    if seed < 0 or seed >= 2 ** 64:
        raise UsageError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(trial, generator))))


def sample_haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    if n < 1:
        raise UsageError(f"Matrix size must be >= 1, got {n}")
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def unitarity_defect(u: np.ndarray) -> float:
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def check_unitary(u: np.ndarray, tol: float | None = None) -> None:
    tol = unitarity_tol() if tol is None else tol
    err = unitarity_defect(u)
    if err > tol:
        raise NumericError(f"Sampled matrix is not unitary: max|U*U - I| = {err:.3e}")
