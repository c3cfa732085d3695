from __future__ import annotations

import math

import numpy as np
import pytest

from src.analytic.measures import NamedLaw, moments_of, parse_law
from src.cumulants.mixed import FreeFamilySpec, free_mixed_moment
from src.errors import NumericError, UsageError
from src.rmt.experiments import (
    centered_unit_spectrum,
    corner_size,
    entry_cumulant_mc,
    haar_entry_variance_mc,
    ks_distance,
    mixed_moment_mc,
    submatrix_spectrum,
    sum_spectrum_experiment,
)
from src.rmt.haar import check_unitary, sample_haar_unitary, trial_rng, unitarity_defect
from src.rmt.models import EmpiricalSpectrum, MatrixModel, MomentEstimate, realize_model
from src.rmt.spectra import explicit_spectrum, spectrum_of

PLUS_MINUS = parse_law("bernoulli:1/2:-1:1")


def test_haar_unitaries_are_unitary():
    for n in (1, 5, 30):
        u = sample_haar_unitary(n, trial_rng(3, 0))
        assert unitarity_defect(u) < 1e-12
    with pytest.raises(UsageError):
        sample_haar_unitary(0, trial_rng(3, 0))
    with pytest.raises(UsageError):
        trial_rng(-1, 0)


def test_unitarity_tolerance_from_env(monkeypatch):
    u = sample_haar_unitary(20, trial_rng(3, 0))
    check_unitary(u)
    monkeypatch.setenv("FREECALC_UNITARITY_TOL", "1e-30")
    with pytest.raises(NumericError):
        check_unitary(u)
    monkeypatch.setenv("FREECALC_UNITARITY_TOL", "junk")
    check_unitary(u)
    with pytest.raises(NumericError):
        check_unitary(2 * u, tol=1e-3)


def test_trial_streams_are_keyed():
    a = sample_haar_unitary(4, trial_rng(9, 2, 1))
    b = sample_haar_unitary(4, trial_rng(9, 2, 1))
    c = sample_haar_unitary(4, trial_rng(9, 2, 0))
    assert np.array_equal(a, b)
    assert not np.allclose(a, c)


def test_spectrum_of_laws():
    assert spectrum_of(NamedLaw.projection("1/2"), 4).tolist() == [0.0, 0.0, 1.0, 1.0]
    assert spectrum_of(NamedLaw.projection("1/3"), 4).tolist() == [0.0, 0.0, 0.0, 1.0]
    semi = spectrum_of(NamedLaw.semicircle(1), 101)
    assert semi[50] == pytest.approx(0.0, abs=1e-12)
    assert np.all(np.diff(semi) > 0)
    assert ks_distance(semi, NamedLaw.semicircle(1)) <= 1.0 / 101
    with pytest.raises(UsageError):
        spectrum_of(NamedLaw.semicircle(1), 0)


def test_explicit_spectrum():
    assert explicit_spectrum([2, -1, 0], 3).tolist() == [-1.0, 0.0, 2.0]
    with pytest.raises(UsageError):
        explicit_spectrum([1, 2], 3)
    with pytest.raises(UsageError):
        explicit_spectrum([1, float("nan")], 2)


def test_centered_unit_spectrum():
    d = centered_unit_spectrum(7)
    assert math.fsum(d) == pytest.approx(0.0, abs=1e-12)
    assert math.fsum(d * d) == pytest.approx(7.0)
    with pytest.raises(UsageError):
        centered_unit_spectrum(1)


def test_matrix_model_validation_and_realization():
    with pytest.raises(UsageError):
        MatrixModel(3, (np.zeros(2),), 0)
    with pytest.raises(UsageError):
        MatrixModel(3, (), 0)
    d = np.array([-1.0, 0.5, 2.0, 3.0])
    model = MatrixModel(4, (d, d[::-1]), 11)
    xs = realize_model(model, 0)
    assert len(xs) == 2
    for x in xs:
        assert np.allclose(x, x.conj().T)
        assert np.allclose(np.linalg.eigvalsh(x), np.sort(d))
    again = realize_model(model, 0)
    assert np.array_equal(xs[0], again[0])


def test_empirical_spectrum():
    spec = EmpiricalSpectrum.from_values([3.0, -1.0, 1.0, 1.0])
    assert spec.size == 4
    assert spec.moment(1) == pytest.approx(1.0)
    assert spec.moment(2) == pytest.approx(3.0)
    hist = spec.with_histogram(4, lo=-2.0, hi=2.0)
    assert int(hist.counts.sum()) == 4
    assert hist.edges[0] == -2.0 and hist.edges[-1] == 3.0
    with pytest.raises(UsageError):
        spec.with_histogram(0)
    with pytest.raises(UsageError):
        EmpiricalSpectrum(np.array([2.0, 1.0]))


def test_moment_estimate():
    est = MomentEstimate.from_samples([1.0, 2.0, 3.0])
    assert est.value == pytest.approx(2.0)
    assert est.stderr == pytest.approx(1.0 / math.sqrt(3.0))
    assert est.within(2.5)
    assert not est.within(4.0)
    assert MomentEstimate.from_samples([5.0]).stderr == 0.0


def test_mixed_moment_estimates():
    a = spectrum_of(NamedLaw.projection("1/2"), 20)
    b = spectrum_of(PLUS_MINUS, 20)
    model = MatrixModel(20, (a, b), 5)
    assert mixed_moment_mc(model, [1], 3).value == pytest.approx(0.5)
    assert mixed_moment_mc(model, [2, 2], 3).value == pytest.approx(1.0)
    assert mixed_moment_mc(model, [1, 2], 200).within(0.0, sigmas=4.0)
    for bad in ([], [3], [0, 1]):
        with pytest.raises(UsageError):
            mixed_moment_mc(model, bad, 2)


def test_results_do_not_depend_on_worker_count(monkeypatch):
    a = spectrum_of(NamedLaw.projection("1/2"), 12)
    model = MatrixModel(12, (a, a), 77)
    serial = mixed_moment_mc(model, [1, 2, 1, 2], 16)
    monkeypatch.setenv("FREECALC_WORKERS", "4")
    parallel = mixed_moment_mc(model, [1, 2, 1, 2], 16)
    assert serial == parallel


def test_sum_with_zero_matrix_returns_first_spectrum():
    a = spectrum_of(NamedLaw.semicircle(1), 16)
    res = sum_spectrum_experiment(a, np.zeros(16), 16, 2, 1, bins=5)
    assert np.allclose(res.spectrum.eigenvalues, np.sort(np.concatenate([a, a])), atol=1e-9)
    assert int(res.spectrum.counts.sum()) == 32
    assert [row.k for row in res.moments] == [1, 2, 3, 4]
    assert res.ks is None


def test_full_corner_returns_spectrum():
    d = spectrum_of(PLUS_MINUS, 10)
    res = submatrix_spectrum(d, 10, 1, 1, 3)
    assert np.allclose(res.spectrum.eigenvalues, d, atol=1e-9)
    assert res.moments[1].predicted == pytest.approx(1.0)


def test_corner_size():
    assert corner_size(400, "1/2") == 200
    assert corner_size(9, 1) == 9
    for n, t in ((5, "1/2"), (4, 0), (4, "3/2")):
        with pytest.raises(UsageError):
            corner_size(n, t)


def test_entry_cumulants_of_zero_spectrum():
    rows = entry_cumulant_mc(np.zeros(6), 6, 4, 10, 2)
    assert [r.n for r in rows] == [1, 2, 3, 4]
    assert all(r.cumulant == 0 and r.reference == 0 for r in rows)
    with pytest.raises(UsageError):
        entry_cumulant_mc(np.zeros(6), 6, 7, 10, 2)


@pytest.mark.slow
def test_projection_sum_follows_arcsine():
    p = spectrum_of(NamedLaw.projection("1/2"), 800)
    res = sum_spectrum_experiment(p, p, 800, 1, 42, bins=40, law=NamedLaw.arcsine02())
    assert res.ks is not None and res.ks <= 0.05
    assert 1.45 <= res.moments[1].empirical.value <= 1.55
    assert res.moments[1].predicted == pytest.approx(1.5)


@pytest.mark.slow
def test_haar_entry_variance():
    res = haar_entry_variance_mc(50, 10_000, 7)
    assert res.exact == pytest.approx(1.0 / 51)
    assert res.variance.within(res.exact)


@pytest.mark.slow
def test_corner_compression_matches_prediction():
    d = spectrum_of(PLUS_MINUS, 400)
    res = submatrix_spectrum(d, 400, "1/2", 50, 13)
    expected = [0.0, 0.5, 0.0, 0.375]
    for row, target in zip(res.moments, expected):
        assert row.predicted == pytest.approx(target, abs=1e-12)
        assert row.empirical.within(row.predicted)


@pytest.mark.slow
def test_entry_cumulants_normalized():
    n = 100
    rows = entry_cumulant_mc(centered_unit_spectrum(n), n, 2, 10_000, 21)
    c1, c2 = rows
    assert abs(c1.cumulant / n) <= 3 * c1.stderr / n
    scale = (n + 1) / n ** 2
    assert abs(c2.cumulant * scale - 1.0) <= 3 * c2.stderr * scale


@pytest.mark.slow
def test_mixed_moment_error_shrinks_with_n():
    # a = +-1, b = projection of rank N/2: free value of tr(abab) is 1/4
    word = [1, 2, 1, 2]
    family = FreeFamilySpec((moments_of(PLUS_MINUS, 4), moments_of(NamedLaw.projection("1/2"), 4)))
    target = float(free_mixed_moment(family, word))
    assert target == pytest.approx(0.25)
    estimates = {}
    for n in (64, 512):
        model = MatrixModel(n, (spectrum_of(PLUS_MINUS, n), spectrum_of(NamedLaw.projection("1/2"), n)), 31)
        estimates[n] = mixed_moment_mc(model, word, 20)
        assert estimates[n].within(target, sigmas=4.0)
    small, large = estimates[64], estimates[512]
    assert large.stderr < small.stderr / 2
    assert abs(large.value - target) <= max(abs(small.value - target), 4.0 * large.stderr)
    assert abs(large.value - target) <= 8.0 / 512
