"""Tests for the multi-restart projected gradient search on the unit sphere."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import gauss_matrix
from optrig import (
    NonFiniteObjective,
    SphereOptConfig,
    haar_unit_vector,
    maximize_on_sphere,
    minimize_on_sphere,
)

seeds = st.integers(min_value=0, max_value=2**31 - 1)
dims = st.integers(min_value=1, max_value=5)


def rayleigh(H):
    def value(x):
        return float(np.real(np.vdot(x, H @ x)))

    def gradient(x):
        return 2.0 * (H @ x)

    return value, gradient


@given(seeds, dims)
def test_minimizes_rayleigh_quotient_to_smallest_eigenvalue(seed, n):
    rng = np.random.default_rng(seed)
    m = gauss_matrix(rng, n)
    H = (m + m.conj().T) / 2.0
    lo = float(np.linalg.eigvalsh(H)[0])
    value, gradient = rayleigh(H)
    res = minimize_on_sphere(value, n, SphereOptConfig(restarts=8), gradient)
    assert res.value == pytest.approx(lo, abs=1e-7)
    assert np.linalg.norm(res.argmin) == pytest.approx(1.0)
    assert res.restarts_agreeing >= 1


@given(seeds, dims)
def test_maximizes_rayleigh_quotient_to_largest_eigenvalue(seed, n):
    rng = np.random.default_rng(seed)
    m = gauss_matrix(rng, n)
    H = (m + m.conj().T) / 2.0
    hi = float(np.linalg.eigvalsh(H)[-1])
    value, gradient = rayleigh(H)
    res = maximize_on_sphere(value, n, SphereOptConfig(restarts=8), gradient)
    assert res.value == pytest.approx(hi, abs=1e-7)


def test_finite_difference_fallback_matches_analytic():
    rng = np.random.default_rng(5)
    m = gauss_matrix(rng, 3)
    H = (m + m.conj().T) / 2.0
    value, gradient = rayleigh(H)
    with_g = minimize_on_sphere(value, 3, SphereOptConfig(restarts=4), gradient)
    without_g = minimize_on_sphere(value, 3, SphereOptConfig(restarts=4))
    assert with_g.value == pytest.approx(without_g.value, abs=1e-6)


def test_deterministic_for_fixed_seed():
    rng = np.random.default_rng(11)
    m = gauss_matrix(rng, 4)
    H = (m + m.conj().T) / 2.0
    value, gradient = rayleigh(H)
    cfg = SphereOptConfig(restarts=6, seed=123)
    a = minimize_on_sphere(value, 4, cfg, gradient)
    b = minimize_on_sphere(value, 4, cfg, gradient)
    assert a.value == b.value
    assert np.array_equal(a.argmin, b.argmin)
    other = minimize_on_sphere(value, 4, SphereOptConfig(restarts=6, seed=124), gradient)
    assert other.value == pytest.approx(a.value, abs=1e-7)


def test_descends_objective_with_zero_floor():
    # |<x, K x>|^2 for K = i * diag(-1/2, 1/2) bottoms out at exactly zero
    # along |x1| = |x2|; the search must not stall partway down the valley.
    K = np.diag([-0.5j, 0.5j])

    def value(x):
        q = complex(np.vdot(x, K @ x))
        return q.real * q.real + q.imag * q.imag

    res = minimize_on_sphere(value, 2, SphereOptConfig(restarts=8))
    assert res.value <= 1e-14


def test_rejection_sentinel_skips_infeasible_starts():
    def value(x):
        if abs(x[0]) < 0.2:
            return np.inf
        return float(abs(x[0]))

    res = minimize_on_sphere(value, 2, SphereOptConfig(restarts=8))
    assert 0.2 <= res.value <= 0.2 + 1e-2


def test_nan_objective_raises():
    def value(x):
        return float("nan")

    with pytest.raises(NonFiniteObjective):
        minimize_on_sphere(value, 2, SphereOptConfig(restarts=2))


def test_everywhere_infeasible_raises():
    def value(x):
        return np.inf

    with pytest.raises(NonFiniteObjective):
        minimize_on_sphere(value, 2, SphereOptConfig(restarts=2))


def test_config_validation():
    with pytest.raises(ValueError):
        SphereOptConfig(restarts=0)
    with pytest.raises(ValueError):
        SphereOptConfig(max_iters=0)
    with pytest.raises(ValueError):
        SphereOptConfig(step_tol=0.0)
    with pytest.raises(ValueError):
        SphereOptConfig(value_tol=-1.0)
    with pytest.raises(ValueError):
        minimize_on_sphere(lambda x: 0.0, 0)


@given(seeds)
def test_result_beats_random_probes(seed):
    rng = np.random.default_rng(seed)
    m = gauss_matrix(rng, 3)
    H = (m + m.conj().T) / 2.0
    value, gradient = rayleigh(H)
    res = minimize_on_sphere(value, 3, SphereOptConfig(restarts=4), gradient)
    for _ in range(50):
        assert res.value <= value(haar_unit_vector(rng, 3)) + 1e-9
