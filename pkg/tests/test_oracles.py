"""Tests for the brute-force grid and sampling oracles."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import gauss_matrix
from optrig import (
    GridSpec,
    NonFiniteObjective,
    grid_flat_interval,
    grid_min_complex,
    grid_min_real,
    sphere_refine_min,
    sphere_sample_max,
    sphere_sample_min,
)

seeds = st.integers(min_value=0, max_value=2**31 - 1)


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(1.0, 1.0)
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, points=2)
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, refine_rounds=-1)


@given(st.floats(-3.0, 3.0), st.floats(0.1, 5.0))
def test_grid_min_real_finds_parabola_vertex(center, curvature):
    spec = GridSpec(-5.0, 5.0)
    x, v = grid_min_real(lambda t: curvature * (t - center) ** 2 + 1.0, spec)
    assert x == pytest.approx(center, abs=1e-3)
    assert v == pytest.approx(1.0, abs=1e-4)


def test_grid_min_real_honors_bounds():
    x, v = grid_min_real(lambda t: (t - 10.0) ** 2, GridSpec(-1.0, 1.0))
    assert x == pytest.approx(1.0)
    assert v == pytest.approx(81.0)


def test_grid_min_real_rejects_nan():
    with pytest.raises(NonFiniteObjective):
        grid_min_real(lambda t: float("nan"), GridSpec(0.0, 1.0))


def test_grid_flat_interval_brackets_sublevel_set():
    lo, hi = grid_flat_interval(lambda t: max(abs(t) - 1.0, 0.0), GridSpec(-3.0, 3.0), 1e-9)
    assert lo == pytest.approx(-1.0, abs=0.02)
    assert hi == pytest.approx(1.0, abs=0.02)


@given(st.floats(-2.0, 2.0), st.floats(-2.0, 2.0))
def test_grid_min_complex_finds_disk_center(re, im):
    z0 = complex(re, im)
    z, v = grid_min_complex(lambda z: abs(z - z0), 4.0, GridSpec(-4.0, 4.0, 41, 4))
    assert abs(z - z0) < 2e-3
    assert v < 2e-3


def test_grid_min_complex_validates_radius():
    with pytest.raises(ValueError):
        grid_min_complex(lambda z: abs(z), 0.0, GridSpec(-1.0, 1.0))


@given(seeds)
def test_sphere_sample_min_upper_bounds_rayleigh_floor(seed):
    rng = np.random.default_rng(seed)
    m = gauss_matrix(rng, 3)
    H = (m + m.conj().T) / 2.0
    eigs = np.linalg.eigvalsh(H)

    def value(x):
        return float(np.real(np.vdot(x, H @ x)))

    v, x = sphere_sample_min(value, 3, samples=4000, seed=seed)
    assert eigs[0] - 1e-12 <= v
    # raw sampling resolution at n = 3 is coarse; allow a spread-relative gap
    assert v <= eigs[0] + 0.05 * (eigs[-1] - eigs[0]) + 1e-9
    assert value(x) == pytest.approx(v)


def test_sphere_sample_min_exact_on_c2_sweep():
    # the n = 2 deterministic sweep covers the sphere finely enough that
    # a smooth objective is matched to much better than the 1e-3 contract
    H = np.diag([-1.0, 2.0])

    def value(x):
        return float(np.real(np.vdot(x, H @ x)))

    v, _ = sphere_sample_min(value, 2, samples=10, seed=0)
    assert v == pytest.approx(-1.0, abs=1e-4)


def test_sphere_sample_max_mirrors_min():
    H = np.diag([-1.0, 2.0])

    def value(x):
        return float(np.real(np.vdot(x, H @ x)))

    v, _ = sphere_sample_max(value, 2, samples=10, seed=0)
    assert v == pytest.approx(2.0, abs=1e-4)


def test_sphere_sample_min_skips_rejected_points():
    def value(x):
        if abs(x[0]) < 0.5:
            return np.inf
        return float(abs(x[0]))

    v, x = sphere_sample_min(value, 2, samples=500, seed=1)
    assert v >= 0.5
    assert np.isfinite(v)


def test_sphere_sample_min_rejects_nan_and_empty():
    with pytest.raises(NonFiniteObjective):
        sphere_sample_min(lambda x: float("nan"), 2, samples=3, seed=0)
    with pytest.raises(NonFiniteObjective):
        sphere_sample_min(lambda x: np.inf, 3, samples=3, seed=0)
    with pytest.raises(ValueError):
        sphere_sample_min(lambda x: 0.0, 2, samples=0, seed=0)


def test_sphere_sample_min_deterministic():
    def value(x):
        return float(abs(x[0]))

    a = sphere_sample_min(value, 3, samples=200, seed=9)
    b = sphere_sample_min(value, 3, samples=200, seed=9)
    assert a[0] == b[0]
    assert np.array_equal(a[1], b[1])


def test_sphere_refine_min_resolves_rayleigh_floor():
    rng = np.random.default_rng(41)
    for n in (2, 3, 4):
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        H = g + g.conj().T

        def value(x):
            return float(np.real(np.vdot(x, H @ x)))

        lo = float(np.linalg.eigvalsh(H)[0])
        v, x = sphere_refine_min(value, n, samples=2000, seed=0)
        assert v >= lo - 1e-12
        assert v == pytest.approx(lo, abs=1e-4)
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)


def test_sphere_refine_min_beats_plain_sampling():
    # Modulus pairing objective with a zero floor: plain sampling stalls,
    # the resampling stages should get within 1e-6 of zero.
    K = np.diag([-0.5j, 0.5j])

    def value(x):
        return float(abs(np.vdot(x, K @ x)))

    v, _ = sphere_refine_min(value, 2, samples=2000, seed=3)
    assert v < 1e-6


def test_sphere_refine_min_is_upper_bound_and_deterministic():
    def value(x):
        return float(abs(x[0]) ** 2 + 0.25)

    a = sphere_refine_min(value, 3, samples=300, rounds=4, seed=7)
    b = sphere_refine_min(value, 3, samples=300, rounds=4, seed=7)
    assert a[0] == b[0]
    assert np.array_equal(a[1], b[1])
    assert a[0] >= 0.25


def test_sphere_refine_min_validates_and_rejects_nan():
    with pytest.raises(ValueError):
        sphere_refine_min(lambda x: 0.0, 2, samples=0)
    with pytest.raises(ValueError):
        sphere_refine_min(lambda x: 0.0, 2, chains=0)
    with pytest.raises(ValueError):
        sphere_refine_min(lambda x: 0.0, 2, rounds=-1)
    with pytest.raises(NonFiniteObjective):
        sphere_refine_min(lambda x: float("nan"), 2, samples=3)
    with pytest.raises(NonFiniteObjective):
        sphere_refine_min(lambda x: np.inf, 2, samples=3)
