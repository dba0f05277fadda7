"""Tests for antieigenvalue quantities and the min-max identity."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import accretive_matrix, gauss_matrix, unitary_matrix
from optrig import (
    NotAccretive,
    RouteDisagreement,
    SingularOperator,
    SphereOptConfig,
    ZeroImage,
    best_complex_scale,
    best_real_scale,
    cos_t,
    cos_via_center,
    minmax_check_complex,
    minmax_check_real,
    sin_t,
    total_cos_t,
    total_cos_via_center,
    total_trig_report,
    trig_report,
)

seeds = st.integers(min_value=0, max_value=2**31 - 1)
dims = st.integers(min_value=2, max_value=4)
FAST = SphereOptConfig(restarts=12)


def kantorovich_cos(m, M):
    return 2.0 * np.sqrt(m * M) / (m + M)


@pytest.mark.parametrize("m,M", [(1.0, 4.0), (0.5, 2.0), (1.0, 9.0)])
def test_positive_diagonal_matches_closed_forms(m, M):
    T = np.diag([m, M])
    c, x = cos_t(T, FAST)
    assert c == pytest.approx(kantorovich_cos(m, M), abs=1e-9)
    s, eps0 = sin_t(T)
    assert s == pytest.approx((M - m) / (M + m), abs=1e-9)
    assert eps0 == pytest.approx(2.0 / (m + M), abs=1e-8)
    assert s * s + c * c == pytest.approx(1.0, abs=1e-9)
    # the antieigenvector balances the extreme eigenvalues
    assert abs(x[0]) ** 2 == pytest.approx(M / (m + M), abs=1e-6)


def test_total_cos_of_positive_diagonal_equals_cos():
    T = np.diag([1.0, 4.0])
    c, _ = cos_t(T, FAST)
    tc, _ = total_cos_t(T, FAST)
    assert tc == pytest.approx(c, abs=1e-9)


def test_identity_has_cos_one():
    c, _ = cos_t(np.eye(3), FAST)
    assert c == pytest.approx(1.0, abs=1e-12)
    s, eps0 = sin_t(np.eye(3))
    assert s == pytest.approx(0.0, abs=1e-9)
    assert eps0 == pytest.approx(1.0, abs=1e-9)


@given(seeds, dims)
def test_cos_invariant_under_positive_scaling(seed, n):
    rng = np.random.default_rng(seed)
    T = accretive_matrix(rng, n)
    c1, _ = cos_t(T, FAST)
    c2, _ = cos_t(3.7 * T, FAST)
    assert c1 == pytest.approx(c2, abs=1e-8)


@given(seeds, dims)
def test_cos_invariant_under_unitary_similarity(seed, n):
    rng = np.random.default_rng(seed)
    T = accretive_matrix(rng, n)
    U = unitary_matrix(rng, n)
    c1, _ = cos_t(T, FAST)
    c2, _ = cos_t(U.conj().T @ T @ U, FAST)
    assert c1 == pytest.approx(c2, abs=1e-8)


def test_non_accretive_operator_refused():
    with pytest.raises(NotAccretive):
        cos_t(np.diag([1.0, -1.0]))
    with pytest.raises(NotAccretive):
        sin_t(np.diag([1.0, 0.0]))
    with pytest.raises(NotAccretive):
        minmax_check_real(np.diag([-1.0, 2.0]))


def test_singular_operator_refused_unless_allowed():
    T = np.diag([1.0, 0.0])
    with pytest.raises(SingularOperator):
        total_cos_t(T)
    value, x = total_cos_t(T, FAST, allow_singular=True)
    # off the kernel, <Tx, x>/||Tx|| = |x1| which can dip to the guard level
    assert value >= 0.0
    assert np.linalg.norm(x) == pytest.approx(1.0)
    with pytest.raises(SingularOperator):
        total_cos_t(np.zeros((2, 2)), allow_singular=True)


@given(seeds, dims)
def test_best_real_scale_minimizes_pointwise_distance(seed, n):
    rng = np.random.default_rng(seed)
    T = gauss_matrix(rng, n)
    y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    y /= np.linalg.norm(y)
    eps = best_real_scale(T, y)
    base = np.linalg.norm(eps * (T @ y) - y)
    for probe in rng.uniform(-3.0, 3.0, size=10):
        assert base <= np.linalg.norm(float(probe) * (T @ y) - y) + 1e-10


@given(seeds, dims)
def test_best_complex_scale_minimizes_pointwise_distance(seed, n):
    rng = np.random.default_rng(seed)
    T = gauss_matrix(rng, n)
    y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    y /= np.linalg.norm(y)
    lam = best_complex_scale(T, y)
    base = np.linalg.norm(lam * (T @ y) - y)
    for _ in range(10):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        assert base <= np.linalg.norm(z * (T @ y) - y) + 1e-10


def test_best_scale_rejects_kernel_vector():
    T = np.diag([1.0, 0.0])
    with pytest.raises(ZeroImage):
        best_real_scale(T, np.array([0.0, 1.0]))
    with pytest.raises(ZeroImage):
        best_complex_scale(T, np.array([0.0, 1.0]))


@given(seeds, dims)
def test_minmax_identity_real(seed, n):
    rng = np.random.default_rng(seed)
    T = accretive_matrix(rng, n)
    lhs, rhs = minmax_check_real(T, FAST)
    assert lhs == pytest.approx(rhs, abs=1e-5)


@given(seeds, dims)
def test_minmax_identity_complex(seed, n):
    rng = np.random.default_rng(seed)
    T = accretive_matrix(rng, n)
    lhs, rhs = minmax_check_complex(T, FAST)
    assert lhs == pytest.approx(rhs, abs=1e-5)


@given(seeds, dims)
def test_center_route_agrees_with_direct_search(seed, n):
    rng = np.random.default_rng(seed)
    T = accretive_matrix(rng, n)
    direct, _ = cos_t(T, FAST)
    via, w = cos_via_center(T)
    assert via == pytest.approx(direct, abs=1e-6)
    assert np.linalg.norm(w) == pytest.approx(1.0)
    td, _ = total_cos_t(T, FAST)
    tv, _ = total_cos_via_center(T)
    assert tv == pytest.approx(td, abs=1e-6)


@given(seeds, dims)
def test_total_cos_dominates_cos(seed, n):
    rng = np.random.default_rng(seed)
    T = accretive_matrix(rng, n)
    c, _ = cos_t(T, FAST)
    tc, _ = total_cos_t(T, FAST)
    assert tc >= c - 1e-9


def test_reports_bundle_consistent_quantities():
    T = np.diag([1.0, 4.0])
    rep = trig_report(T)
    assert rep.cos_direct == pytest.approx(0.8, abs=1e-9)
    assert rep.sin_value == pytest.approx(0.6, abs=1e-9)
    assert rep.epsilon0 == pytest.approx(0.4, abs=1e-8)
    assert rep.minmax_lhs == pytest.approx(0.36, abs=1e-9)
    assert rep.minmax_rhs == pytest.approx(0.36, abs=1e-9)
    tot = total_trig_report(T)
    assert tot.total_cos_direct == pytest.approx(0.8, abs=1e-9)
    assert tot.lambda0 == pytest.approx(0.4, abs=1e-7)


def test_report_cross_check_can_be_forced_to_fail():
    with pytest.raises(RouteDisagreement):
        trig_report(np.diag([1.0, 4.0]), cross_tol=1e-18)
