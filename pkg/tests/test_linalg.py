"""Tests for the dense symmetric kernels."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipsoid.linalg import (
    NotPositiveDefiniteError,
    cholesky,
    log_det_pd,
    mat_vec,
    quadratic_form,
    rank1_downdate,
    solve_pd,
    symmetrize,
)
from instances import random_pd

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_mat_vec_reference_values():
    np.testing.assert_array_equal(
        mat_vec(np.eye(3), np.array([1.0, 2.0, 3.0])), [1.0, 2.0, 3.0]
    )
    np.testing.assert_array_equal(
        mat_vec(np.diag([4.0, 1.0]), np.array([1.0, 1.0])), [4.0, 1.0]
    )
    np.testing.assert_array_equal(
        mat_vec(np.array([[2.0, 1.0], [1.0, 2.0]]), np.array([1.0, -1.0])), [1.0, -1.0]
    )


def test_mat_vec_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        mat_vec(np.eye(2), np.array([1.0, 2.0, 3.0]))
    with pytest.raises(ValueError):
        mat_vec(np.zeros((2, 3)), np.array([1.0, 2.0, 3.0]))


def test_quadratic_form_reference_values():
    assert quadratic_form(np.eye(2), np.array([3.0, 4.0])) == 25.0
    assert quadratic_form(np.diag([4.0, 1.0]), np.array([1.0, 1.0])) == 5.0
    assert quadratic_form(np.array([[2.0, 1.0], [1.0, 2.0]]), np.zeros(2)) == 0.0


def test_rank1_downdate_reference_values():
    out = rank1_downdate(np.eye(2), np.array([1.0, 0.0]), 2.0 / 3.0)
    np.testing.assert_allclose(out, np.diag([1.0 / 3.0, 1.0]), rtol=0, atol=1e-15)

    M = np.array([[2.0, 1.0], [1.0, 2.0]])
    np.testing.assert_array_equal(rank1_downdate(M, np.array([1.0, 1.0]), 0.0), M)

    out = rank1_downdate(np.diag([4.0, 4.0]), np.array([2.0, 0.0]), 0.5)
    np.testing.assert_array_equal(out, np.diag([2.0, 4.0]))


def test_rank1_downdate_rejects_negative_beta():
    with pytest.raises(ValueError):
        rank1_downdate(np.eye(2), np.array([1.0, 0.0]), -0.1)


def test_cholesky_reference_values():
    np.testing.assert_array_equal(cholesky(np.diag([4.0, 1.0])), np.diag([2.0, 1.0]))
    np.testing.assert_array_equal(cholesky(np.eye(4)), np.eye(4))
    assert cholesky(np.array([[1.0, 2.0], [2.0, 1.0]])) is None


def test_cholesky_rejects_non_square():
    with pytest.raises(ValueError):
        cholesky(np.zeros((2, 3)))


def test_cholesky_strict_pivot_mode():
    # The default tolerance is relative to the largest diagonal entry, so a
    # huge condition number reads as failure even for an exactly diagonal
    # matrix; pivot_tol=0.0 only demands strictly positive pivots.
    M = np.diag([1e-20, 1e6])
    assert cholesky(M) is None
    L = cholesky(M, pivot_tol=0.0)
    assert L is not None
    np.testing.assert_allclose(L @ L.T, M, rtol=1e-15)
    # Indefinite stays rejected in both modes.
    assert cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]), pivot_tol=0.0) is None


def test_log_det_reference_values():
    assert log_det_pd(np.eye(5)) == 0.0
    assert log_det_pd(np.diag([4.0, 1.0])) == pytest.approx(math.log(4.0), abs=1e-14)
    e = math.e
    assert log_det_pd(np.diag([e, e, e])) == pytest.approx(3.0, abs=1e-14)


def test_log_det_rejects_indefinite():
    with pytest.raises(NotPositiveDefiniteError):
        log_det_pd(np.array([[1.0, 2.0], [2.0, 1.0]]))


def test_solve_pd_reference_values():
    np.testing.assert_array_equal(solve_pd(np.eye(2), np.array([5.0, 7.0])), [5.0, 7.0])
    np.testing.assert_array_equal(
        solve_pd(np.diag([4.0, 1.0]), np.array([8.0, 3.0])), [2.0, 3.0]
    )
    np.testing.assert_allclose(
        solve_pd(np.array([[2.0, 1.0], [1.0, 2.0]]), np.array([3.0, 3.0])),
        [1.0, 1.0],
        rtol=0,
        atol=1e-14,
    )


def test_solve_pd_rejects_indefinite_and_bad_rhs():
    with pytest.raises(NotPositiveDefiniteError):
        solve_pd(np.array([[1.0, 2.0], [2.0, 1.0]]), np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        solve_pd(np.eye(2), np.array([1.0, 2.0, 3.0]))


def test_symmetrize_is_bitwise_symmetric():
    M = np.array([[1.0, 2.0], [3.0, 4.0]])
    S = symmetrize(M)
    assert np.array_equal(S, S.T)
    np.testing.assert_array_equal(S, [[1.0, 2.5], [2.5, 4.0]])


@given(seeds, st.integers(min_value=1, max_value=7))
@settings(max_examples=60, deadline=None)
def test_quadratic_form_respects_pd_floor(seed, n):
    rng = np.random.default_rng(seed)
    delta = 0.5
    M = random_pd(rng, n, floor=delta)
    v = rng.normal(scale=3.0, size=n)
    assert quadratic_form(M, v) >= delta * float(v @ v) - 1e-9


@given(seeds, st.integers(min_value=1, max_value=7))
@settings(max_examples=60, deadline=None)
def test_cholesky_reconstructs_input(seed, n):
    rng = np.random.default_rng(seed)
    M = random_pd(rng, n)
    L = cholesky(M)
    assert L is not None
    err = np.abs(L @ L.T - M)
    assert np.all(err <= 1e-10 * (1.0 + np.abs(M)))


@given(seeds, st.integers(min_value=1, max_value=7))
@settings(max_examples=60, deadline=None)
def test_solve_pd_residual_is_small(seed, n):
    rng = np.random.default_rng(seed)
    M = random_pd(rng, n)
    rhs = rng.normal(scale=5.0, size=n)
    y = solve_pd(M, rhs)
    residual = np.max(np.abs(mat_vec(M, y) - rhs))
    assert residual <= 1e-8 * (1.0 + np.max(np.abs(rhs)))


@given(seeds, st.integers(min_value=1, max_value=7))
@settings(max_examples=60, deadline=None)
def test_rank1_downdate_output_exactly_symmetric(seed, n):
    rng = np.random.default_rng(seed)
    M = random_pd(rng, n)
    w = rng.normal(size=n)
    D = rank1_downdate(M, w, float(rng.uniform(0.0, 2.0)))
    assert np.array_equal(D, D.T)


@given(seeds, st.integers(min_value=2, max_value=6), st.floats(0.05, 0.9))
@settings(max_examples=60, deadline=None)
def test_downdate_matches_determinant_lemma(seed, n, frac):
    # det(M - beta w w^T) = det(M) * (1 - beta * w^T M^{-1} w)
    rng = np.random.default_rng(seed)
    M = random_pd(rng, n)
    w = rng.normal(size=n)
    q = float(w @ solve_pd(M, w))
    beta = frac / q  # keeps the downdated matrix safely PD
    expected = log_det_pd(M) + math.log1p(-beta * q)
    assert log_det_pd(rank1_downdate(M, w, beta)) == pytest.approx(expected, abs=1e-8)
