"""Shared random-instance generators for the test suite."""

from __future__ import annotations

import numpy as np

from ellipsoid.engine import EllipsoidState, log_unit_ball_volume
from ellipsoid.linalg import symmetrize
from ellipsoid.solver import Constraint, LinearSystem


def unit_direction(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.normal(size=n)
    return v / float(np.linalg.norm(v))


def random_pd(rng: np.random.Generator, n: int, floor: float = 0.5) -> np.ndarray:
    """G G^T + floor*I: positive definite with eigenvalues >= floor."""
    G = rng.normal(size=(n, n))
    return symmetrize(G @ G.T + floor * np.eye(n))


def random_state(rng: np.random.Generator, n: int) -> EllipsoidState:
    """Random ellipsoid; log-volume derived independently via slogdet."""
    K = random_pd(rng, n)
    sign, logdet = np.linalg.slogdet(K)
    assert sign > 0.0
    center = rng.normal(scale=2.0, size=n)
    return EllipsoidState(center, K, log_unit_ball_volume(n) + 0.5 * float(logdet))


def sample_in_ellipsoid(
    rng: np.random.Generator, state: EllipsoidState, count: int
) -> np.ndarray:
    """Uniform points inside the ellipsoid: ball sample mapped through chol(K)."""
    n = state.dim
    L = np.linalg.cholesky(state.shape)
    g = rng.normal(size=(count, n))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    r = rng.uniform(0.0, 1.0, size=(count, 1)) ** (1.0 / n)
    return state.center + (g * r) @ L.T


def feasible_instance(
    rng: np.random.Generator, n: int, m: int, radius: float = 2.0, rho: float = 0.05
) -> tuple[LinearSystem, np.ndarray]:
    """System whose region contains the ball of radius rho around a known point.

    Every row is a.x >= a.p - rho for a unit normal a, so the whole ball
    B(p, rho) satisfies it; p is kept rho + 0.1 inside the bounding ball.
    """
    p = unit_direction(rng, n) * rng.uniform(0.0, radius - rho - 0.1)
    rows = []
    for _ in range(m):
        a = unit_direction(rng, n)
        rows.append(Constraint(a, float(a @ p) - rho))
    return LinearSystem(n, tuple(rows), radius), p


def infeasible_instance(
    rng: np.random.Generator, n: int, m: int, radius: float = 2.0
) -> LinearSystem:
    """Empty slab u.x >= b and u.x <= b - gap, padded with always-true rows."""
    u = unit_direction(rng, n)
    b = float(rng.uniform(-0.3 * radius, 0.3 * radius))
    gap = float(rng.uniform(0.1 * radius, 0.3 * radius))
    rows = [Constraint(u, b), Constraint(-u, -(b - gap))]
    for _ in range(m - 2):
        rows.append(Constraint(unit_direction(rng, n), -(radius + 1.0)))
    return LinearSystem(n, tuple(rows), radius)
