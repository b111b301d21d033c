"""Ellipsoid state and the central-cut update.

An ellipsoid is the set ``{x : (x - c)^T K^{-1} (x - c) <= 1}`` for a center
``c`` and a symmetric positive definite shape matrix ``K``.  The engine never
forms ``K^{-1}``: membership tests solve against ``K`` and the update works
on ``K`` directly.

Given a cut normal ``a`` (nonzero), the central-cut update replaces the
current ellipsoid with the smallest-volume ellipsoid containing the half

    {x in E : a^T x >= a^T c},

i.e. the half of E on the side the cut normal points to.  With
``alpha = sqrt(a^T K a)`` the new ellipsoid is

    c' = c + K a / ((n + 1) * alpha)
    K' = n^2/(n^2 - 1) * (K - 2/(n + 1) * (K a)(K a)^T / (a^T K a))

The cut plane ``a^T x = a^T c`` passes through the center, so orientation is
a pure sign convention: this module keeps the ``>=`` side, and the center
moves along ``+K a``.  Each update shrinks the volume by the same
dimension-only factor (see :func:`step_log_ratio`), which lets the state
carry its log-volume incrementally instead of recomputing determinants.

Update formulas have an ``n^2 - 1`` denominator, so ``n >= 2`` is required
here; one-dimensional problems are handled upstream by interval arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    NotPositiveDefiniteError,
    as_vector,
    cholesky,
    log_det_pd,
    mat_vec,
    rank1_downdate,
    solve_pd,
    symmetrize,
)

# a^T K a at or below this is treated as a degenerate cut: the square root
# and the division in the update would be meaningless.
QF_FLOOR = 1e-300

# Tolerance on the membership quadratic form; strict-vs-nonstrict boundary
# distinctions are meaningless in floating point.
CONTAINMENT_SLACK = 1e-9


class DegenerateCutError(ArithmeticError):
    """Cut normal has (numerically) zero extent in the current ellipsoid."""


class PDLostError(ArithmeticError):
    """Shape matrix lost positive definiteness after an update."""


def log_unit_ball_volume(n: int) -> float:
    """ln of the volume of the n-dimensional unit ball."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return 0.5 * n * math.log(math.pi) - math.lgamma(0.5 * n + 1.0)


@dataclass(frozen=True)
class Cut:
    """A half-space boundary through the current center.

    ``provenance`` records which constraint produced the cut (its index), or
    the string "synthetic" for cuts not tied to any constraint row.
    """

    normal: np.ndarray
    provenance: int | str = "synthetic"

    def __post_init__(self):
        normal = as_vector(self.normal)
        if not float(np.linalg.norm(normal)) > 1e-300:
            raise ValueError("cut normal must be nonzero")
        normal = normal.copy()
        normal.flags.writeable = False
        object.__setattr__(self, "normal", normal)


@dataclass(frozen=True)
class EllipsoidState:
    """Immutable ellipsoid: center, PD shape matrix, and running log-volume."""

    center: np.ndarray
    shape: np.ndarray
    log_volume: float

    def __post_init__(self):
        center = as_vector(self.center).copy()
        shape = np.array(self.shape, dtype=float)
        if shape.shape != (center.size, center.size):
            raise ValueError(
                f"shape matrix {shape.shape} does not match center of length {center.size}"
            )
        center.flags.writeable = False
        shape.flags.writeable = False
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "shape", shape)

    @property
    def dim(self) -> int:
        return self.center.size


def unit_ball(n: int) -> EllipsoidState:
    """Unit ball at the origin: center 0, shape I."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return EllipsoidState(np.zeros(n), np.eye(n), log_unit_ball_volume(n))


def ball(n: int, radius: float, center=None) -> EllipsoidState:
    """Ball of given radius: shape = radius^2 * I."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if not radius > 0.0:
        raise ValueError(f"radius must be > 0, got {radius}")
    c = np.zeros(n) if center is None else as_vector(center, n)
    log_volume = log_unit_ball_volume(n) + n * math.log(radius)
    return EllipsoidState(c, radius * radius * np.eye(n), log_volume)


def step_log_ratio(n: int) -> float:
    """Exact per-cut change of log-volume in dimension n.

    Equals ``0.5 * (n ln(n^2/(n^2-1)) + ln((n-1)/(n+1)))``, which is always
    below the coarser guarantee ``-1/(2(n+1))``.
    """
    if n < 2:
        raise ValueError(f"central-cut update needs dimension >= 2, got {n}")
    nn = float(n)
    return 0.5 * (nn * math.log(nn * nn / (nn * nn - 1.0)) + math.log((nn - 1.0) / (nn + 1.0)))


def central_cut_update(state: EllipsoidState, cut: Cut) -> EllipsoidState:
    """Smallest ellipsoid containing {x in state : a^T x >= a^T center}.

    Raises :class:`DegenerateCutError` when ``a^T K a`` underflows and
    :class:`PDLostError` when the updated shape fails PD certification.
    """
    n = state.dim
    if n < 2:
        raise ValueError(f"central-cut update needs dimension >= 2, got {n}")
    a = as_vector(cut.normal, n)

    K = state.shape
    Ka = mat_vec(K, a)
    aKa = float(a @ Ka)
    if not aKa > QF_FLOOR:
        raise DegenerateCutError(f"a^T K a = {aKa} is not positive; cut is degenerate")

    alpha = math.sqrt(aKa)
    center = state.center + Ka / ((n + 1) * alpha)

    # K - 2/(n+1) * (Ka)(Ka)^T / aKa, then the n^2/(n^2-1) blow-up.
    shrunk = rank1_downdate(K, Ka, 2.0 / ((n + 1) * aKa))
    shape = symmetrize(n * n / (n * n - 1.0) * shrunk)

    # Certify with strictly positive pivots rather than the relative
    # tolerance: long one-directional cut sequences drive the condition
    # number up geometrically while the matrix stays genuinely PD.
    if cholesky(shape, pivot_tol=0.0) is None:
        raise PDLostError("updated shape matrix is no longer positive definite")

    return EllipsoidState(center, shape, state.log_volume + step_log_ratio(n))


def contains(state: EllipsoidState, x, slack: float = CONTAINMENT_SLACK) -> bool:
    """Membership test (x - c)^T K^{-1} (x - c) <= 1 + slack via a PD solve."""
    d = as_vector(x, state.dim) - state.center
    y = solve_pd(state.shape, d)
    return float(d @ y) <= 1.0 + slack


def log_volume_from_shape(state: EllipsoidState) -> float:
    """Recompute the log-volume from det K (audit for the incremental value)."""
    return log_unit_ball_volume(state.dim) + 0.5 * log_det_pd(state.shape)


__all__ = [
    "QF_FLOOR",
    "CONTAINMENT_SLACK",
    "Cut",
    "DegenerateCutError",
    "EllipsoidState",
    "NotPositiveDefiniteError",
    "PDLostError",
    "ball",
    "central_cut_update",
    "contains",
    "log_unit_ball_volume",
    "log_volume_from_shape",
    "step_log_ratio",
    "unit_ball",
]
