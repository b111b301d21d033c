"""Brute-force ground truth for small feasibility instances.

Independent of the cutting loop: candidate points are enumerated from the
constraint geometry (vertex candidates from n-subsets of boundary
hyperplanes, sphere crossings from (n-1)-subsets, and the origin), nudged
slightly into the region interior, and checked against every row.  A dense
grid scan backs up the negative case.  Verdicts are deterministic for a
given system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Union

import numpy as np

from .solver import LinearSystem

# Feasibility slack for accepting a candidate, scaled per row by 1 + |b|.
WITNESS_TOL = 1e-12
# Inward nudge applied to boundary candidates, as a fraction of R.
INTERIOR_NUDGE = 1e-7
# The built-in grid pass uses step R/200 per axis, i.e. 401 points.
GRID_POINTS = 401

MAX_DIM = 4
MAX_GRID_DIM = 3
MAX_CONSTRAINTS = 20


@dataclass(frozen=True)
class FeasibleWitness:
    point: np.ndarray


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Inconclusive:
    reason: str


OracleVerdict = Union[FeasibleWitness, Infeasible, Inconclusive]


def _satisfies(sys: LinearSystem, x: np.ndarray) -> bool:
    r = float(np.linalg.norm(x))
    if r > sys.radius * (1.0 + WITNESS_TOL):
        return False
    for con in sys.constraints:
        if con.slack(x) < -WITNESS_TOL * (1.0 + abs(con.bound)):
            return False
    return True


def _plane_vertices(sys: LinearSystem):
    # Solve every n-subset of active boundaries a_i^T x = b_i.
    n = sys.dim
    A = np.array([c.normal for c in sys.constraints])
    b = np.array([c.bound for c in sys.constraints])
    for idx in combinations(range(len(sys.constraints)), n):
        sub = A[list(idx)]
        try:
            x = np.linalg.solve(sub, b[list(idx)])
        except np.linalg.LinAlgError:
            continue
        if np.all(np.isfinite(x)):
            yield x, list(idx)


def _sphere_crossings(sys: LinearSystem):
    # Intersect every (n-1)-subset of boundaries with the bounding sphere:
    # the subset fixes a line p + t*d, then |p + t*d| = R is a quadratic in t.
    n = sys.dim
    R = sys.radius
    if n == 1:
        yield np.array([-R]), []
        yield np.array([R]), []
        return
    A = np.array([c.normal for c in sys.constraints])
    b = np.array([c.bound for c in sys.constraints])
    for idx in combinations(range(len(sys.constraints)), n - 1):
        sub = A[list(idx)]
        if np.linalg.matrix_rank(sub, tol=1e-12) < n - 1:
            continue
        p, *_ = np.linalg.lstsq(sub, b[list(idx)], rcond=None)
        _, s, vt = np.linalg.svd(sub)
        d = vt[-1]
        # |p + t d|^2 = R^2 with |d| = 1
        pd = float(p @ d)
        disc = pd * pd - (float(p @ p) - R * R)
        if disc < 0.0:
            continue
        root = math.sqrt(disc)
        for t in (-pd - root, -pd + root):
            yield p + t * d, list(idx)


def _nudged(sys: LinearSystem, x: np.ndarray, active: list[int]) -> np.ndarray:
    # Push the candidate off its boundaries: average of the active inward
    # normals, plus the inward ball normal when the candidate sits on the
    # sphere.
    direction = np.zeros(sys.dim)
    for i in active:
        a = sys.constraints[i].normal
        direction += a / np.linalg.norm(a)
    r = float(np.linalg.norm(x))
    if r > sys.radius * (1.0 - 1e-9) and r > 0.0:
        direction -= x / r
    norm = float(np.linalg.norm(direction))
    if norm == 0.0:
        return x
    return x + (INTERIOR_NUDGE * sys.radius / norm) * direction


def _check_limits(sys: LinearSystem, max_dim: int) -> None:
    if sys.dim > max_dim:
        raise ValueError(f"oracle supports dimension <= {max_dim}, got {sys.dim}")
    if len(sys.constraints) > MAX_CONSTRAINTS:
        raise ValueError(
            f"oracle supports at most {MAX_CONSTRAINTS} constraints, got {len(sys.constraints)}"
        )


def vertex_enumeration_check(sys: LinearSystem) -> OracleVerdict:
    """Feasibility verdict for n <= 4, m <= 20.

    Returns ``FeasibleWitness`` on the first candidate that survives the
    nudge-and-check; ``Infeasible`` only when the grid pass (n <= 3) also
    comes up empty; ``Inconclusive`` otherwise.
    """
    _check_limits(sys, MAX_DIM)
    candidates = list(_plane_vertices(sys))
    candidates.extend(_sphere_crossings(sys))
    candidates.append((np.zeros(sys.dim), []))
    for x, active in candidates:
        y = _nudged(sys, x, active)
        if _satisfies(sys, y):
            return FeasibleWitness(y)
    if sys.dim > MAX_GRID_DIM:
        return Inconclusive("no vertex witness and grid scan unavailable above dim 3")
    grid = grid_feasibility_scan(sys, GRID_POINTS)
    if isinstance(grid, FeasibleWitness):
        return grid
    return Infeasible()


def grid_feasibility_scan(sys: LinearSystem, steps_per_axis: int) -> OracleVerdict:
    """Scan the axis-aligned grid over [-R, R]^n for a feasible point.

    A hit is a proof; a miss is only ``Inconclusive``.
    """
    _check_limits(sys, MAX_GRID_DIM)
    if steps_per_axis < 2:
        raise ValueError(f"steps_per_axis must be >= 2, got {steps_per_axis}")
    axis = np.linspace(-sys.radius, sys.radius, steps_per_axis)
    n = sys.dim
    A = np.array([c.normal for c in sys.constraints]) if sys.constraints else None
    b = np.array([c.bound for c in sys.constraints]) if sys.constraints else None
    tol = (
        WITNESS_TOL * (1.0 + np.abs(b)) if b is not None else None
    )
    r_max = sys.radius * (1.0 + WITNESS_TOL)

    # One x_1-slice at a time keeps memory flat; within a slice everything
    # is vectorized.
    tail = np.stack(
        [g.ravel() for g in np.meshgrid(*([axis] * (n - 1)), indexing="ij")], axis=-1
    ) if n > 1 else np.zeros((1, 0))
    for x0 in axis:
        pts = np.concatenate(
            [np.full((tail.shape[0], 1), x0), tail], axis=1
        )
        ok = np.linalg.norm(pts, axis=1) <= r_max
        if A is not None:
            ok &= np.all(pts @ A.T - b >= -tol, axis=1)
        hits = np.nonzero(ok)[0]
        if hits.size:
            return FeasibleWitness(pts[hits[0]])
    return Inconclusive("no grid witness")


__all__ = [
    "FeasibleWitness",
    "Inconclusive",
    "Infeasible",
    "OracleVerdict",
    "grid_feasibility_scan",
    "vertex_enumeration_check",
]
