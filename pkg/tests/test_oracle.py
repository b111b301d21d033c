"""Tests for the brute-force feasibility oracle."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipsoid.oracle import (
    FeasibleWitness,
    Inconclusive,
    Infeasible,
    grid_feasibility_scan,
    vertex_enumeration_check,
)
from ellipsoid.solver import Constraint, Feasible, LinearSystem, certify
from instances import feasible_instance, infeasible_instance

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def quadrant_system() -> LinearSystem:
    return LinearSystem(
        2,
        (
            Constraint(np.array([1.0, 0.0]), 0.5),
            Constraint(np.array([0.0, 1.0]), 0.5),
        ),
        2.0,
    )


def disjoint_system() -> LinearSystem:
    return LinearSystem(
        2,
        (
            Constraint(np.array([1.0, 0.0]), 1.0),
            Constraint(np.array([-1.0, 0.0]), 0.0),
        ),
        2.0,
    )


def assert_valid_witness(sys: LinearSystem, verdict) -> None:
    assert isinstance(verdict, FeasibleWitness)
    point = verdict.point
    assert float(np.linalg.norm(point)) <= sys.radius * (1.0 + 1e-12)
    for con in sys.constraints:
        assert con.slack(point) >= -1e-12 * (1.0 + abs(con.bound))


def test_vertex_enumeration_reference_verdicts():
    assert_valid_witness(quadrant_system(), vertex_enumeration_check(quadrant_system()))
    assert vertex_enumeration_check(disjoint_system()) == Infeasible()
    empty = LinearSystem(2, (), 2.0)
    verdict = vertex_enumeration_check(empty)
    assert isinstance(verdict, FeasibleWitness)
    np.testing.assert_array_equal(verdict.point, np.zeros(2))


def test_vertex_enumeration_enforces_limits():
    with pytest.raises(ValueError):
        vertex_enumeration_check(LinearSystem(5, (), 1.0))
    rows = tuple(Constraint(np.array([1.0, 0.0]), -3.0) for _ in range(21))
    with pytest.raises(ValueError):
        vertex_enumeration_check(LinearSystem(2, rows, 1.0))


def test_grid_scan_reference_verdicts():
    hit = grid_feasibility_scan(quadrant_system(), 41)
    assert_valid_witness(quadrant_system(), hit)
    miss = grid_feasibility_scan(disjoint_system(), 41)
    assert isinstance(miss, Inconclusive)
    empty = grid_feasibility_scan(LinearSystem(2, (), 2.0), 41)
    assert isinstance(empty, FeasibleWitness)


def test_grid_scan_enforces_limits():
    with pytest.raises(ValueError):
        grid_feasibility_scan(LinearSystem(4, (), 1.0), 41)
    with pytest.raises(ValueError):
        grid_feasibility_scan(quadrant_system(), 1)


def test_grid_scan_one_dimensional():
    sys = LinearSystem(1, (Constraint(np.array([1.0]), 0.5),), 2.0)
    hit = grid_feasibility_scan(sys, 41)
    assert isinstance(hit, FeasibleWitness)
    assert hit.point[0] >= 0.5 - 1e-12


def test_vertex_enumeration_one_dimensional():
    sys = LinearSystem(1, (Constraint(np.array([1.0]), 0.5),), 2.0)
    assert_valid_witness(sys, vertex_enumeration_check(sys))
    bad = LinearSystem(
        1,
        (Constraint(np.array([1.0]), 1.0), Constraint(np.array([-1.0]), 0.0)),
        2.0,
    )
    assert vertex_enumeration_check(bad) == Infeasible()


def test_dim_4_feasible_found_through_vertices():
    rows = tuple(Constraint(np.eye(4)[i], 0.1) for i in range(4))
    sys = LinearSystem(4, rows, 2.0)
    assert_valid_witness(sys, vertex_enumeration_check(sys))


def test_dim_4_without_witness_is_inconclusive():
    # One tight row in dim 4: no boundary intersections exist, the origin
    # violates the row, and there is no grid fallback above dim 3.
    tight = LinearSystem(4, (Constraint(np.eye(4)[0], 1.75),), 2.0)
    verdict = vertex_enumeration_check(tight)
    assert isinstance(verdict, Inconclusive)
    assert "grid" in verdict.reason

    slab = LinearSystem(
        4,
        (Constraint(np.eye(4)[0], 1.0), Constraint(-np.eye(4)[0], 0.0)),
        2.0,
    )
    assert isinstance(vertex_enumeration_check(slab), Inconclusive)


def test_witness_point_on_sphere_boundary():
    # The only feasible points sit against the bounding sphere, reachable
    # through the boundary-crossing candidates plus the inward nudge.
    sys = LinearSystem(2, (Constraint(np.array([1.0, 0.0]), 1.9),), 2.0)
    assert_valid_witness(sys, vertex_enumeration_check(sys))


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_known_ball_instances_get_a_witness(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 4))
    m = int(rng.integers(2, 11))
    sys, _ = feasible_instance(rng, n, m)
    verdict = vertex_enumeration_check(sys)
    assert_valid_witness(sys, verdict)
    # The solver-side certifier agrees the witness is interior.
    assert certify(Feasible(verdict.point, 0), sys).passed


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_oracle_self_consistency(seed):
    # A coarse grid hit implies the full check can never say Infeasible.
    # Dim 2 keeps the dense fallback scan inside the negative branch cheap.
    rng = np.random.default_rng(seed)
    n = 2
    m = int(rng.integers(2, 11))
    if seed % 2 == 0:
        sys, _ = feasible_instance(rng, n, m)
    else:
        sys = infeasible_instance(rng, n, m)
    coarse = grid_feasibility_scan(sys, 21)
    full = vertex_enumeration_check(sys)
    if isinstance(coarse, FeasibleWitness):
        assert not isinstance(full, Infeasible)
