"""
Cross-checking the solver against brute force
=============================================

The ellipsoid solver is fast but subtle; the brute-force oracle is slow
but simple enough to trust on sight.  Run both on a batch of random
planar systems and compare verdicts.
"""

import math

import numpy as np

from ellipsoid.engine import ball
from ellipsoid.oracle import FeasibleWitness, Infeasible, vertex_enumeration_check
from ellipsoid.solver import Constraint, Feasible, LinearSystem, SolverConfig, solve

rng = np.random.default_rng(7)
RADIUS = 2.0

# Volume threshold: a thousandth of the bounding disc.  Small enough to
# separate the verdicts, large enough that an empty slab is closed out in
# a few dozen cuts.
EPSILON = 1e-3 * math.exp(ball(2, RADIUS).log_volume)


def random_direction(n):
    v = rng.normal(size=n)
    return v / float(np.linalg.norm(v))


def random_system(n, feasible):
    # Feasible: rows tangent to a small ball around a known point.
    # Infeasible: an empty slab plus rows that never bind.
    if feasible:
        p = random_direction(n) * rng.uniform(0.0, RADIUS - 0.2)
        rows = []
        for _ in range(rng.integers(2, 7)):
            a = random_direction(n)
            rows.append(Constraint(a, float(a @ p) - 0.1))
    else:
        u = random_direction(n)
        b = float(rng.uniform(-0.5, 0.5))
        rows = [Constraint(u, b), Constraint(-u, -(b - 0.3))]
    return LinearSystem(n, tuple(rows), RADIUS)


agree = 0
print("case        solver            oracle            verdicts")
for i in range(16):
    feasible = i % 2 == 0
    system = random_system(2, feasible)
    outcome = solve(system, SolverConfig(epsilon=EPSILON))
    verdict = vertex_enumeration_check(system)

    solver_says = "feasible" if isinstance(outcome, Feasible) else "no point"
    if isinstance(verdict, FeasibleWitness):
        oracle_says = "feasible"
    elif isinstance(verdict, Infeasible):
        oracle_says = "infeasible"
    else:
        oracle_says = "inconclusive"

    match = (solver_says == "feasible") == (oracle_says == "feasible")
    agree += match
    tag = "agree" if match else "DISAGREE"
    print(f"{i:>4}        {solver_says:<16}  {oracle_says:<16}  {tag}")

print(f"\n{agree}/16 cases agree")
