"""
Solving a small feasibility problem, step by step
=================================================

Find a point satisfying three linear inequalities inside a bounding disc,
watching every iteration through a trace callback.  Then run a system with
no solution and watch the volume argument close it out.
"""

import numpy as np

from ellipsoid.solver import (
    Constraint,
    LinearSystem,
    SolverConfig,
    certify,
    solve,
)

# Three half-planes whose intersection is a small triangle near (0.6, 0.6).
system = LinearSystem(
    dim=2,
    constraints=(
        Constraint(np.array([1.0, 0.0]), 0.5),   # x1 >= 0.5
        Constraint(np.array([0.0, 1.0]), 0.5),   # x2 >= 0.5
        Constraint(np.array([-1.0, -1.0]), -1.4),  # x1 + x2 <= 1.4
    ),
    radius=2.0,
)

records = []
outcome = solve(system, SolverConfig(epsilon=1e-6, trace=records.append))

print("iter  row   center                     log-volume")
for rec in records:
    row = "-" if rec.violated_index is None else str(rec.violated_index)
    center = ", ".join(f"{v:+.4f}" for v in rec.center)
    print(f"{rec.iter:>4}  {row:>3}   [{center}]   {rec.log_volume:+.4f}")

print("\noutcome:", outcome)

# The certificate re-checks the answer against the original rows.
report = certify(outcome, system)
print(f"certified: {report.passed}, min slack {report.min_slack:.6f} "
      f"on row {report.worst_index}")

# Now a system with empty intersection: x1 >= 1 and x1 <= -1.  The solver
# cannot find a point, so it shrinks the candidate region below epsilon
# and reports the exhausted volume instead.
empty = LinearSystem(
    dim=2,
    constraints=(
        Constraint(np.array([1.0, 0.0]), 1.0),
        Constraint(np.array([-1.0, 0.0]), 1.0),
    ),
    radius=2.0,
)
outcome = solve(empty, SolverConfig(epsilon=1e-6))
print("\nempty system outcome:", outcome)
report = certify(outcome, empty, epsilon=1e-6)
print(f"certified: {report.passed}, log-volume margin {report.log_volume_margin:.4f}")
