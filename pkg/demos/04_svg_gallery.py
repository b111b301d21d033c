"""
Drawing the ellipse sequence
============================

Render two planar solves as SVG files: a feasible problem that needs one
cut, and an empty slab that gets squeezed for dozens of iterations.  Open
the files in any browser; hover an ellipse to see which row cut it.
"""

import os

from ellipsoid.cli import replay_shapes
from ellipsoid.problems import parse_problem, to_linear_system
from ellipsoid.solver import SolverConfig, solve
from ellipsoid.svgplot import emit_svg_trace

out_dir = os.path.join(os.getcwd(), "demo_output")
os.makedirs(out_dir, exist_ok=True)

# Problems are plain JSON documents; build them through the parser so the
# demo doubles as a format example.
single_cut = parse_problem("""
{
  "dim": 2,
  "radius": 1.0,
  "constraints": [{"a": [1.0, 0.0], "b": 0.3, "sense": ">="}]
}
""")

empty_slab = parse_problem("""
{
  "dim": 2,
  "radius": 2.0,
  "constraints": [
    {"a": [1.0, 0.0], "b": 1.0, "sense": ">="},
    {"a": [1.0, 0.0], "b": -1.0, "sense": "<="}
  ]
}
""")

for name, problem, epsilon in (
    ("single_cut", single_cut, 1e-6),
    ("empty_slab", empty_slab, 1e-6),
):
    system = to_linear_system(problem)
    records = []
    outcome = solve(system, SolverConfig(epsilon=epsilon, trace=records.append))
    shapes = replay_shapes(system, records)
    path = os.path.join(out_dir, f"{name}.svg")
    with open(path, "wb") as fh:
        emit_svg_trace(system, records, shapes, fh)
    print(f"{name}: {outcome.__class__.__name__} after "
          f"{outcome.iterations} iterations, {len(shapes)} ellipses -> {path}")
