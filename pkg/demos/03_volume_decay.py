"""
How fast the candidate region shrinks
=====================================

Each central cut multiplies the ellipsoid volume by a constant factor
below 1.  The factor worsens as the dimension grows, but it always beats
exp(-1/(2(n+1))), which is what makes the iteration count provably linear
in n * ln(V0 / epsilon).
"""

import math

from ellipsoid.engine import ball, step_log_ratio
from ellipsoid.solver import iteration_cap

print(" n   step_log_ratio   bound -1/(2(n+1))   volume kept per cut")
for n in (2, 3, 4, 5, 8, 16, 32, 64, 128, 256):
    slr = step_log_ratio(n)
    bound = -1.0 / (2.0 * (n + 1))
    print(f"{n:>3}   {slr:>+13.6f}   {bound:>+16.6f}   {math.exp(slr):>18.6f}")

# For large n the two columns converge: the guaranteed progress per cut
# approaches the bound from below.
for n in (100, 1000):
    print(f"\nn = {n}: ratio to bound = "
          f"{step_log_ratio(n) / (-1.0 / (2.0 * (n + 1))):.4f}")

# The cap translates the per-cut decay into a worst-case iteration count.
print("\nworst-case iterations from a radius-2 ball down to epsilon:")
print(" n   epsilon    cap")
for n in (2, 3, 5):
    v0 = ball(n, 2.0).log_volume
    for eps in (1e-3, 1e-6, 1e-9):
        print(f"{n:>3}   {eps:<8.0e} {iteration_cap(n, v0, eps):>5}")
