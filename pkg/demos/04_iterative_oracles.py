"""
Iterative capacity oracles and certified error bounds
=====================================================

Two slow-but-sure ways to compute capacity, used here to cross-check the
closed forms.  Blahut-Arimoto alternates between the input distribution and
the induced output, and at every step yields a bracket

    lower <= C <= upper

that shrinks to the answer.  For two-input channels a brute-force grid
search over the single free parameter serves as a second opinion.
"""

import numpy as np

from chancap import (
    OracleConfig,
    binary_capacity,
    binary_channel,
    blahut_arimoto,
    capacity_bounds,
    grid_search_binary,
    muroga_capacity,
)

# Watch the bracket close on the Z-channel.  Each sweep updates the input
# distribution; the bound pair comes for free from the same quantities.
q = binary_channel(0.0, 0.5)
p = np.array([0.5, 0.5])
print("Z-channel bracket per iteration:")
for k in range(1, 9):
    res = blahut_arimoto(q, oracle=OracleConfig(max_iterations=k))
    lower, upper = capacity_bounds(res.input_dist, q)
    print(f"  iter {k}:  lower={lower:.12f}  upper={upper:.12f}  gap={upper - lower:.3e}")
print("closed form       :", binary_capacity(0.0, 0.5))

# Run to a tight tolerance and compare all three methods.
res = blahut_arimoto(q, oracle=OracleConfig(tolerance=1e-12))
grid = grid_search_binary(q, oracle=OracleConfig(grid_resolution=10**6))
print("blahut-arimoto    :", res.capacity, f"({res.iterations} iters)")
print("grid search       :", grid.capacity, f"(best p1 = {grid.p1})")

# The same cross-check across random binary channels.
rng = np.random.default_rng(3)
worst = 0.0
for _ in range(200):
    a, c = np.sort(rng.uniform(0.0, 1.0, 2))
    if c - a < 1e-3:
        continue
    closed = binary_capacity(a, c)
    iterated = blahut_arimoto(binary_channel(a, c)).capacity
    worst = max(worst, abs(closed - iterated))
print()
print("worst |closed - iterated| over 200 random binary channels:", worst)

# Blahut-Arimoto is not limited to square matrices.  A 3-input, 2-output
# channel where one input is a useless blend of the other two:
q_wide = np.array(
    [
        [0.9, 0.1],
        [0.5, 0.5],
        [0.1, 0.9],
    ]
)
res = blahut_arimoto(q_wide)
print()
print("3x2 channel capacity:", res.capacity)
print("optimal input       :", res.input_dist, " (middle input starved)")

# And for square invertible channels it agrees with the explicit formula.
q3 = np.array(
    [
        [0.7, 0.2, 0.1],
        [0.1, 0.8, 0.1],
        [0.05, 0.15, 0.8],
    ]
)
print()
print("explicit formula:", muroga_capacity(q3).capacity)
print("blahut-arimoto  :", blahut_arimoto(q3, oracle=OracleConfig(tolerance=1e-12)).capacity)
