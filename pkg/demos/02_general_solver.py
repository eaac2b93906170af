"""
Local search on d-regular multigraphs
=====================================

solve_general starts from the empty subgraph and applies one local move at
a time (toggle an edge, or delete/add a small multi-star) while the move is
an improvement.  It stops once every |b~_i| <= d^2 (d+1), which forces
|a~_i| <= 2 d^2 (d+1), i.e. every degree class is within 2d^2 of n/(d+1).
"""
import time

import numpy as np

from irregsub.general import iteration_bound, solve_general
from irregsub.generators import random_regular
from irregsub.multigraph import SpanningSubgraph

print(f"{'d':>2} {'n':>6} {'steps':>6} {'typeA':>6} {'typeB':>6} {'max|a~|':>8} {'bound':>6} {'sec':>6}")
for d in range(2, 7):
    for n in (50, 500, 5000):
        n += n * d % 2
        g = random_regular(n, d, seed=d)
        t0 = time.perf_counter()
        h, rep = solve_general(g)
        dt = time.perf_counter() - t0
        print(f"{d:2d} {n:6d} {rep.improvement_count:6d} {rep.type_a_count:6d} {rep.type_b_count:6d}"
              f" {rep.final_a_inf:8d} {2 * d * d * (d + 1):6d} {dt:6.2f}")

# the class sizes themselves, for one run
g = random_regular(5000, 4, seed=1)
h, rep = solve_general(g)
m = np.array(h.profile())
print()
print("d = 4, n = 5000: class sizes", m.tolist(), "target", 5000 / 5)
print("deviation from n/(d+1):", (m - 5000 / 5).tolist())

# the worst-case step count is astronomically larger than what happens
print("step bound for d = 4, n = 5000:", f"{iteration_bound(4, 5000):.3e}", "steps taken:", rep.improvement_count)

# starting from a random subgraph works too
rng = np.random.default_rng(0)
start = SpanningSubgraph(g, np.flatnonzero(rng.random(g.num_edge_ids) < 0.5).tolist())
h, rep = solve_general(g, initial=start)
print("from a random start:", rep.improvement_count, "steps, max|a~| =", rep.final_a_inf)
