"""
Degree profiles and the irregularity vectors
============================================

A spanning subgraph H of a d-regular multigraph sorts the n vertices into
d+1 classes by H-degree.  Everything below is kept in integers by scaling
with d+1: a~_i = (d+1) m(H,i) - n, and b~ holds the prefix sums of a~.
"""
from irregsub.generators import cycle, k2k
from irregsub.irregularity import a_scaled, b_scaled, complement_vectors, is_improvement, sorted_c
from irregsub.multigraph import SpanningSubgraph

# three parallel edges between two vertices; keep one of them
g = k2k(3)
h = SpanningSubgraph(g, [0])
print("K2^3, one edge kept")
print("  profile", h.profile())        # both vertices have H-degree 1
print("  a~", a_scaled(h))             # (-2, 6, -2, -2)
print("  b~", b_scaled(h))

# flipping polarity swaps H and its complement without touching any edge
h.flip_polarity()
print("  complement a~", a_scaled(h), "members", h.members())

# the complement reverses a~ and negates b~, read backwards
a, b = complement_vectors((-2, 6, -2, -2), (-2, 4, 2))
print("  by formula   ", a, b)

# a 4-cycle with one edge
h = SpanningSubgraph(cycle(4), [0])
print("C4, one edge: a~", a_scaled(h), "b~", b_scaled(h))

# improvements: either the l1 norm of b~ drops, or it stays and the
# sorted magnitudes get lexicographically larger
print()
for before, after in [((-2, 4, 2), (-2, 2, 2)), ((0, 4, -4), (2, -2, -4)), ((2, -2, -4), (0, 4, -4))]:
    kind = is_improvement(before, after)
    print(f"{before} -> {after}: {kind.name:6s} sorted {sorted_c(before)} -> {sorted_c(after)}")
