"""
Exhaustive search on small cases, and edge weightings
=====================================================

The oracle walks all 2^m subgraphs in Gray-code order (one edge toggle per
step), which settles the optimum exactly for up to 26 edges.
"""
from irregsub.generators import complete_bipartite, cycle, disjoint_union, doubled_graph
from irregsub.multigraph import SpanningSubgraph, build
from irregsub.oracle import oracle_best, oracle_state_exists
from irregsub.strength import verify_distinct, weighting_from_subgraph

# no subgraph of K_{d,d} does better than 3 - 2d/(d+1) for odd d
for d in (3, 5):
    r = oracle_best(complete_bipartite(d))
    print(f"K_{d},{d}: best max|a~| = {r.best_scaled_inf_norm} / {d + 1}"
          f"  ({r.best_scaled_inf_norm / (d + 1):.3f}) over {r.subgraph_count} subgraphs")

# doubling every edge of K_{3,3}
r = oracle_best(doubled_graph(complete_bipartite(3), 2))
print(f"K_3,3 doubled: best = {r.best_scaled_inf_norm} / 7")

# two disjoint 4-cycles: +-1 is out of reach
r = oracle_best(disjoint_union(cycle(4), cycle(4)))
print(f"2 C4: best = {r.best_scaled_inf_norm} / 3, witness edges {sorted(r.witness)}")

# a subgraph of the s-fold blow-up gives weights |copies in H| + 1;
# the weighted degrees are distinct exactly when the H-degrees are
base = build(3, [(0, 1), (0, 2), (1, 2)])
blow = doubled_graph(base, 2)
w = oracle_state_exists(blow, "distinct")
h = SpanningSubgraph(blow, sorted(w))
wt = weighting_from_subgraph(base, 2, h)
print()
print("triangle, s = 2: H-degrees", h.degrees(), "weights", wt.weights, "weighted degrees", wt.weighted_degrees)
print("distinct:", bool(verify_distinct(wt, h)))
