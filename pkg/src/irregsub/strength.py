"""Edge weightings from subgraphs of a blow-up.

In G^s every edge e of G becomes s parallel copies E_e.  A spanning
subgraph H of G^s gives the weighting f(e) = |E_e ∩ H| + 1 with values in
[1, s+1], and the weighted degree of v is deg_H(v) + d.  So the weighted
degrees are pairwise distinct exactly when no two vertices share an
H-degree, i.e. m(H, k) <= 1 for every k.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .errors import HostMismatch, InternalInvariant
from .multigraph import Multigraph, SpanningSubgraph


@dataclass
class EdgeWeighting:
    base_graph: Multigraph
    s: int
    weights: list[int]
    weighted_degrees: list[int]


class DistinctReport(NamedTuple):
    distinct: bool
    duplicates: dict

    def __bool__(self):
        return self.distinct


def weighting_from_subgraph(base: Multigraph, s: int, h: SpanningSubgraph) -> EdgeWeighting:
    """f(e) = (member copies of e) + 1, where copy j of base edge e has id s*e + j."""
    blow = h.host
    m = base.num_edge_ids
    if s < 1 or blow.num_vertices != base.num_vertices or blow.num_edge_ids != s * m:
        raise HostMismatch("subgraph does not live on the s-fold blow-up of the base graph")
    weights = [1] * m
    for e in range(m):
        pair = {base.eu[e], base.ev[e]}
        for j in range(s * e, s * e + s):
            if {blow.eu[j], blow.ev[j]} != pair:
                raise HostMismatch(f"blow-up edge {j} is not a copy of base edge {e}")
            if h.is_member(j):
                weights[e] += 1
    wdeg = [0] * base.num_vertices
    for e in base.live_edges():
        wdeg[base.eu[e]] += weights[e]
        wdeg[base.ev[e]] += weights[e]
    return EdgeWeighting(base, s, weights, wdeg)


def verify_distinct(w: EdgeWeighting, h: SpanningSubgraph | None = None) -> DistinctReport:
    """Check that weighted degrees are pairwise distinct; report the vertices of each repeated value.

    With ``h`` given, also checks that weighted degree minus d is exactly
    the H-degree at every vertex.
    """
    g = w.base_graph
    verts = list(g.vertices())
    if h is not None:
        for v in verts:
            if w.weighted_degrees[v] - g.degree(v) != h.effective_degree(v):
                raise InternalInvariant(f"weighted degree of {v} is not its H-degree shifted by d")
    seen = Counter(w.weighted_degrees[v] for v in verts)
    dups = {}
    for v in verts:
        x = w.weighted_degrees[v]
        if seen[x] > 1:
            dups.setdefault(x, []).append(v)
    return DistinctReport(not dups, dups)
