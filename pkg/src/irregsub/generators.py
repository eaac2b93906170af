"""Named multigraph families and random regular multigraphs."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParams, RetryExhausted
from .multigraph import Multigraph


def k2k(k: int) -> Multigraph:
    """Two vertices joined by k parallel edges."""
    if k < 1:
        raise InvalidParams("k must be positive")
    return Multigraph.build(2, [(0, 1)] * k)


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise InvalidParams("a cycle needs at least 3 vertices")
    return Multigraph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(d: int) -> Multigraph:
    """K_{d,d} with sides {0..d-1} and {d..2d-1}."""
    if d < 1:
        raise InvalidParams("d must be positive")
    return Multigraph.build(2 * d, [(i, d + j) for i in range(d) for j in range(d)])


def complete_graph(n: int) -> Multigraph:
    if n < 2:
        raise InvalidParams("need at least 2 vertices")
    return Multigraph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k4() -> Multigraph:
    return complete_graph(4)


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.build(10, outer + spokes + inner)


def doubled_graph(g: Multigraph, s: int) -> Multigraph:
    """Replace every edge by s parallel copies; copy j of edge e gets id s*e + j."""
    if s < 1:
        raise InvalidParams("s must be positive")
    pairs = g.edge_list()
    if len(pairs) != g.num_edge_ids:
        raise InvalidParams("blow-up needs a graph without dead edges")
    return Multigraph.build(g.num_vertices, [p for p in pairs for _ in range(s)])


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edge_list())
        offset += g.num_vertices
    return Multigraph.build(offset, edges)


def random_regular(n: int, d: int, seed: int = 0, max_retries: int = 10_000) -> Multigraph:
    """Configuration-model d-regular multigraph; loops are re-paired, parallels kept."""
    if n < 1 or d < 1 or (n * d) % 2:
        raise InvalidParams(f"need n, d >= 1 and n*d even (n={n}, d={d})")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    rng.shuffle(stubs)
    pairs = stubs.reshape(-1, 2)
    bad = np.flatnonzero(pairs[:, 0] == pairs[:, 1])
    if bad.size:
        pairs = _repair_loops(pairs, bad, rng, max_retries)
    return Multigraph.build(n, pairs.tolist())


def _repair_loops(pairs, bad, rng, max_retries):
    pairs = pairs.copy()
    npairs = len(pairs)
    todo = [int(i) for i in bad]
    tries = 0
    while todo:
        i = todo.pop()
        a, b = pairs[i]
        if a != b:
            continue
        while True:
            tries += 1
            if tries > max_retries:
                raise RetryExhausted("could not remove loops")
            j = int(rng.integers(npairs))
            c, e = pairs[j]
            if j != i and c != a and e != a:
                pairs[i] = (a, c)
                pairs[j] = (a, e)
                break
    return pairs


@dataclass
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def generate(spec: GeneratorSpec) -> Multigraph:
    p = spec.params
    fam = spec.family.lower()
    try:
        if fam in ("k2k", "k2"):
            return k2k(int(p["k"]))
        if fam in ("complete_bipartite", "bipartite", "kdd"):
            return complete_bipartite(int(p["d"]))
        if fam in ("doubled", "doubled_graph", "blowup"):
            return doubled_graph(p["base"], int(p["s"]))
        if fam == "cycle":
            return cycle(int(p["n"]))
        if fam in ("union", "disjoint_union"):
            return disjoint_union(*p["graphs"])
        if fam in ("random", "random_regular"):
            return random_regular(int(p["n"]), int(p["d"]), spec.seed)
        if fam == "petersen":
            return petersen()
        if fam == "k4":
            return k4()
        if fam in ("complete", "kn"):
            return complete_graph(int(p["n"]))
    except KeyError as exc:
        raise InvalidParams(f"missing parameter {exc} for family {spec.family}") from None
    raise InvalidParams(f"unknown family {spec.family!r}")
