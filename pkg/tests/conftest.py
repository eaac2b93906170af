"""Shared fixtures: small cubic multigraphs enumerated exhaustively, and
from-scratch reference computations that share no code with the library."""
from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from irregsub.multigraph import Multigraph, SpanningSubgraph
from irregsub.generators import random_regular


def _fill(n, d):
    """All loopless d-regular multiplicity matrices on n vertices (upper triangle as a dict)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    rest = [d] * n

    def rec(k, mult):
        if k == len(pairs):
            if not any(rest):
                out.append(dict(mult))
            return
        i, j = pairs[k]
        # vertex i sees its last pair here: it must be saturated afterwards
        last_for_i = j == n - 1
        top = min(rest[i], rest[j])
        for c in range(top + 1):
            if last_for_i and rest[i] - c:
                continue
            rest[i] -= c
            rest[j] -= c
            if c:
                mult[(i, j)] = c
            rec(k + 1, mult)
            mult.pop((i, j), None)
            rest[i] += c
            rest[j] += c

    rec(0, {})
    return out


def _connected(n, mult):
    adj = {v: set() for v in range(n)}
    for i, j in mult:
        adj[i].add(j)
        adj[j].add(i)
    seen, todo = {0}, [0]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    return len(seen) == n


def _canon(n, mult):
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((min(perm[i], perm[j]), max(perm[i], perm[j]), c) for (i, j), c in mult.items()))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def connected_cubic_classes(n: int) -> tuple:
    """Isomorphism classes of connected loopless cubic multigraphs on n vertices, as edge lists."""
    found = {}
    for mult in _fill(n, 3):
        if _connected(n, mult):
            found.setdefault(_canon(n, mult), mult)
    return tuple(
        tuple(e for (i, j), c in sorted(m.items()) for e in [(i, j)] * c) for m in found.values()
    )


def _mult_matrix(n, edges):
    mm = [[0] * n for _ in range(n)]
    for u, v in edges:
        mm[u][v] += 1
        mm[v][u] += 1
    return mm


def _invariant(mm, rounds=3):
    """Colour refinement on (neighbour colour, multiplicity) pairs."""
    n = len(mm)
    col = [0] * n
    for _ in range(rounds):
        sig = [(col[v], tuple(sorted((col[w], mm[v][w]) for w in range(n) if mm[v][w]))) for v in range(n)]
        ids = {x: i for i, x in enumerate(sorted(set(sig)))}
        col = [ids[x] for x in sig]
    return tuple(sorted(sig))


def _colours(mm, rounds=3):
    n = len(mm)
    col = [0] * n
    for _ in range(rounds):
        sig = [(col[v], tuple(sorted((col[w], mm[v][w]) for w in range(n) if mm[v][w]))) for v in range(n)]
        ids = {x: i for i, x in enumerate(sorted(set(sig)))}
        col = [ids[x] for x in sig]
    return col


def _isomorphic(ma, mb):
    n = len(ma)
    ca, cb = _colours(ma), _colours(mb)
    if sorted(ca) != sorted(cb):
        return False
    # visit a's vertices in BFS order so each one (bar component roots) has a mapped parent
    order, parent, seen = [], [], [False] * n
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        order.append(r)
        parent.append(-1)
        k = len(order) - 1
        while k < len(order):
            v = order[k]
            for w in range(n):
                if ma[v][w] and not seen[w]:
                    seen[w] = True
                    order.append(w)
                    parent.append(v)
            k += 1
    phi = [-1] * n
    used = [False] * n

    def rec(t):
        if t == n:
            return True
        v, p = order[t], parent[t]
        pool = range(n) if p < 0 else [w for w in range(n) if mb[phi[p]][w]]
        for w in pool:
            if used[w] or ca[v] != cb[w]:
                continue
            if all(ma[v][order[s]] == mb[w][phi[order[s]]] for s in range(t)):
                phi[v] = w
                used[w] = True
                if rec(t + 1):
                    return True
                used[w] = False
                phi[v] = -1
        return False

    return rec(0)


def _expansions(n, edges):
    """Edge lists obtained from one generation step of either type."""
    m = len(edges)
    u, v = n, n + 1
    for i in range(m):
        x, y = edges[i]
        rest = edges[:i] + edges[i + 1:]
        yield rest + [(x, u), (u, v), (u, v), (v, y)]
    for i in range(m):
        for j in range(i + 1, m):
            rest = [e for k, e in enumerate(edges) if k not in (i, j)]
            x, y = edges[i]
            for z, w in (edges[j], edges[j][::-1]):
                yield rest + [(x, u), (u, y), (z, v), (v, w), (u, v)]


@lru_cache(maxsize=None)
def _all_classes_by_growth(n: int) -> tuple:
    """Every cubic multigraph on n vertices (connected or not), up to isomorphism.

    A graph with a component larger than K_2^3 comes from a smaller one by a
    single generation step; the rest is a disjoint union of K_2^3.
    """
    base = tuple((2 * t, 2 * t + 1) for t in range(n // 2) for _ in range(3))
    if n == 2:
        return (base,)
    reps: dict = {}
    out = []
    for cand in [list(base)] + [c for edges in _all_classes_by_growth(n - 2) for c in _expansions(n - 2, list(edges))]:
        mm = _mult_matrix(n, cand)
        bucket = reps.setdefault(_invariant(mm), [])
        if any(_isomorphic(mm, other) for other in bucket):
            continue
        bucket.append(mm)
        out.append(tuple(sorted(tuple(sorted(e)) for e in cand)))
    return tuple(out)


def cubic_classes_by_growth(n: int) -> tuple:
    """Connected classes, built by generation steps rather than brute force."""
    out = []
    for el in _all_classes_by_growth(n):
        mm = _mult_matrix(n, el)
        if _connected(n, {(i, j): 1 for i in range(n) for j in range(i + 1, n) if mm[i][j]}):
            out.append(el)
    return tuple(out)


def small_cubic_graphs(max_n: int = 6) -> list[Multigraph]:
    return [Multigraph.build(n, el) for n in range(2, max_n + 1, 2) for el in connected_cubic_classes(n)]


def all_cubic_graphs_upto8() -> list[Multigraph]:
    return small_cubic_graphs(6) + [Multigraph.build(8, el) for el in cubic_classes_by_growth(8)]


def sampled_cubic_8(count: int = 12) -> list[Multigraph]:
    return [random_regular(8, 3, seed) for seed in range(count)]


def ref_profile(n, d, edge_list, members):
    deg = [0] * n
    for e in members:
        u, v = edge_list[e]
        deg[u] += 1
        deg[v] += 1
    prof = [0] * (d + 1)
    for x in deg:
        prof[x] += 1
    return prof


def ref_a(n, d, edge_list, members):
    return tuple((d + 1) * c - n for c in ref_profile(n, d, edge_list, members))


def ref_b(a):
    out, s = [], 0
    for x in a[:-1]:
        s += x
        out.append(s)
    return tuple(out)


def subsets(m):
    for mask in range(1 << m):
        yield [e for e in range(m) if mask >> e & 1]


# pass/fail lines from test_acceptance.py, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def cubic_graphs_10() -> tuple:
    return tuple(cubic_classes_by_growth(10))


@pytest.fixture(scope="session")
def cubic_upto6():
    return small_cubic_graphs(6)


def repair_sweep(graphs):
    """Feed every subgraph of every host to the repair matching its state.

    Proper subgraphs go to the proper-to-state-0 step (checking its phase-1
    count), state-1 and state-2 subgraphs to their repairs.  Returns counts
    per route.
    """
    from collections import Counter

    from irregsub.cubic import (
        EdgeIndex,
        is_proper,
        is_state0,
        is_state1,
        is_state2,
        proper_to_state0,
        repair_state1,
        repair_state2,
    )

    seen = Counter()
    for g in graphs:
        m = g.num_edge_ids
        el = [g.endpoints(e) for e in range(m)]
        n = g.n_alive
        for members in subsets(m):
            a = ref_a(n, 3, el, members)
            routes = []
            if is_proper(a):
                routes.append("proper")
            if is_state1(a):
                routes.append("state1")
            if is_state2(a):
                routes.append("state2")
            for route in routes:
                ix = EdgeIndex(SpanningSubgraph(g, members))
                if route == "proper":
                    rounds = proper_to_state0(ix)
                    assert rounds <= 8
                    assert is_state0(ix.a())
                elif route == "state1":
                    repair_state1(ix)
                    assert is_proper(ix.a())
                else:
                    repair_state2(ix)
                    assert is_proper(ix.a())
                h = ix.h
                assert ix.a() == ref_a(n, 3, el, h.members())
                ix.check()
                seen[route] += 1
    return seen


def masks_in_states(g, preds):
    """Edge masks of all subgraphs whose scaled a-vector satisfies one of ``preds``.

    Walks subgraphs in reflected Gray-code order, updating degrees per step.
    """
    m = g.num_edge_ids
    n = g.n_alive
    eu, ev = g.eu, g.ev
    deg = [0] * g.num_vertices
    cnt = [n, 0, 0, 0, 0]
    out = []
    for t in range(1 << m):
        if t:
            b = (t & -t).bit_length() - 1
            step = 1 if (t ^ (t >> 1)) >> b & 1 else -1
            for w in (eu[b], ev[b]):
                cnt[deg[w]] -= 1
                deg[w] += step
                cnt[deg[w]] += 1
        a = (4 * cnt[0] - n, 4 * cnt[1] - n, 4 * cnt[2] - n, 4 * cnt[3] - n)
        if any(p(a) for p in preds):
            out.append(t ^ (t >> 1))
    return out


def state12_sweep(graphs, stride=1):
    """Run the state-1 and state-2 repairs on every ``stride``-th such subgraph of each host."""
    from collections import Counter

    from irregsub.cubic import EdgeIndex, is_proper, is_state1, is_state2, repair_state1, repair_state2

    seen = Counter()
    for g in graphs:
        m = g.num_edge_ids
        el = [g.endpoints(e) for e in range(m)]
        for mask in masks_in_states(g, (is_state1, is_state2))[::stride]:
            members = [e for e in range(m) if mask >> e & 1]
            a = ref_a(g.n_alive, 3, el, members)
            for route, pred, fix in (("state1", is_state1, repair_state1), ("state2", is_state2, repair_state2)):
                if pred(a):
                    ix = EdgeIndex(SpanningSubgraph(g, members))
                    fix(ix)
                    assert is_proper(ix.a())
                    assert ix.a() == ref_a(g.n_alive, 3, el, ix.h.members())
                    ix.check()
                    seen[route] += 1
    return seen


def check_candidate(h, p, c):
    """Assert that a candidate satisfies the clause it claims."""
    g = h.host
    deg = h.effective_degree
    if c.kind == "edge_in_h":
        assert h.is_member(c.edge)
        assert sorted((c.i, c.j)) == sorted((deg(g.eu[c.edge]), deg(g.ev[c.edge])))
        assert c.i in p.a_minus and c.j not in p.a_plus
    elif c.kind == "edge_in_complement":
        assert not h.is_member(c.edge)
        assert sorted((c.i - 1, c.j - 1)) == sorted((deg(g.eu[c.edge]), deg(g.ev[c.edge])))
        assert c.i in p.a_plus and c.j not in p.a_minus
    else:
        s = c.star
        in_h = c.kind == "star_in_h"
        shift = 0 if in_h else 1
        k = s.center_degree + shift
        assert s.center_degree == deg(s.center)
        assert k in (p.a_plus if in_h else p.a_minus)
        assert s.size == p.m[k] + 1
        leaves = [x for x, _ in s.leaves]
        assert len(set(leaves)) == len(leaves) and s.center not in leaves
        for (leaf, es), ell in zip(s.leaves, s.leaf_degrees):
            assert deg(leaf) == ell
            assert ell + shift in (p.a_minus if in_h else p.a_plus)
            assert 1 <= len(es) <= p.n[ell + shift]
            for e in es:
                assert h.is_member(e) == in_h and {g.eu[e], g.ev[e]} == {s.center, leaf}


def candidate_sweep(hosts, alpha_unscaled=None):
    """Every subgraph of every host: when both index sets are nonempty a
    candidate must come back (with and without the pair index).  Returns how
    many subgraphs had both sets nonempty."""
    from irregsub.adjust import DegreePairIndex, find_candidate, interval_params
    from irregsub.irregularity import b_scaled

    checked = 0
    for g in hosts:
        d = g.degree(0)
        alpha = (alpha_unscaled if alpha_unscaled is not None else d) * (d + 1)
        m = g.num_edge_ids
        for mask in range(1 << m):
            h = SpanningSubgraph(g, [e for e in range(m) if mask >> e & 1])
            p = interval_params(b_scaled(h), alpha)
            c = find_candidate(h, p)
            c2 = find_candidate(h, p, DegreePairIndex(h))
            if p.a_plus and p.a_minus:
                assert c is not None and c2 is not None
                checked += 1
            for cand in (c, c2):
                if cand is not None:
                    check_candidate(h, p, cand)
    return checked


def polarised_candidate_sweep(seeds):
    """Candidate search on H = one side of a disjoint union plus noise.

    Many degree-0 and many degree-d vertices give large b entries of both
    signs, so both index sets are nonempty even at alpha = d.  Returns how
    many (subgraph, alpha) cases had both sets nonempty.
    """
    import random

    from irregsub.adjust import DegreePairIndex, find_candidate, interval_params
    from irregsub.generators import disjoint_union
    from irregsub.irregularity import b_scaled

    fired = 0
    for seed in seeds:
        rng = random.Random(seed)
        d = rng.randint(2, 6)
        n1, n2 = rng.randint(5, 30), rng.randint(5, 30)
        n1 += n1 * d % 2
        n2 += n2 * d % 2
        g = disjoint_union(random_regular(n1, d, seed), random_regular(n2, d, seed + 1))
        m1 = n1 * d // 2
        noise = rng.random() * 0.3
        h = SpanningSubgraph(g, [e for e in g.live_edges() if (e < m1) != (rng.random() < noise)])
        for alpha in (d * (d + 1), d + 1):
            p = interval_params(b_scaled(h), alpha)
            if p.a_plus and p.a_minus:
                fired += 1
                for c in (find_candidate(h, p), find_candidate(h, p, DegreePairIndex(h))):
                    assert c is not None
                    check_candidate(h, p, c)
    return fired
