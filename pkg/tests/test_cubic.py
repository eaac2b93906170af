import random
from collections import Counter

import pytest

from irregsub.cubic import (
    CubicState,
    CubicStats,
    EdgeIndex,
    apply_op_and_repair,
    base_pattern,
    base_subgraph,
    classify,
    decompose,
    find_contraction,
    is_proper,
    is_state0,
    is_state1,
    locate_special,
    proper_to_state0,
    repair_state1,
    repair_state2,
    replay,
    solve_cubic,
)
from irregsub.errors import NotConnectedCubic, NotCubic, NotProper, TooSmall, WrongState
from irregsub.generators import complete_bipartite, cycle, k2k, k4, petersen, random_regular
from irregsub.irregularity import a_scaled
from irregsub.multigraph import CubicOpRecord, Multigraph, SpanningSubgraph, build, regularity
from irregsub.oracle import oracle_best, oracle_state_exists

from conftest import (
    all_cubic_graphs_upto8,
    cubic_graphs_10,
    masks_in_states,
    ref_a,
    repair_sweep,
    state12_sweep,
    subsets,
)


def _ref(h):
    g = h.host
    return ref_a(g.n_alive, 3, [g.endpoints(e) for e in range(g.num_edge_ids)], h.members())


def test_classify_examples():
    assert classify((-2, 6, -2, -2)) is CubicState.STATE0
    assert classify((-10, 2, 2, 6)) is CubicState.STATE1
    assert classify((-10, 10, 6, -6)) is CubicState.STATE2
    assert classify((-8, 8, 8, -8)) is CubicState.STATE0
    assert classify((8, -8, -8, 8)) is CubicState.PROPER
    assert classify((12, -4, -4, -4)) is CubicState.OTHER
    with pytest.raises(NotCubic):
        classify((0, 0, 0))


def test_small_hosts_never_reach_states_1_and_2():
    # a0 = -10 needs 4 m(H,0) = n - 10, so n >= 10
    for n in range(2, 10, 2):
        assert not any(is_state1((4 * c - n, 0, 0, 0)) for c in range(n + 1))


# -- decomposition ---------------------------------------------------------

def _far_gadget():
    """Two halves u=v, u-w, v-w, w-x, x=y joined by y1-y2."""
    edges = []
    for o in (0, 5):
        u, v, w, x, y = range(o, o + 5)
        edges += [(u, v), (u, v), (u, w), (v, w), (w, x), (x, y), (x, y)]
    edges.append((4, 9))
    return build(10, edges)


def _check_contraction(g, e, f):
    h = g.copy()
    before = h.edge_multiset()
    n0 = h.n_alive
    rec = find_contraction(h, e)
    assert f in rec.added
    assert h.n_alive == n0 - 2 and regularity(h) == 3
    h.expand_pair(rec)
    assert h.edge_multiset() == before


def test_locate_special_routes():
    routes = Counter()
    for g in all_cubic_graphs_upto8() + [_far_gadget()]:
        for e in g.live_edges():
            hit = locate_special(g, e)
            if hit is None:
                assert g.n_alive == 2
                continue
            f, route = hit
            routes[route] += 1
            _check_contraction(g, e, f)
    assert set(routes) == {
        "direct",
        "via-doubled",
        "shared-neighbour",
        "via-doubled-far",
        "hop+shared-neighbour",
        "hop+via-doubled-far",
    }


def test_far_gadget_routes():
    g = _far_gadget()
    assert locate_special(g, 0)[1] == "via-doubled-far"
    assert locate_special(g, 2)[1] == "hop+via-doubled-far"


def test_find_contraction_errors():
    with pytest.raises(TooSmall):
        find_contraction(k2k(3), 0)
    g = k4()
    g.kill_edge(5)
    with pytest.raises(NotConnectedCubic):
        find_contraction(g, 0)
    with pytest.raises(NotConnectedCubic):
        find_contraction(g, 5)


def test_find_contraction_k4_is_type2():
    g = k4()
    assert g.endpoints(0) == (0, 1)
    rec = find_contraction(g, 0)
    assert rec.op_type == 2 and set(rec.vertices) == {0, 1}
    assert g.edge_multiset() == {(2, 3): 3}


def test_find_contraction_doubled_path_is_type1():
    g = build(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
    rec = find_contraction(g, 0)
    assert rec.op_type == 1 and set(rec.vertices) == {0, 1}
    assert g.edge_multiset() == {(2, 3): 3}


def test_decompose_small():
    g = k2k(3)
    assert decompose(g) == (1, [])
    g = k4()
    m, ops = decompose(g)
    assert m == 1 and [r.op_type for r in ops] == [2]
    g = complete_bipartite(3)
    m, ops = decompose(g)
    assert m + len(ops) == 3 and len(ops) == 2
    with pytest.raises(NotCubic):
        decompose(cycle(4))


@pytest.mark.parametrize("seed", range(20))
def test_decompose_replay_exact(seed):
    rng = random.Random(seed)
    n = 2 * rng.randint(1, 300)
    g = random_regular(n, 3, seed)
    before = g.edge_multiset()
    work = g.copy()
    m, ops = decompose(work)
    assert 2 * (m + len(ops)) == n
    # what is left is m disjoint K_2^3
    left = work.edge_multiset()
    assert len(left) == m and set(left.values()) == {3}
    replay(work, ops)
    assert work.edge_multiset() == before and work.n_alive == n


# -- base subgraph ---------------------------------------------------------

def test_base_pattern():
    assert base_pattern(1) == [1]
    assert base_pattern(4) == [0, 1, 2, 3]
    assert base_pattern(5) == [0, 1, 2, 3, 1]
    assert base_pattern(7) == [0, 1, 2, 3, 1, 2, 0]
    with pytest.raises(ValueError):
        base_pattern(0)


@pytest.mark.parametrize("m", range(1, 41))
def test_base_subgraph_state0(m):
    h = base_subgraph(m)
    assert is_state0(a_scaled(h)) and a_scaled(h) == _ref(h)


# -- repairs ---------------------------------------------------------------

def test_proper_to_state0_leaves_state0_alone():
    g = k4()
    # path 1-0-2-3 : degrees 1, 2, 2, 1
    h = SpanningSubgraph(g, [0, 1, 5])
    assert g.endpoints(5) == (2, 3)
    ix = EdgeIndex(h)
    assert ix.a() == (-4, 4, 4, -4)
    assert proper_to_state0(ix) == 0
    assert ix.a() == (-4, 4, 4, -4) and h.members() == [0, 1, 5]


def test_proper_to_state0_star_needs_no_00_edge():
    # a0 < 0 with no complement edge between two degree-0 vertices
    g = k4()
    h = SpanningSubgraph(g, g.inc[0])
    ix = EdgeIndex(h)
    assert ix.a() == (-4, 8, -4, 0) and ix.Q(0, 0) < 0
    proper_to_state0(ix)
    assert is_state0(ix.a()) and ix.a() == _ref(ix.h)


def test_repair_guards():
    ix = EdgeIndex(SpanningSubgraph(k4()))
    assert ix.a() == (12, -4, -4, -4)
    with pytest.raises(NotProper):
        proper_to_state0(ix)
    with pytest.raises(WrongState):
        repair_state1(ix)
    with pytest.raises(WrongState):
        repair_state2(ix)
    with pytest.raises(WrongState):
        apply_op_and_repair(ix, CubicOpRecord(1, (0,), (4, 5), (6, 7, 8, 9), (0, 1)))
    with pytest.raises(NotCubic):
        EdgeIndex(SpanningSubgraph(cycle(4)))


def test_state1_deletes_a_12_edge():
    for el in cubic_graphs_10():
        g = Multigraph.build(10, el)
        for mask in masks_in_states(g, (is_state1,)):
            ix = EdgeIndex(SpanningSubgraph(g, [e for e in range(g.num_edge_ids) if mask >> e & 1]))
            if ix.P(1, 2) < 0:
                continue
            before = ix.a()
            repair_state1(ix)
            assert tuple(x - y for x, y in zip(ix.a(), before)) == (4, 0, -4, 0)
            return
    raise AssertionError("no state-1 subgraph with an H(1,2)-edge found")


def test_repairs_exhaustive_upto8():
    seen = repair_sweep(all_cubic_graphs_upto8())
    # 29 hosts; no state-1/2 subgraph exists below 10 vertices
    assert set(seen) == {"proper"} and seen["proper"] > 60_000


def test_state12_repairs_on_10_vertices():
    graphs = [Multigraph.build(10, el) for el in cubic_graphs_10()]
    assert len(graphs) == 91
    seen = state12_sweep(graphs, stride=25)
    assert seen["state1"] > 5000 and seen["state2"] > 5000


# -- one replay step ---------------------------------------------------------

def test_type1_expansion_vector():
    g = k2k(3)
    ix = EdgeIndex(SpanningSubgraph(g, [0]))
    assert ix.a() == (-2, 6, -2, -2)
    ix.expand(CubicOpRecord(1, (0,), (2, 3), (3, 4, 5, 6), (0, 1)), (True,) * 4)
    assert ix.a() == (-4, 4, -4, 4)
    proper_to_state0(ix)
    assert is_state0(ix.a())
    ix.check()


def test_type2_mixed_expansion_delta():
    g = k2k(3)
    ix = EdgeIndex(SpanningSubgraph(g, [0]))
    before = ix.a()
    ix.expand(CubicOpRecord(2, (0, 1), (2, 3), (3, 4, 5, 6, 7), (0, 1, 0, 1)), (True, True, False, False, True))
    assert tuple(x - y for x, y in zip(ix.a(), before)) == (-2, 2, -2, 2)
    assert ix.a() == _ref(ix.h)


def test_apply_op_on_all_state0_subgraphs_of_k23():
    recs = [
        CubicOpRecord(1, (e,), (2, 3), (3, 4, 5, 6), (0, 1)) for e in range(3)
    ] + [
        CubicOpRecord(2, pair, (2, 3), (3, 4, 5, 6, 7), (0, 1, 0, 1)) for pair in ((0, 1), (0, 2), (1, 2))
    ]
    done = 0
    for members in subsets(3):
        if not is_state0(ref_a(2, 3, [(0, 1)] * 3, members)):
            continue
        for rec in recs:
            g = k2k(3)
            ix = EdgeIndex(SpanningSubgraph(g, members))
            apply_op_and_repair(ix, rec, CubicStats())
            assert is_state0(ix.a()) and ix.a() == _ref(ix.h)
            ix.check()
            done += 1
    assert done == 6 * 6


# -- full solver -------------------------------------------------------------

def _same(h1, s1, h2, s2):
    assert h1.members() == h2.members()
    for k in ("ops", "type1", "type2", "state1_repairs", "state2_repairs", "toggles", "bucket_updates"):
        assert getattr(s1, k) == getattr(s2, k), k


def test_engines_agree_on_small_classes():
    for g in all_cubic_graphs_upto8():
        h1, s1 = solve_cubic(g, engine="python")
        h2, s2 = solve_cubic(g, engine="compiled")
        _same(h1, s1, h2, s2)
        assert is_state0(a_scaled(h1))


@pytest.mark.parametrize("seed", range(12))
def test_engines_agree_random(seed):
    n = [10, 26, 50, 98, 400, 2000][seed % 6]
    g = random_regular(n, 3, seed)
    h1, s1 = solve_cubic(g, check=seed < 6)
    h2, s2 = solve_cubic(g)
    _same(h1, s1, h2, s2)
    assert s2.final_a == a_scaled(h2) == _ref(h2)
    assert is_state0(s2.final_a)


def test_state_repairs_occur_in_practice():
    total = Counter()
    for seed in range(30):
        _, st = solve_cubic(random_regular(2000, 3, seed))
        total["s1"] += st.state1_repairs
        total["s2"] += st.state2_repairs
    assert total["s1"] > 0 and total["s2"] > 0


def test_petersen():
    g = petersen()
    h, _ = solve_cubic(g, engine="python", check=True)
    assert is_state0(a_scaled(h))
    assert oracle_state_exists(g, "state0") is not None
    assert oracle_best(g).best_scaled_inf_norm <= max(map(abs, a_scaled(h)))


def test_state0_exists_on_every_small_class():
    for g in all_cubic_graphs_upto8():
        w = oracle_state_exists(g, "state0")
        assert w is not None and is_state0(ref_a(g.n_alive, 3, [g.endpoints(e) for e in range(g.num_edge_ids)], w))


def test_bound_on_random_graphs():
    for seed in range(40):
        n = 2 * random.Random(seed).randint(1, 3000)
        h, st = solve_cubic(random_regular(n, 3, seed))
        assert all(abs(x) <= 8 for x in a_scaled(h))
        assert st.ops + st.base_components == n // 2


def test_work_is_linear():
    per_n = []
    for n in (10_000, 20_000, 40_000, 80_000):
        works = sorted(solve_cubic(random_regular(n, 3, s))[1].work for s in range(5))
        per_n.append(works[2])
    for a, b in zip(per_n, per_n[1:]):
        assert b / a <= 2.2


def test_rejects_bad_hosts():
    with pytest.raises(NotCubic):
        solve_cubic(cycle(6))
    g = k4()
    g.kill_edge(0)
    with pytest.raises(NotCubic):
        solve_cubic(g)
    with pytest.raises(ValueError):
        solve_cubic(k4(), engine="gpu")
    assert is_proper(a_scaled(solve_cubic(k4())[0]))
