import pytest

from irregsub.errors import InvalidParams, RetryExhausted
from irregsub.generators import (
    GeneratorSpec,
    complete_bipartite,
    cycle,
    disjoint_union,
    doubled_graph,
    generate,
    k2k,
    k4,
    petersen,
    random_regular,
)
from irregsub.multigraph import regularity


def test_named_families():
    g = generate(GeneratorSpec("k2k", {"k": 3}))
    assert g.edge_multiset() == {(0, 1): 3}
    g = generate(GeneratorSpec("doubled", {"base": cycle(3), "s": 2}))
    assert g.num_vertices == 3 and regularity(g) == 4 and g.num_edge_ids == 6
    assert [tuple(sorted(g.endpoints(e))) for e in range(6)] == [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]
    g = generate(GeneratorSpec("complete_bipartite", {"d": 3}))
    assert regularity(g) == 3 and g.num_edge_ids == 9
    assert regularity(petersen()) == 3 and petersen().num_edge_ids == 15
    assert regularity(k4()) == 3
    assert regularity(disjoint_union(cycle(3), k2k(2))) == 2


def test_doubled_layout():
    base = random_regular(12, 3, 1)
    for s in (1, 2, 5):
        g = doubled_graph(base, s)
        assert regularity(g) == 3 * s
        for e in range(base.num_edge_ids):
            for j in range(s):
                assert g.endpoints(s * e + j) == base.endpoints(e)


def test_forced_and_deterministic():
    for seed in range(5):
        assert random_regular(2, 3, seed).edge_multiset() == {(0, 1): 3}
    a = random_regular(100, 3, 42)
    b = random_regular(100, 3, 42)
    assert a.edge_list() == b.edge_list()
    assert generate(GeneratorSpec("random", {"n": 100, "d": 3}, 42)).edge_list() == a.edge_list()


def test_random_regular_is_loop_free_and_regular():
    for seed in range(100):
        g = random_regular(100, 3, seed)
        assert all(u != v for u, v in g.edge_list())
        assert [g.degree(v) for v in g.vertices()] == [3] * 100


@pytest.mark.parametrize("d", [1, 2, 4, 5, 6])
def test_other_degrees(d):
    n = 31 + (31 * d) % 2
    g = random_regular(n, d, d)
    assert regularity(g) == d and g.num_edge_ids == n * d // 2


def test_invalid_params():
    with pytest.raises(InvalidParams):
        random_regular(5, 3)
    with pytest.raises(InvalidParams):
        k2k(0)
    with pytest.raises(InvalidParams):
        cycle(2)
    with pytest.raises(InvalidParams):
        complete_bipartite(0)
    with pytest.raises(InvalidParams):
        doubled_graph(cycle(3), 0)
    with pytest.raises(InvalidParams):
        generate(GeneratorSpec("nope"))
    with pytest.raises(InvalidParams):
        generate(GeneratorSpec("cycle"))
    with pytest.raises(RetryExhausted):
        random_regular(1, 2, 0)
