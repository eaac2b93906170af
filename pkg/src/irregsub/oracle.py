"""Brute force over all spanning subgraphs of a small regular multigraph.

Subgraphs are visited in reflected Gray-code order: step t toggles edge
ctz(t), so the degree histogram is updated in O(1) per subgraph.  Fixed
predicates (boxes on the scaled a-vector) run in a compiled loop; arbitrary
Python callables use the slower generator below.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

import numpy as np
from numba import njit

from .cubic import CubicState
from .errors import NotRegular, TooLarge
from .multigraph import Multigraph, regularity

BUDGET = 26


@dataclass(frozen=True)
class OracleResult:
    best_scaled_inf_norm: int
    witness: frozenset
    subgraph_count: int


def _setup(g: Multigraph):
    d = regularity(g)
    if d is None:
        raise NotRegular("oracle needs a regular multigraph")
    edges = list(g.live_edges())
    if len(edges) > BUDGET:
        raise TooLarge(f"{len(edges)} live edges exceed the budget of {BUDGET}")
    eu = np.array([g.eu[e] for e in edges], np.int64)
    ev = np.array([g.ev[e] for e in edges], np.int64)
    return d, edges, eu, ev


def _mask_to_edges(edges, mask: int) -> frozenset:
    return frozenset(e for b, e in enumerate(edges) if mask >> b & 1)


@njit(cache=True)
def _ctz(t):
    b = 0
    while not t & 1:
        t >>= 1
        b += 1
    return b


@njit(cache=True)
def _scan(eu, ev, nv, n, d, lo, hi, find_first):
    """Gray-code walk.  With find_first, return the first step whose a-vector
    lies in the box [lo, hi]; otherwise return the first step minimising max |a~|."""
    m = eu.shape[0]
    deg = np.zeros(nv, np.int64)
    cnt = np.zeros(d + 2, np.int64)
    cnt[0] = n
    d1 = d + 1
    best = 1 << 62
    best_t = -1
    total = 1 << m
    for t in range(total):
        if t > 0:
            b = _ctz(t)
            x, y = eu[b], ev[b]
            mask = t ^ (t >> 1)
            step = 1 if mask >> b & 1 else -1
            for w in (x, y):
                k = deg[w]
                cnt[k] -= 1
                cnt[k + step] += 1
                deg[w] = k + step
        if find_first:
            ok = True
            for k in range(d1):
                a = d1 * cnt[k] - n
                if a < lo[k] or a > hi[k]:
                    ok = False
                    break
            if ok:
                return t, 0
        else:
            worst = 0
            for k in range(d1):
                a = d1 * cnt[k] - n
                if a < 0:
                    a = -a
                if a > worst:
                    worst = a
                    if worst >= best:
                        break
            if worst < best:
                best = worst
                best_t = t
    return best_t, best


def gray_walk(g: Multigraph) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """Yield (step, edge mask, degree profile m(H, 0..d)) for every subgraph, incrementally."""
    d, edges, eu, ev = _setup(g)
    deg = [0] * g.num_vertices
    cnt = [0] * (d + 2)
    cnt[0] = g.n_alive
    yield 0, 0, tuple(cnt[: d + 1])
    for t in range(1, 1 << len(edges)):
        b = (t & -t).bit_length() - 1
        mask = t ^ (t >> 1)
        step = 1 if mask >> b & 1 else -1
        for w in (int(eu[b]), int(ev[b])):
            k = deg[w]
            cnt[k] -= 1
            cnt[k + step] += 1
            deg[w] = k + step
        yield t, mask, tuple(cnt[: d + 1])


def oracle_best(g: Multigraph) -> OracleResult:
    """Exact minimum over all spanning subgraphs of max_i |(d+1) m(H, i) - n|."""
    d, edges, eu, ev = _setup(g)
    dummy = np.zeros(d + 1, np.int64)
    t, best = _scan(eu, ev, g.num_vertices, g.n_alive, d, dummy, dummy, False)
    t = int(t)
    return OracleResult(int(best), _mask_to_edges(edges, t ^ (t >> 1)), 1 << len(edges))


Predicate = Union[str, CubicState, Callable[[tuple], bool]]

_STATE_BOXES = {
    "state0": ((-8, -2, -2, -8), (2, 8, 8, 2)),
    "state1": ((-10, -2, -2, -2), (-10, 6, 6, 6)),
    "state2": ((-10, 2, -2, -6), (-10, 10, 6, 2)),
    "proper": ((-8, -8, -8, -8), (8, 8, 8, 8)),
}


def predicate_box(pred, d: int, n: int):
    """Translate a named predicate into per-entry bounds on the scaled a-vector.

    Names: "state0", "state1", "state2", "proper" (cubic only), "norm:k"
    (max |a~_i| <= k) and "distinct" (every m(H, i) <= 1).
    """
    if isinstance(pred, CubicState):
        pred = pred.value
    name = str(pred).lower()
    d1 = d + 1
    if name in _STATE_BOXES:
        if d != 3:
            raise ValueError(f"{name} is defined for cubic graphs only")
        lo, hi = _STATE_BOXES[name]
        return list(lo), list(hi)
    if name.startswith("norm:"):
        k = int(name[5:])
        return [-k] * d1, [k] * d1
    if name in ("distinct", "max_m:1", "all_m_le_1"):
        return [-n] * d1, [d1 - n] * d1
    raise ValueError(f"unknown predicate {pred!r}")


def oracle_state_exists(g: Multigraph, predicate: Predicate) -> frozenset | None:
    """First subgraph in Gray-code order whose scaled a-vector satisfies the predicate."""
    d, edges, eu, ev = _setup(g)
    n = g.n_alive
    if callable(predicate) and not isinstance(predicate, CubicState):
        for _, mask, prof in gray_walk(g):
            if predicate(tuple((d + 1) * c - n for c in prof)):
                return _mask_to_edges(edges, mask)
        return None
    lo, hi = predicate_box(predicate, d, n)
    t, _ = _scan(eu, ev, g.num_vertices, n, d, np.array(lo, np.int64), np.array(hi, np.int64), True)
    t = int(t)
    if t < 0:
        return None
    return _mask_to_edges(edges, t ^ (t >> 1))
