"""Local adjustments: edge and multi-star moves and the searches that find them.

Deltas are returned as tuples over the scaled b-vector (index ``i - 1`` holds
``b~_i``).  Deleting an edge of ``H`` whose endpoints have degrees ``i, j``
raises ``b~_i`` and ``b~_j`` by ``d + 1``; adding a complement edge lowers
``b~_{i+1}`` and ``b~_{j+1}``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from ._buckets import Buckets
from .errors import IndexOutOfRange, NotCubic, NotRegular, WrongSide
from .irregularity import a_scaled
from .multigraph import SpanningSubgraph, ToggleReport

DELETE = "delete"
ADD = "add"
IN_H = "H"
IN_COMPLEMENT = "C"


class DegreePairIndex:
    """Edges bucketed by side and endpoint degrees, kept current under toggles.

    Buckets are keyed by the raw state so that a polarity flip costs nothing;
    :meth:`find` translates an effective query into the raw bucket.
    """

    def __init__(self, h: SpanningSubgraph):
        if h.d is None:
            raise NotRegular("index needs a regular host")
        self.h = h
        self.d1 = h.d + 1
        g = h.host
        self.buckets = Buckets(2 * self.d1 * self.d1, g.num_edge_ids)
        for e in g.live_edges():
            self.buckets.add(e, self._key(e))

    def _key(self, e: int) -> int:
        h = self.h
        g = h.host
        i, j = h.hdeg[g.eu[e]], h.hdeg[g.ev[e]]
        if i > j:
            i, j = j, i
        side = 0 if h.member[e] else 1
        return (side * self.d1 + i) * self.d1 + j

    def toggle(self, e: int) -> ToggleReport:
        h = self.h
        g = h.host
        inc = g.inc
        touched = set(inc[g.eu[e]])
        touched.update(inc[g.ev[e]])
        bk = self.buckets
        for f in touched:
            bk.remove(f)
        rep = h.toggle(e)
        for f in touched:
            bk.add(f, self._key(f))
        return rep

    def find(self, in_h: bool, i: int, j: int) -> int:
        """Some edge on the given effective side with endpoint degrees {i, j}, or -1."""
        h = self.h
        d = h.d
        raw_member = in_h != h.polarity
        if h.polarity:
            i, j = d - i, d - j
        if i > j:
            i, j = j, i
        if i < 0 or j > d:
            return -1
        side = 0 if raw_member else 1
        return self.buckets.pick((side * self.d1 + i) * self.d1 + j)


def _toggle(h: SpanningSubgraph, e: int, index: DegreePairIndex | None) -> ToggleReport:
    return index.toggle(e) if index is not None else h.toggle(e)


def apply_edge(h: SpanningSubgraph, e: int, action: str, index: DegreePairIndex | None = None) -> tuple[int, ...]:
    """Delete (``action='delete'``) or add one edge; return the predicted b~ delta."""
    d = h.d
    if d is None:
        raise NotRegular("host must be regular")
    inside = h.is_member(e)
    if action == DELETE and not inside:
        raise WrongSide(e, f"edge {e} is not in H")
    if action == ADD and inside:
        raise WrongSide(e, f"edge {e} is already in H")
    g = h.host
    i = h.effective_degree(g.eu[e])
    j = h.effective_degree(g.ev[e])
    delta = [0] * d
    if action == DELETE:
        delta[i - 1] += d + 1
        delta[j - 1] += d + 1
    elif action == ADD:
        delta[i] -= d + 1
        delta[j] -= d + 1
    else:
        raise ValueError(f"unknown action {action!r}")
    _toggle(h, e, index)
    return tuple(delta)


@dataclass(frozen=True)
class MultiStar:
    """A center joined to distinct leaves by parallel bundles, all on one side.

    ``leaves`` holds ``(leaf, edge_ids)``; the multiplicity of a leaf is
    ``len(edge_ids)``.  Degrees are H-degrees at the time the star was found.
    """

    center: int
    leaves: tuple[tuple[int, tuple[int, ...]], ...]
    side: str
    center_degree: int
    leaf_degrees: tuple[int, ...]

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(e for _, es in self.leaves for e in es)

    @property
    def size(self) -> int:
        return sum(len(es) for _, es in self.leaves)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(es) for _, es in self.leaves)


def star_delta(d: int, star: MultiStar) -> tuple[int, ...]:
    """b~ delta of removing (side H) or adding (side C) the star's edges."""
    d1 = d + 1
    delta = [0] * d
    k, m = star.center_degree, star.size
    if star.side == IN_H:
        spots = [k + 1 - t for t in range(1, m + 1)]
        for ell, alpha in zip(star.leaf_degrees, star.multiplicities):
            spots.extend(ell + 1 - t for t in range(1, alpha + 1))
        sign = 1
    else:
        spots = [k + t for t in range(1, m + 1)]
        for ell, alpha in zip(star.leaf_degrees, star.multiplicities):
            spots.extend(ell + t for t in range(1, alpha + 1))
        sign = -1
    for s in spots:
        if not 1 <= s <= d:
            raise IndexOutOfRange(f"star touches b index {s} outside [1, {d}]")
        delta[s - 1] += sign * d1
    return tuple(delta)


def apply_multistar(h: SpanningSubgraph, star: MultiStar, index: DegreePairIndex | None = None) -> tuple[int, ...]:
    d = h.d
    if d is None:
        raise NotRegular("host must be regular")
    g = h.host
    want = star.side == IN_H
    seen = set()
    if h.effective_degree(star.center) != star.center_degree:
        raise WrongSide(star.center, "center degree changed since the star was found")
    for (leaf, es), ell in zip(star.leaves, star.leaf_degrees):
        if leaf == star.center or leaf in seen:
            raise WrongSide(leaf, "leaves must be distinct and differ from the center")
        seen.add(leaf)
        if h.effective_degree(leaf) != ell:
            raise WrongSide(leaf, "leaf degree changed since the star was found")
        for e in es:
            if not g.alive[e] or {g.eu[e], g.ev[e]} != {star.center, leaf}:
                raise WrongSide(e, f"edge {e} does not join {star.center} and {leaf}")
            if h.is_member(e) != want:
                raise WrongSide(e)
    delta = star_delta(d, star)
    for e in star.edges:
        _toggle(h, e, index)
    return delta


@dataclass(frozen=True)
class IntervalParams:
    alpha: int
    a_plus: frozenset
    a_minus: frozenset
    n: dict = field(default_factory=dict)
    m: dict = field(default_factory=dict)


def interval_params(b: Sequence[int], alpha_scaled: int) -> IntervalParams:
    """Index sets where b exceeds +-alpha and the run lengths around each index."""
    d = len(b)
    plus = frozenset(i for i in range(1, d + 1) if b[i - 1] > alpha_scaled)
    minus = frozenset(i for i in range(1, d + 1) if b[i - 1] < -alpha_scaled)
    n, m = {}, {}
    for i in plus:
        n[i] = next(t for t in range(1, d + 2) if i + t not in plus)
        m[i] = next(t for t in range(1, d + 2) if i - t not in plus)
    for i in minus:
        n[i] = next(t for t in range(1, d + 2) if i - t not in minus)
        m[i] = next(t for t in range(1, d + 2) if i + t not in minus)
    return IntervalParams(alpha_scaled, plus, minus, n, m)


@dataclass(frozen=True)
class Candidate:
    kind: str  # edge_in_h | edge_in_complement | star_in_h | star_in_complement
    edge: int = -1
    i: int = -1
    j: int = -1
    star: MultiStar | None = None


def _edge_clauses(h, params, index):
    d = h.d
    g = h.host
    plus, minus = params.a_plus, params.a_minus
    if index is not None:
        for i in sorted(minus):
            for j in range(d + 1):
                if j not in plus:
                    e = index.find(True, i, j)
                    if e >= 0:
                        return Candidate("edge_in_h", e, i, j)
        for i in sorted(plus):
            for j in range(1, d + 1):
                if j not in minus:
                    e = index.find(False, i - 1, j - 1)
                    if e >= 0:
                        return Candidate("edge_in_complement", e, i, j)
        return None
    for e in g.live_edges():
        if not h.is_member(e):
            continue
        x, y = h.effective_degree(g.eu[e]), h.effective_degree(g.ev[e])
        for i, j in ((x, y), (y, x)):
            if i in minus and j not in plus:
                return Candidate("edge_in_h", e, i, j)
    for e in g.live_edges():
        if h.is_member(e):
            continue
        x, y = h.effective_degree(g.eu[e]) + 1, h.effective_degree(g.ev[e]) + 1
        for i, j in ((x, y), (y, x)):
            if i in plus and j not in minus:
                return Candidate("edge_in_complement", e, i, j)
    return None


def _selection_star(h, params, in_h):
    """Directed-selection search for a multi-star.

    in_h: vertices of degree l in A- each select their n_l lowest-id incident
    H-edges; a center of degree k in A+ receiving m_k + 1 of them is a star.
    Otherwise vertices of degree i-1 (i in A+) select complement edges and a
    center of degree k-1 (k in A-) is sought.
    """
    g = h.host
    if in_h:
        source, target, shift = params.a_minus, params.a_plus, 0
    else:
        source, target, shift = params.a_plus, params.a_minus, 1
    arrivals = defaultdict(list)
    for x in g.vertices():
        ell = h.effective_degree(x) + shift
        if ell not in source:
            continue
        side_edges = sorted(f for f in g.inc[x] if h.is_member(f) == in_h)
        for f in side_edges[: params.n[ell]]:
            y = g.other(f, x)
            k = h.effective_degree(y) + shift
            if k not in target:
                continue
            got = arrivals[y]
            got.append((f, x))
            if len(got) == params.m[k] + 1:
                bundles: dict[int, list[int]] = {}
                for e, leaf in got:
                    bundles.setdefault(leaf, []).append(e)
                leaves = tuple((leaf, tuple(es)) for leaf, es in bundles.items())
                star = MultiStar(
                    center=y,
                    leaves=leaves,
                    side=IN_H if in_h else IN_COMPLEMENT,
                    center_degree=h.effective_degree(y),
                    leaf_degrees=tuple(h.effective_degree(leaf) for leaf, _ in leaves),
                )
                return star
    return None


def find_candidate(h: SpanningSubgraph, params: IntervalParams, index: DegreePairIndex | None = None) -> Candidate | None:
    """First of: deletable H-edge, addable complement edge, H-star, complement star."""
    if h.d is None:
        raise NotRegular("host must be regular")
    c = _edge_clauses(h, params, index)
    if c is not None:
        return c
    if params.a_plus and params.a_minus:
        star = _selection_star(h, params, True)
        if star is not None:
            return Candidate("star_in_h", star=star)
        star = _selection_star(h, params, False)
        if star is not None:
            return Candidate("star_in_complement", star=star)
    return None


def _require_cubic(h):
    if h.d != 3:
        raise NotCubic("host must be cubic")


def find_edge_33(h: SpanningSubgraph) -> int | None:
    """An edge of H joining two vertices of H-degree 3.

    Exists whenever ``3 a~_3 > a~_1 + 2 a~_2``.
    """
    _require_cubic(h)
    g = h.host
    for e in g.live_edges():
        if h.is_member(e) and h.effective_degree(g.eu[e]) == 3 and h.effective_degree(g.ev[e]) == 3:
            return e
    return None


def find_edge_00_complement(h: SpanningSubgraph) -> int | None:
    """A complement edge joining two vertices of H-degree 0 (guaranteed when ``3 a~_0 > 2 a~_1 + a~_2``)."""
    _require_cubic(h)
    g = h.host
    for e in g.live_edges():
        if not h.is_member(e) and h.effective_degree(g.eu[e]) == 0 and h.effective_degree(g.ev[e]) == 0:
            return e
    return None


def edge_33_guaranteed(h: SpanningSubgraph) -> bool:
    a = a_scaled(h)
    return 3 * a[3] > a[1] + 2 * a[2]


def edge_00_guaranteed(h: SpanningSubgraph) -> bool:
    a = a_scaled(h)
    return 3 * a[0] > 2 * a[1] + a[2]
