"""Linear-time construction of a state-0 spanning subgraph of a cubic multigraph.

The host is contracted, two vertices at a time, down to disjoint copies of
K_2^3.  An explicit state-0 subgraph of that base is then carried back through
the recorded steps in reverse; after each step a constant number of local
repairs restores state 0.  The repairs only ever need "some edge of H (or of
the complement) with endpoint degrees {i, j}" or "some path x-y-z in H with
d(x) = d(z) = 1 and d(y) = i", so both families are kept in O(1)-update
buckets.

All a-vectors are scaled by 4: ``a~_i = 4 m(H, i) - n``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from ._buckets import Buckets
from .errors import (
    InternalInvariant,
    MalformedRecord,
    NotConnectedCubic,
    NotCubic,
    NotProper,
    TooSmall,
    WrongState,
)
from .multigraph import CubicOpRecord, Multigraph, SpanningSubgraph, regularity


class CubicState(enum.Enum):
    STATE0 = "state0"
    STATE1 = "state1"
    STATE2 = "state2"
    PROPER = "proper"
    OTHER = "other"


def is_state0(a) -> bool:
    a0, a1, a2, a3 = a
    return -8 <= a0 <= 2 and -8 <= a3 <= 2 and -2 <= a1 <= 8 and -2 <= a2 <= 8


def is_state1(a) -> bool:
    a0, a1, a2, a3 = a
    return a0 == -10 and -2 <= a1 <= 6 and -2 <= a2 <= 6 and -2 <= a3 <= 6


def is_state2(a) -> bool:
    a0, a1, a2, a3 = a
    return a0 == -10 and 2 <= a1 <= 10 and -2 <= a2 <= 6 and -6 <= a3 <= 2


def is_proper(a) -> bool:
    return all(-8 <= x <= 8 for x in a)


_PREDICATES = {
    CubicState.STATE0: is_state0,
    CubicState.STATE1: is_state1,
    CubicState.STATE2: is_state2,
    CubicState.PROPER: is_proper,
}


def in_state(a, state: CubicState) -> bool:
    """Membership test for one state, ignoring classification priority."""
    return _PREDICATES[state](a)


def classify(a) -> CubicState:
    if len(a) != 4:
        raise NotCubic(f"expected 4 entries, got {len(a)}")
    if is_state0(a):
        return CubicState.STATE0
    if is_state1(a):
        return CubicState.STATE1
    if is_state2(a):
        return CubicState.STATE2
    if is_proper(a):
        return CubicState.PROPER
    return CubicState.OTHER


# ---------------------------------------------------------------------------
# decomposition

def _others(g: Multigraph, e: int, p: int) -> list[int]:
    """Far endpoints of the edges at p other than e."""
    eu, ev = g.eu, g.ev
    out = []
    for f in g.inc[p]:
        if f != e:
            out.append(ev[f] if eu[f] == p else eu[f])
    return out


def _contractible(g: Multigraph, e: int) -> int:
    """0 if e is part of a K_2^3; its multiplicity if it can be contracted; -1 otherwise."""
    u, v = g.eu[e], g.ev[e]
    ou = _others(g, e, u)
    mult = 1 + ou.count(v)
    if mult == 3:
        return 0
    ov = _others(g, e, v)
    if mult == 2:
        x = ou[0] if ou[0] != v else ou[1]
        y = ov[0] if ov[0] != u else ov[1]
        return 2 if x != y else -1
    return 1 if ou[0] != ou[1] and ov[0] != ov[1] else -1


def _edge_to(g: Multigraph, p: int, q: int, skip: int = -1) -> int:
    eu, ev = g.eu, g.ev
    for f in g.inc[p]:
        if f != skip and (eu[f] == q or ev[f] == q):
            return f
    raise InternalInvariant(f"no edge {p}-{q}")


def locate_special(g: Multigraph, e: int) -> tuple[int, str] | None:
    """A contractible edge near e and the route taken to reach it, or None
    when e lies in a K_2^3 component.

    Walks at most three steps from e: a simple edge whose endpoint carries a
    doubled edge leads to that doubled edge; a doubled edge whose ends share
    their third neighbour w leads to the remaining edge w-x, and if x is
    itself on a doubled edge x=y, that doubled edge qualifies.

    Routes: "direct", "via-doubled", "shared-neighbour", "via-doubled-far"
    (the last two start from a doubled edge u=v, possibly reached by the
    first hop from a simple edge, marked with a "hop+" prefix).
    """
    status = _contractible(g, e)
    if status == 0:
        return None
    if status > 0:
        return e, "direct"
    prefix = ""
    u, v = g.eu[e], g.ev[e]
    if 1 + _others(g, e, u).count(v) == 1:
        for p in (u, v):
            o = _others(g, e, p)
            if o[0] == o[1]:
                e = _edge_to(g, p, o[0], skip=e)
                break
        if _contractible(g, e) > 0:
            return e, "via-doubled"
        prefix = "hop+"
        u, v = g.eu[e], g.ev[e]
    # doubled edge u=v whose ends share the third neighbour w
    w = next(q for q in _others(g, e, u) if q != v)
    f = next(f for f in g.inc[w] if g.other(f, w) not in (u, v))
    if _contractible(g, f) > 0:
        return f, prefix + "shared-neighbour"
    x = g.other(f, w)
    y = next(q for q in _others(g, f, x))
    f2 = _edge_to(g, x, y, skip=f)
    if _contractible(g, f2) != 2:
        raise InternalInvariant("local search for a contractible edge failed")
    return f2, prefix + "via-doubled-far"


def special_edge(g: Multigraph, e: int) -> int | None:
    """A contractible edge near e, or None when e lies in a K_2^3 component."""
    hit = locate_special(g, e)
    return None if hit is None else hit[0]


def _contract_at(g: Multigraph, f: int) -> CubicOpRecord:
    u, v = g.eu[f], g.ev[f]
    fresh = g.num_edge_ids
    if _contractible(g, f) == 2:
        par = [p for p in g.inc[u] if g.other(p, u) == v]
        xu = next(p for p in g.inc[u] if g.other(p, u) != v)
        vy = next(p for p in g.inc[v] if g.other(p, v) != u)
        x, y = g.other(xu, u), g.other(vy, v)
        rec = CubicOpRecord(1, (fresh,), (u, v), (xu, par[0], par[1], vy), (x, y))
    else:
        fu = [p for p in g.inc[u] if p != f]
        fv = [p for p in g.inc[v] if p != f]
        x, y = g.other(fu[0], u), g.other(fu[1], u)
        z, w = g.other(fv[0], v), g.other(fv[1], v)
        rec = CubicOpRecord(2, (fresh, fresh + 1), (u, v), (fu[0], fu[1], fv[0], fv[1], f), (x, y, z, w))
    g.contract_pair(rec)
    return rec


def find_contraction(g: Multigraph, e: int) -> CubicOpRecord:
    """Contract g at an edge near e (mutating g) and return the inverse generation step.

    Raises TooSmall if e sits in a K_2^3 component and NotConnectedCubic if
    the neighbourhood of e is not cubic.
    """
    if not g.alive[e]:
        raise NotConnectedCubic(f"edge {e} is not live")
    near = {g.eu[e], g.ev[e]}
    for p in list(near):
        near.update(g.other(f, p) for f in g.inc[p])
    if any(g.degree(p) != 3 for p in near):
        raise NotConnectedCubic(f"the component of edge {e} is not cubic")
    f = special_edge(g, e)
    if f is None:
        raise TooSmall(f"edge {e} lies in a K_2^3 component")
    return _contract_at(g, f)


def decompose(g: Multigraph) -> tuple[int, list[CubicOpRecord]]:
    """Contract g in place to m disjoint K_2^3; return m and the steps in contraction order."""
    if regularity(g) != 3:
        raise NotCubic("decomposition needs a cubic multigraph")
    n0 = g.n_alive
    ops: list[CubicOpRecord] = []
    alive = g.alive
    stack = [e for e in range(g.num_edge_ids - 1, -1, -1) if alive[e]]
    while stack:
        e = stack.pop()
        if not alive[e]:
            continue
        f = special_edge(g, e)
        if f is None:
            continue
        rec = _contract_at(g, f)
        ops.append(rec)
        stack.extend(rec.removed)
        if alive[e]:
            stack.append(e)
    m = g.n_alive // 2
    if 2 * (m + len(ops)) != n0:
        raise InternalInvariant("vertex count identity failed after decomposition")
    return m, ops


def replay(g: Multigraph, ops: list[CubicOpRecord]) -> None:
    """Re-apply recorded steps (latest contraction first) to a decomposed graph."""
    for rec in reversed(ops):
        g.expand_pair(rec)


# ---------------------------------------------------------------------------
# base subgraph of m K_2^3

_TAIL = (1, 2, 0, 3)


def base_pattern(m: int) -> list[int]:
    """Edge counts taken from each of m copies of K_2^3."""
    if m < 1:
        raise ValueError("m must be positive")
    k, r = divmod(m, 4)
    return [t % 4 for t in range(4 * k)] + list(_TAIL[:r])


def _base_members(g: Multigraph) -> list[int]:
    pattern = None
    members = []
    seen = bytearray(g.num_vertices)
    comps = []
    for v in g.vertices():
        if seen[v]:
            continue
        es = sorted(g.inc[v])
        p = g.other(es[0], v)
        seen[v] = seen[p] = 1
        comps.append(es)
    pattern = base_pattern(len(comps))
    for es, c in zip(comps, pattern):
        members.extend(es[:c])
    return members


def base_subgraph(m: int) -> SpanningSubgraph:
    """State-0 spanning subgraph of a fresh m K_2^3 (vertices 2t, 2t+1 form copy t)."""
    g = Multigraph.build(2 * m, [(2 * t, 2 * t + 1) for t in range(m) for _ in range(3)])
    return SpanningSubgraph(g, _base_members(g))


# ---------------------------------------------------------------------------
# bucket index

_SH2, _SH3, _SC2, _SC3 = range(4)


class EdgeIndex:
    """Buckets P/Q (edges of H / of the complement by endpoint degrees) and
    star centers, maintained under toggles and generation steps.

    Keys use raw membership and raw degrees; queries take effective degrees
    and translate through the subgraph's polarity, so complementing is free.
    """

    def __init__(self, h: SpanningSubgraph):
        g = h.host
        if h.d != 3:
            raise NotCubic("index needs a cubic host")
        self.h = h
        self.g = g
        self.toggles = 0
        self.eb = Buckets(32, g.num_edge_ids)
        self.vb = Buckets(4, g.num_vertices)
        for e in g.live_edges():
            self.eb.add(e, self._ekey(e))
        for v in g.vertices():
            s = self._slot(v)
            if s >= 0:
                self.vb.add(v, s)

    # -- raw keys ----------------------------------------------------------

    def _ekey(self, e: int) -> int:
        hdeg = self.h.hdeg
        i, j = hdeg[self.g.eu[e]], hdeg[self.g.ev[e]]
        if i > j:
            i, j = j, i
        return (0 if self.h.member[e] else 16) + 4 * i + j

    def _slot(self, v: int) -> int:
        g = self.g
        hdeg, member = self.h.hdeg, self.h.member
        eu, ev = g.eu, g.ev
        k = hdeg[v]
        if k >= 2:
            want_member, want_deg, slot = True, 1, k - 2
        else:
            want_member, want_deg, slot = False, 2, 3 - k
        c = 0
        for f in g.inc[v]:
            if member[f] == want_member:
                o = ev[f] if eu[f] == v else eu[f]
                if hdeg[o] == want_deg:
                    c += 1
        return slot if c >= 2 else -1

    @property
    def bucket_updates(self) -> int:
        return self.eb.updates + self.vb.updates

    # -- effective queries ------------------------------------------------

    def a(self) -> tuple[int, int, int, int]:
        c = self.h.counts
        n = self.g.n_alive
        if self.h.polarity:
            return (4 * c[3] - n, 4 * c[2] - n, 4 * c[1] - n, 4 * c[0] - n)
        return (4 * c[0] - n, 4 * c[1] - n, 4 * c[2] - n, 4 * c[3] - n)

    def state(self) -> CubicState:
        return classify(self.a())

    def _find(self, raw_h: bool, i: int, j: int) -> int:
        if self.h.polarity:
            i, j = 3 - i, 3 - j
            raw_h = not raw_h
        if i > j:
            i, j = j, i
        return self.eb.pick((0 if raw_h else 16) + 4 * i + j)

    def P(self, i: int, j: int) -> int:
        """Some edge of H joining H-degrees i and j, or -1."""
        return self._find(True, i, j)

    def Q(self, i: int, j: int) -> int:
        """Some complement edge joining H-degrees i and j, or -1."""
        return self._find(False, i, j)

    def deg(self, v: int) -> int:
        k = self.h.hdeg[v]
        return 3 - k if self.h.polarity else k

    def in_h(self, e: int) -> bool:
        return self.h.member[e] != self.h.polarity

    def star(self, c: int):
        """Some path x-y-z in H with d(y) = c and d(x) = d(z) = 1, as (y, (e1, e2))."""
        slot = c if self.h.polarity else c - 2
        y = self.vb.pick(slot)
        if y < 0:
            return None
        g = self.g
        got = [f for f in g.inc[y] if self.in_h(f) and self.deg(g.other(f, y)) == 1]
        if len(got) < 2:
            raise InternalInvariant(f"vertex {y} is indexed as a star center but is not one")
        return y, (got[0], got[1])

    # -- mutation ---------------------------------------------------------

    def flip(self) -> None:
        self.h.flip_polarity()

    def toggle(self, e: int) -> None:
        g, h = self.g, self.h
        eu, ev, inc = g.eu, g.ev, g.inc
        x, y = eu[e], ev[e]
        # explicit first-seen order keeps bucket contents reproducible
        edges = list(inc[x])
        for f in inc[y]:
            if f not in edges:
                edges.append(f)
        verts = [x, y]
        for f in edges:
            for w in (eu[f], ev[f]):
                if w not in verts:
                    verts.append(w)
        eb, vb = self.eb, self.vb
        for f in edges:
            eb.remove(f)
        for w in verts:
            vb.remove(w)
        h._raw_toggle(e)
        self.toggles += 1
        for f in edges:
            eb.add(f, self._ekey(f))
        for w in verts:
            s = self._slot(w)
            if s >= 0:
                vb.add(w, s)

    def delete(self, e: int) -> None:
        if not self.in_h(e):
            raise InternalInvariant(f"edge {e} is not in H")
        self.toggle(e)

    def add(self, e: int) -> None:
        if self.in_h(e):
            raise InternalInvariant(f"edge {e} is already in H")
        self.toggle(e)

    def expand(self, rec: CubicOpRecord, sides) -> None:
        """Apply a generation step; ``sides[t]`` is the effective membership of ``rec.added[t]``.

        The sides must keep every anchor's H-degree, which is what all
        extensions used by the replay do; then only the anchors, the new
        vertices and the touched edges need re-indexing.
        """
        g, h = self.g, self.h
        eb, vb = self.eb, self.vb
        anchors = list(dict.fromkeys(rec.anchors))
        before = {a: h.hdeg[a] for a in anchors}
        for e in rec.removed:
            eb.remove(e)
            h.detach_edge(e)
        for a in anchors:
            vb.remove(a)
        g.expand_pair(rec)
        u, v = rec.vertices
        h.attach_vertex(u)
        h.attach_vertex(v)
        pol = h.polarity
        for e, s in zip(rec.added, sides):
            h.attach_edge(e, s != pol)
        eb.grow(g.num_edge_ids)
        vb.grow(g.num_vertices)
        for a in anchors:
            if h.hdeg[a] != before[a]:
                raise InternalInvariant(f"extension changed the degree of anchor {a}")
        for e in rec.added:
            eb.add(e, self._ekey(e))
        anchors += [u, v]
        for a in anchors:
            s = self._slot(a)
            if s >= 0:
                vb.add(a, s)

    def check(self) -> None:
        """Compare the maintained buckets with a from-scratch rebuild."""
        fresh = EdgeIndex(self.h)
        if [set(b) for b in fresh.eb.bags] != [set(b) for b in self.eb.bags]:
            raise InternalInvariant("edge buckets out of sync")
        if [set(b) for b in fresh.vb.bags] != [set(b) for b in self.vb.bags]:
            raise InternalInvariant("star centers out of sync")


# ---------------------------------------------------------------------------
# repairs

def _need(e: int, what: str) -> int:
    if e < 0:
        raise InternalInvariant(f"expected {what} to exist")
    return e


def proper_to_state0(ix: EdgeIndex) -> int:
    """Turn a proper subgraph into a state-0 one; returns the first-phase iteration count."""
    if not is_proper(ix.a()):
        raise NotProper(f"a~ = {ix.a()} is not proper")
    # phase 1: bring a0 and a3 down to at most 1/2
    rounds = 0
    while True:
        a = ix.a()
        if a[0] > a[3]:
            ix.flip()
            a = ix.a()
        if a[3] <= 2:
            break
        rounds += 1
        if rounds > 8:
            raise InternalInvariant("first phase exceeded 8 iterations")
        if a[2] <= 0:
            ix.delete(_need(ix.P(3, 3), "an H(3,3)-edge"))
        else:
            e = ix.P(2, 3)
            if e >= 0:
                ix.delete(e)
            else:
                e1 = _need(ix.P(2, 2), "an H(2,2)-edge")
                e2 = _need(ix.P(3, 3), "an H(3,3)-edge")
                ix.delete(e1)
                ix.delete(e2)
        if not is_proper(ix.a()):
            raise InternalInvariant(f"first phase left the proper range: {ix.a()}")
    # phase 2: raise min(a1, a2) to at least -1/2
    for _ in range(16):
        a = ix.a()
        if a[2] > a[1]:
            ix.flip()
            a = ix.a()
        if a[2] >= -2:
            break
        if a[3] > 0:
            ix.delete(_need(ix.P(3, 3), "an H(3,3)-edge"))
            break
        e = ix.Q(0, 1)
        if e >= 0:
            ix.add(e)
            continue
        # the H(0,0)-edge is only needed (and only guaranteed) when a0 >= 0
        e2 = _need(ix.Q(1, 1), "a complement H(1,1)-edge")
        if a[0] >= 0:
            ix.add(_need(ix.Q(0, 0), "a complement H(0,0)-edge"))
        ix.add(e2)
        break
    else:
        raise InternalInvariant("second phase did not finish")
    if not is_state0(ix.a()):
        raise InternalInvariant(f"result {ix.a()} is not in state 0")
    return rounds


def repair_state1(ix: EdgeIndex) -> None:
    """State-1 subgraph to a proper one."""
    if not is_state1(ix.a()):
        raise WrongState(f"a~ = {ix.a()} is not in state 1")
    for _ in range(16):
        a = ix.a()
        if not is_state1(a):
            raise InternalInvariant(f"left state 1 unexpectedly: {a}")
        e = ix.P(1, 2)
        if e >= 0:
            ix.delete(e)
            break
        e = ix.P(1, 1)
        if e >= 0:
            ix.delete(e)
            if not is_proper(ix.a()):
                f = ix.P(2, 2)
                if f < 0:
                    f = _need(ix.P(2, 3), "an H(2,2)- or H(2,3)-edge")
                ix.delete(f)
            break
        e = _need(ix.P(1, 3), "an H(1,3)-edge")
        if a[2] != 6:
            ix.delete(e)
            break
        if a[1] == 6 and a[3] == -2:
            st = ix.star(3)
            if st is None:
                raise InternalInvariant("expected a path through a degree-3 vertex")
            ix.delete(st[1][0])
            ix.delete(st[1][1])
            break
        f = ix.P(2, 2)
        if f >= 0:
            ix.delete(f)
            ix.delete(e)
            break
        ix.delete(_need(ix.P(2, 3), "an H(2,3)-edge"))
    else:
        raise InternalInvariant("state-1 repair did not finish")
    if not is_proper(ix.a()):
        raise InternalInvariant(f"state-1 repair produced {ix.a()}")


def repair_state2(ix: EdgeIndex) -> None:
    """State-2 subgraph to a proper one."""
    a = ix.a()
    if not is_state2(a):
        raise WrongState(f"a~ = {a} is not in state 2")
    if a[1] <= 6:
        repair_state1(ix)
        return
    e = ix.P(1, 1)
    if e >= 0:
        ix.delete(e)
    elif (st := ix.star(2)) is not None:
        ix.delete(st[1][0])
        ix.delete(st[1][1])
    elif a[2] != 6:
        ix.delete(_need(ix.P(1, 3), "an H(1,3)-edge"))
    else:
        e, f = ix.P(1, 2), ix.P(1, 3)
        if e >= 0 and f >= 0:
            ix.delete(e)
            ix.delete(f)
        elif e < 0:
            st = ix.star(3)
            if st is None:
                raise InternalInvariant("expected a path through a degree-3 vertex")
            ix.delete(st[1][0])
            ix.delete(st[1][1])
        else:
            raise InternalInvariant("no H(1,3)-edge and no degree-2 path")
        ix.flip()
        repair_state1(ix)
    if not is_proper(ix.a()):
        raise InternalInvariant(f"state-2 repair produced {ix.a()}")


@dataclass
class CubicStats:
    n: int = 0
    base_components: int = 0
    ops: int = 0
    type1: int = 0
    type2: int = 0
    state1_repairs: int = 0
    state2_repairs: int = 0
    toggles: int = 0
    bucket_updates: int = 0
    final_a: tuple = ()
    extra: dict = field(default_factory=dict)

    @property
    def work(self) -> int:
        return self.toggles + self.bucket_updates


def apply_op_and_repair(ix: EdgeIndex, rec: CubicOpRecord, stats: CubicStats | None = None) -> None:
    """Expand the host by one step and return the subgraph to state 0."""
    if not is_state0(ix.a()):
        raise WrongState(f"a~ = {ix.a()} is not in state 0")
    if rec.op_type == 1:
        if not ix.in_h(rec.removed[0]):
            ix.flip()
        ix.expand(rec, (True, True, True, True))
        if ix.a()[0] == -10:
            if stats is not None:
                stats.state1_repairs += 1
            repair_state1(ix)
    elif rec.op_type == 2:
        in_xy, in_zw = ix.in_h(rec.removed[0]), ix.in_h(rec.removed[1])
        if not in_xy and not in_zw:
            ix.flip()
            in_xy = in_zw = True
        if in_xy and in_zw:
            ix.expand(rec, (True,) * 5)
            if ix.a()[0] == -10:
                if stats is not None:
                    stats.state1_repairs += 1
                repair_state1(ix)
        else:
            # H* takes the path through u, plus u-v; v keeps degree 1
            sides = (True, True, False, False, True) if in_xy else (False, False, True, True, True)
            ix.expand(rec, sides)
            a = ix.a()
            if not is_proper(a):
                if a[0] == -10:
                    if stats is not None:
                        stats.state2_repairs += 1
                    repair_state2(ix)
                elif a[1] == 10:
                    uv = rec.added[4]
                    u, v = rec.vertices
                    if {ix.deg(u), ix.deg(v)} != {1, 3}:
                        raise InternalInvariant("u-v is not a (1,3)-edge of H*")
                    ix.delete(uv)
                    ix.flip()
                    if not is_proper(ix.a()):
                        if stats is not None:
                            stats.state1_repairs += 1
                        repair_state1(ix)
                else:
                    raise InternalInvariant(f"unexpected vector after extension: {a}")
    else:
        raise MalformedRecord(f"unknown op type {rec.op_type}")
    proper_to_state0(ix)


def solve_cubic(g: Multigraph, check: bool = False, engine: str = "auto") -> tuple[SpanningSubgraph, CubicStats]:
    """State-0 spanning subgraph of a cubic multigraph, so |m(H,k) - n/4| <= 2 for all k.

    ``engine`` is "python" (reference, supports ``check``), "compiled" or
    "auto" (compiled unless ``check`` is set).  Both engines make the same
    choices and return identical subgraphs and counters.
    """
    if regularity(g) != 3:
        raise NotCubic("solve_cubic needs a cubic multigraph")
    if g.m_alive != g.num_edge_ids or g.n_alive != g.num_vertices:
        raise ValueError("input graph must not contain dead edges or vertices")
    if engine not in ("auto", "python", "compiled"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "compiled" or (engine == "auto" and not check):
        return _solve_compiled(g)
    work = g.copy()
    m, ops = decompose(work)
    h = SpanningSubgraph(work, _base_members(work))
    ix = EdgeIndex(h)
    stats = CubicStats(n=g.n_alive, base_components=m, ops=len(ops))
    if not is_state0(ix.a()):
        raise InternalInvariant(f"base subgraph {ix.a()} is not in state 0")
    for rec in reversed(ops):
        if rec.op_type == 1:
            stats.type1 += 1
        else:
            stats.type2 += 1
        apply_op_and_repair(ix, rec, stats)
        if check:
            ix.check()
    stats.toggles = ix.toggles
    stats.bucket_updates = ix.bucket_updates
    stats.final_a = ix.a()
    pol = h.polarity
    members = [h.member[e] != pol for e in range(g.num_edge_ids)]
    return _wrap(g, members), stats


def _solve_compiled(g: Multigraph) -> tuple[SpanningSubgraph, CubicStats]:
    from . import _cubic_kernel as K

    n, m0 = g.num_vertices, g.num_edge_ids
    S = K.make_state(n, np.asarray(g.eu, np.int64), np.asarray(g.ev, np.int64))
    ops = np.full((n // 2 + 1, 14), -1, np.int64)
    try:
        k = K.decompose(S, ops)
        K.build_base_and_index(S)
        K.replay(S, ops, k)
    except RuntimeError as exc:
        raise InternalInvariant(str(exc)) from None
    sc = S[16]
    pol = bool(sc[K.POL])
    members = (S[5][:m0] != pol).tolist()
    stats = CubicStats(
        n=n,
        base_components=n // 2 - int(k),
        ops=int(k),
        type1=int(sc[K.T1]),
        type2=int(sc[K.T2]),
        state1_repairs=int(sc[K.S1]),
        state2_repairs=int(sc[K.S2]),
        toggles=int(sc[K.TOGGLES]),
        bucket_updates=int(sc[K.UPD]),
    )
    out = _wrap(g, members)
    stats.final_a = tuple(4 * c - n for c in out.counts)
    return out, stats


def _wrap(g: Multigraph, members: list[bool]) -> SpanningSubgraph:
    """SpanningSubgraph on g from a full membership list, without per-edge toggles."""
    out = SpanningSubgraph.__new__(SpanningSubgraph)
    out.host = g
    out.polarity = False
    out.d = 3
    out.member = members
    hdeg = np.zeros(g.num_vertices, np.int64)
    mask = np.asarray(members, dtype=bool)
    if mask.any():
        np.add.at(hdeg, np.asarray(g.eu)[mask], 1)
        np.add.at(hdeg, np.asarray(g.ev)[mask], 1)
    out.hdeg = hdeg.tolist()
    out.counts = np.bincount(hdeg, minlength=4).tolist()
    return out
