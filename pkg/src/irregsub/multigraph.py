"""Loop-free multigraphs with stable edge ids, and spanning subgraphs over them.

Parallel edges are separate records: a spanning subgraph picks individual
copies.  Edges are never renumbered; removing one leaves a tombstone so that
recorded operations can keep addressing edges by id.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DeadEdge,
    LoopEdge,
    MalformedRecord,
    NotRegular,
    VertexOutOfRange,
)


class Multigraph:
    __slots__ = ("eu", "ev", "alive", "inc", "valive", "n_alive", "m_alive")

    def __init__(self, num_vertices: int = 0):
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.alive: list[bool] = []
        self.inc: list[list[int]] = [[] for _ in range(num_vertices)]
        self.valive: list[bool] = [True] * num_vertices
        self.n_alive = num_vertices
        self.m_alive = 0

    @classmethod
    def build(cls, num_vertices: int, edge_list: Iterable[Sequence[int]]) -> "Multigraph":
        g = cls(num_vertices)
        eu, ev, inc = g.eu, g.ev, g.inc
        for idx, (u, v) in enumerate(edge_list):
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise VertexOutOfRange(idx)
            if u == v:
                raise LoopEdge(idx)
            eu.append(u)
            ev.append(v)
            inc[u].append(idx)
            inc[v].append(idx)
        g.alive = [True] * len(eu)
        g.m_alive = len(eu)
        return g

    # -- queries ---------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        """Number of vertex ids ever allocated (dead ones included)."""
        return len(self.inc)

    @property
    def num_edge_ids(self) -> int:
        return len(self.eu)

    def vertices(self):
        return (v for v, a in enumerate(self.valive) if a)

    def live_edges(self):
        return (e for e, a in enumerate(self.alive) if a)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.eu[e], self.ev[e]

    def other(self, e: int, v: int) -> int:
        u = self.eu[e]
        return self.ev[e] if u == v else u

    def degree(self, v: int) -> int:
        return len(self.inc[v])

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.inc[v]]

    def multiplicity(self, u: int, v: int) -> int:
        eu, ev = self.eu, self.ev
        return sum(1 for e in self.inc[u] if eu[e] == v or ev[e] == v)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(self.eu[e], self.ev[e]) for e in self.live_edges()]

    def edge_multiset(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for e in self.live_edges():
            u, v = self.eu[e], self.ev[e]
            key = (u, v) if u < v else (v, u)
            out[key] = out.get(key, 0) + 1
        return out

    def copy(self) -> "Multigraph":
        g = Multigraph.__new__(Multigraph)
        g.eu = self.eu[:]
        g.ev = self.ev[:]
        g.alive = self.alive[:]
        g.inc = [list(x) for x in self.inc]
        g.valive = self.valive[:]
        g.n_alive = self.n_alive
        g.m_alive = self.m_alive
        return g

    def __repr__(self):
        return f"Multigraph(n={self.n_alive}, m={self.m_alive})"

    # -- mutation --------------------------------------------------------

    def add_vertex(self) -> int:
        self.inc.append([])
        self.valive.append(True)
        self.n_alive += 1
        return len(self.inc) - 1

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise LoopEdge(len(self.eu))
        e = len(self.eu)
        self.eu.append(u)
        self.ev.append(v)
        self.alive.append(True)
        self.inc[u].append(e)
        self.inc[v].append(e)
        self.m_alive += 1
        return e

    def kill_edge(self, e: int) -> None:
        if not self.alive[e]:
            raise DeadEdge(e)
        self.alive[e] = False
        self.inc[self.eu[e]].remove(e)
        self.inc[self.ev[e]].remove(e)
        self.m_alive -= 1

    def _place_edge(self, e: int, u: int, v: int) -> None:
        """Create edge id ``e`` as u-v, or revive it if it already exists dead."""
        if e == len(self.eu):
            self.add_edge(u, v)
            return
        if e > len(self.eu) or self.alive[e]:
            raise MalformedRecord(f"edge id {e} cannot be placed")
        a, b = self.eu[e], self.ev[e]
        if {a, b} != {u, v}:
            raise MalformedRecord(f"dead edge {e} joins {a}-{b}, not {u}-{v}")
        self.alive[e] = True
        self.inc[u].append(e)
        self.inc[v].append(e)
        self.m_alive += 1

    def _place_vertex(self, v: int) -> None:
        if v == len(self.inc):
            self.add_vertex()
            return
        if v > len(self.inc) or self.valive[v] or self.inc[v]:
            raise MalformedRecord(f"vertex id {v} cannot be placed")
        self.valive[v] = True
        self.n_alive += 1

    def _drop_vertex(self, v: int) -> None:
        if self.inc[v]:
            raise MalformedRecord(f"vertex {v} still has edges")
        self.valive[v] = False
        self.n_alive -= 1

    def expand_pair(self, record: "CubicOpRecord") -> None:
        """Apply a Type I or Type II generation step (two new vertices)."""
        x, y, pairs = _record_shape(record)
        for e, (a, b) in zip(record.removed, _removed_shape(record)):
            if e >= len(self.eu) or not self.alive[e] or {self.eu[e], self.ev[e]} != {a, b}:
                raise MalformedRecord(f"removed edge {e} is not a live {a}-{b} edge")
        for e in record.removed:
            self.kill_edge(e)
        u, v = record.vertices
        self._place_vertex(u)
        self._place_vertex(v)
        for e, (a, b) in zip(record.added, pairs):
            self._place_edge(e, a, b)

    def contract_pair(self, record: "CubicOpRecord") -> None:
        """Undo a generation step: drop its two vertices, restore removed edges."""
        x, y, pairs = _record_shape(record)
        u, v = record.vertices
        added = set(record.added)
        if set(self.inc[u]) | set(self.inc[v]) != added or len(added) != len(pairs):
            raise MalformedRecord("record does not match the neighbourhood of its vertices")
        for e, (a, b) in zip(record.added, pairs):
            if not self.alive[e] or {self.eu[e], self.ev[e]} != {a, b}:
                raise MalformedRecord(f"edge {e} is not {a}-{b}")
        for e in record.added:
            self.kill_edge(e)
        self._drop_vertex(u)
        self._drop_vertex(v)
        for e, (a, b) in zip(record.removed, _removed_shape(record)):
            self._place_edge(e, a, b)


@dataclass(frozen=True, slots=True)
class CubicOpRecord:
    """One generation step ``G -> G'``, described in the forward direction.

    Type I: removes ``x-y``, adds ``x-u, u-v, u-v, v-y`` (``added`` in that order).
    Type II: removes ``x-y, z-w``, adds ``x-u, u-y, z-v, v-w, u-v``.
    """

    op_type: int  # 1 or 2
    removed: tuple[int, ...]
    vertices: tuple[int, int]
    added: tuple[int, ...]
    anchors: tuple[int, ...]


def _record_shape(rec: CubicOpRecord):
    u, v = rec.vertices
    if rec.op_type == 1:
        if len(rec.removed) != 1 or len(rec.added) != 4 or len(rec.anchors) != 2:
            raise MalformedRecord("Type I record needs 1 removed, 4 added, 2 anchors")
        x, y = rec.anchors
        return x, y, ((x, u), (u, v), (u, v), (v, y))
    if rec.op_type == 2:
        if len(rec.removed) != 2 or len(rec.added) != 5 or len(rec.anchors) != 4:
            raise MalformedRecord("Type II record needs 2 removed, 5 added, 4 anchors")
        x, y, z, w = rec.anchors
        return x, y, ((x, u), (u, y), (z, v), (v, w), (u, v))
    raise MalformedRecord(f"unknown op type {rec.op_type}")


def _removed_shape(rec: CubicOpRecord):
    a = rec.anchors
    if rec.op_type == 1:
        return ((a[0], a[1]),)
    return ((a[0], a[1]), (a[2], a[3]))


def build(num_vertices: int, edge_list: Iterable[Sequence[int]]) -> Multigraph:
    return Multigraph.build(num_vertices, edge_list)


def regularity(g: Multigraph) -> int | None:
    """Common degree of all live vertices, or None if degrees differ."""
    d = None
    for v in g.vertices():
        k = len(g.inc[v])
        if d is None:
            d = k
        elif k != d:
            return None
    return d


class ToggleReport(NamedTuple):
    edge: int
    u: int
    v: int
    old_u: int
    new_u: int
    old_v: int
    new_v: int


class SpanningSubgraph:
    """Edge membership over a host multigraph, with an O(1) complement switch.

    ``member`` and ``hdeg`` hold the raw state; with ``polarity`` set the
    effective subgraph is the complement of the raw one.  ``counts[k]`` is the
    number of live vertices of raw degree ``k``.
    """

    __slots__ = ("host", "member", "hdeg", "counts", "polarity", "d")

    def __init__(self, host: Multigraph, members: Iterable[int] = (), polarity: bool = False):
        self.host = host
        self.member = [False] * host.num_edge_ids
        self.hdeg = [0] * host.num_vertices
        self.polarity = False
        self.d = regularity(host)
        top = max((len(x) for x in host.inc), default=0)
        self.counts = [0] * (top + 1)
        self.counts[0] = host.n_alive
        for e in members:
            if not host.alive[e]:
                raise DeadEdge(e)
            if not self.member[e]:
                self._raw_toggle(e)
        if polarity:
            self.flip_polarity()

    @classmethod
    def full(cls, host: Multigraph) -> "SpanningSubgraph":
        return cls(host, host.live_edges())

    def copy(self) -> "SpanningSubgraph":
        h = SpanningSubgraph.__new__(SpanningSubgraph)
        h.host = self.host
        h.member = self.member[:]
        h.hdeg = self.hdeg[:]
        h.counts = self.counts[:]
        h.polarity = self.polarity
        h.d = self.d
        return h

    def _raw_toggle(self, e: int) -> None:
        g = self.host
        u, v = g.eu[e], g.ev[e]
        hdeg, counts = self.hdeg, self.counts
        step = -1 if self.member[e] else 1
        self.member[e] = not self.member[e]
        for w in (u, v):
            k = hdeg[w]
            counts[k] -= 1
            counts[k + step] += 1
            hdeg[w] = k + step

    def effective_degree(self, v: int) -> int:
        k = self.hdeg[v]
        return len(self.host.inc[v]) - k if self.polarity else k

    def is_member(self, e: int) -> bool:
        return self.member[e] != self.polarity

    def members(self) -> list[int]:
        pol = self.polarity
        return [e for e in self.host.live_edges() if self.member[e] != pol]

    def degrees(self) -> list[int]:
        return [self.effective_degree(v) for v in self.host.vertices()]

    def toggle(self, e: int) -> ToggleReport:
        g = self.host
        if e >= len(g.alive) or not g.alive[e]:
            raise DeadEdge(e)
        u, v = g.eu[e], g.ev[e]
        ou, ov = self.effective_degree(u), self.effective_degree(v)
        self._raw_toggle(e)
        return ToggleReport(e, u, v, ou, self.effective_degree(u), ov, self.effective_degree(v))

    def flip_polarity(self) -> None:
        if self.d is None:
            raise NotRegular("complement degrees need a regular host")
        self.polarity = not self.polarity

    def profile(self) -> list[int]:
        """Effective degree histogram m(H, 0..d) (host must be regular)."""
        d = self.d
        if d is None:
            raise NotRegular("degree profile needs a regular host")
        c = self.counts
        raw = [c[k] if k < len(c) else 0 for k in range(d + 1)]
        return raw[::-1] if self.polarity else raw

    # -- host-mutation hooks used by the cubic replay ----------------------

    def detach_edge(self, e: int) -> None:
        if self.member[e]:
            self._raw_toggle(e)

    def attach_vertex(self, v: int) -> None:
        while len(self.hdeg) <= v:
            self.hdeg.append(0)
        self.hdeg[v] = 0
        self.counts[0] += 1

    def drop_vertex(self, v: int) -> None:
        if self.hdeg[v]:
            raise MalformedRecord(f"vertex {v} still has member edges")
        self.counts[0] -= 1

    def attach_edge(self, e: int, raw_member: bool) -> None:
        while len(self.member) <= e:
            self.member.append(False)
        self.member[e] = False
        if raw_member:
            self._raw_toggle(e)
