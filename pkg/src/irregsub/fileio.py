"""Plain-text formats.

Graph file (0-based vertices, edge id = order of the ``e`` lines)::

    p mgraph <n> <m>
    e <u> <v>
    ...

Subgraph file, ``<m>`` being the host's edge count::

    s <m>
    <ascending member edge ids, space separated>

Report: one ``k <i> <m(H,i)>`` line per degree class, then
``anorm <max |a~_i|> scale <d+1>``.  Blank lines and ``c`` comment lines are
ignored when parsing.
"""
from __future__ import annotations

from pathlib import Path

from .errors import InconsistentHeader, ParseError
from .irregularity import a_from_profile, inf_norm
from .multigraph import Multigraph, SpanningSubgraph


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        x = int(tok)
    except ValueError:
        raise ParseError(no, f"{what} is not an integer: {tok!r}") from None
    if x < 0:
        raise ParseError(no, f"{what} is negative")
    return x


def parse_graph(text: str) -> Multigraph:
    header = None
    edges = []
    for no, tok in _lines(text):
        if tok[0] == "p":
            if header is not None:
                raise ParseError(no, "second header line")
            if len(tok) != 4 or tok[1] != "mgraph":
                raise ParseError(no, "header must be 'p mgraph <n> <m>'")
            header = (_int(tok[2], no, "vertex count"), _int(tok[3], no, "edge count"))
        elif tok[0] == "e":
            if header is None:
                raise ParseError(no, "edge line before header")
            if len(tok) != 3:
                raise ParseError(no, "edge line must be 'e <u> <v>'")
            u, v = _int(tok[1], no, "vertex"), _int(tok[2], no, "vertex")
            if u == v:
                raise ParseError(no, f"loop at vertex {u}")
            if u >= header[0] or v >= header[0]:
                raise ParseError(no, f"vertex out of range 0..{header[0] - 1}")
            if len(edges) == header[1]:
                raise InconsistentHeader(no, f"more than {header[1]} edge lines")
            edges.append((u, v))
        else:
            raise ParseError(no, f"unknown record type {tok[0]!r}")
    if header is None:
        raise ParseError(0, "missing header line")
    if len(edges) != header[1]:
        raise InconsistentHeader(0, f"header announces {header[1]} edges, found {len(edges)}")
    return Multigraph.build(header[0], edges)


def serialize_graph(g: Multigraph) -> str:
    if g.m_alive != g.num_edge_ids:
        raise ValueError("graphs with dead edges have no positional edge ids")
    out = [f"p mgraph {g.num_vertices} {g.num_edge_ids}"]
    out.extend(f"e {u} {v}" for u, v in zip(g.eu, g.ev))
    return "\n".join(out) + "\n"


def parse_subgraph_ids(text: str) -> tuple[int, list[int]]:
    """Return (announced host edge count, member ids)."""
    header = None
    ids = None
    for no, tok in _lines(text):
        if header is None:
            if len(tok) != 2 or tok[0] != "s":
                raise ParseError(no, "header must be 's <m>'")
            header = _int(tok[1], no, "edge count")
        elif ids is None:
            ids = [_int(t, no, "edge id") for t in tok]
            for a, b in zip(ids, ids[1:]):
                if a >= b:
                    raise ParseError(no, "edge ids must be strictly ascending")
            if ids and ids[-1] >= header:
                raise ParseError(no, f"edge id {ids[-1]} out of range 0..{header - 1}")
        else:
            raise ParseError(no, "unexpected extra line")
    if header is None:
        raise ParseError(0, "missing header line")
    return header, ids or []


def parse_subgraph(text: str, host: Multigraph) -> SpanningSubgraph:
    m, ids = parse_subgraph_ids(text)
    if m != host.num_edge_ids:
        raise InconsistentHeader(1, f"subgraph is for {m} edges, host has {host.num_edge_ids}")
    return SpanningSubgraph(host, ids)


def serialize_subgraph(h: SpanningSubgraph) -> str:
    ids = " ".join(map(str, sorted(h.members())))
    return f"s {h.host.num_edge_ids}\n{ids}\n"


def format_report(h: SpanningSubgraph) -> str:
    prof = h.profile()
    a = a_from_profile(prof, h.host.n_alive)
    out = [f"k {i} {c}" for i, c in enumerate(prof)]
    out.append(f"anorm {inf_norm(a)} scale {len(prof)}")
    return "\n".join(out) + "\n"


def read_graph(path) -> Multigraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Multigraph, path) -> None:
    Path(path).write_text(serialize_graph(g))


def read_subgraph(path, host: Multigraph) -> SpanningSubgraph:
    return parse_subgraph(Path(path).read_text(), host)


def write_subgraph(h: SpanningSubgraph, path) -> None:
    Path(path).write_text(serialize_subgraph(h))
