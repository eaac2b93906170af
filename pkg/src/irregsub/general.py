"""Local-search solver for any d-regular multigraph.

Repeatedly replaces H by an improvement (smaller sum of |b~|, or equal sum
with a lexicographically larger sorted |b~|) until ``max |b~_i| <= d^2 (d+1)``,
which forces ``|m(H, k) - n/(d+1)| <= 2 d^2`` for every k.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .adjust import (
    ADD,
    DELETE,
    IN_H,
    DegreePairIndex,
    MultiStar,
    apply_edge,
    apply_multistar,
    find_candidate,
    interval_params,
)
from .errors import DegreeTooSmall, InternalInvariant, NotRegular, PreconditionViolated, WrongSide
from .irregularity import Improvement, a_from_profile, b_from_a, inf_norm, is_improvement
from .multigraph import Multigraph, SpanningSubgraph, regularity


def _b(h: SpanningSubgraph) -> tuple[int, ...]:
    return b_from_a(a_from_profile(h.profile(), h.host.n_alive))


def _b_at(b, i):
    return b[i - 1] if 1 <= i <= len(b) else 0


def _verify(before, after) -> Improvement:
    kind = is_improvement(before, after)
    if not kind:
        raise InternalInvariant(f"{after} is not an improvement of {before}")
    return kind


def improve_by_edge(h: SpanningSubgraph, e: int, action: str, index: DegreePairIndex | None = None) -> Improvement:
    """Delete an H-edge / add a complement edge whose degree pair the b-vector signs certify as an improvement."""
    d1 = h.d + 1
    b = _b(h)
    g = h.host
    x, y = h.effective_degree(g.eu[e]), h.effective_degree(g.ev[e])
    if action == DELETE:
        if not h.is_member(e):
            raise WrongSide(e)
        ok = any(_b_at(b, i) < -d1 and _b_at(b, i) + _b_at(b, j) < -d1 for i, j in ((x, y), (y, x)))
        if not ok:
            raise PreconditionViolated(f"need b_i < -1 and b_i + b_j < -1 at degrees {x},{y}; b~={b}")
    elif action == ADD:
        if h.is_member(e):
            raise WrongSide(e)
        x, y = x + 1, y + 1
        ok = any(_b_at(b, i) > d1 and _b_at(b, i) + _b_at(b, j) > d1 for i, j in ((x, y), (y, x)))
        if not ok:
            raise PreconditionViolated(f"need b_i > 1 and b_i + b_j > 1 at indices {x},{y}; b~={b}")
    else:
        raise ValueError(action)
    apply_edge(h, e, action, index)
    return _verify(b, _b(h))


def improve_by_multistar(h: SpanningSubgraph, star: MultiStar, alpha_scaled: int, index: DegreePairIndex | None = None) -> Improvement:
    d = h.d
    d1 = d + 1
    if alpha_scaled < d * d1:
        raise PreconditionViolated("alpha must be at least d")
    b = _b(h)
    params = interval_params(b, alpha_scaled)
    mk = star.size - 1
    slack = alpha_scaled - d * d1
    if star.side == IN_H:
        k = star.center_degree
        ok_sets = k in params.a_plus and all(ell in params.a_minus for ell in star.leaf_degrees)
        if ok_sets:
            ok_sets = params.m[k] == mk and all(
                a <= params.n[ell] for ell, a in zip(star.leaf_degrees, star.multiplicities)
            )
        if not ok_sets:
            raise PreconditionViolated("star does not match the interval structure of b")
        if _b_at(b, k - mk) > slack:
            raise PreconditionViolated(f"b~_{k - mk} = {_b_at(b, k - mk)} exceeds {slack}")
    else:
        k = star.center_degree + 1
        ells = [ell + 1 for ell in star.leaf_degrees]
        ok_sets = k in params.a_minus and all(ell in params.a_plus for ell in ells)
        if ok_sets:
            ok_sets = params.m[k] == mk and all(a <= params.n[ell] for ell, a in zip(ells, star.multiplicities))
        if not ok_sets:
            raise PreconditionViolated("star does not match the interval structure of b")
        if _b_at(b, k + mk) < -slack:
            raise PreconditionViolated(f"b~_{k + mk} = {_b_at(b, k + mk)} below {-slack}")
    apply_multistar(h, star, index)
    return _verify(b, _b(h))


@dataclass
class ReduceOutcome:
    found: int | None = None
    improved: Improvement | None = None
    description: str = ""


def reduce_step(h: SpanningSubgraph, m_scaled: int, index: DegreePairIndex | None = None) -> ReduceOutcome:
    """One application of the reduction: find a window index or make an improvement."""
    d = h.d
    d1 = d + 1
    b = _b(h)
    if m_scaled < d * d1:
        raise PreconditionViolated("M must be at least d")
    if not any(abs(x) > m_scaled for x in b):
        raise PreconditionViolated(f"no |b~_i| exceeds {m_scaled}")
    for j, x in enumerate(b, 1):
        if m_scaled - d * d1 < abs(x) <= m_scaled:
            return ReduceOutcome(found=j)
    flipped = not any(x > m_scaled for x in b)
    if flipped:
        h.flip_polarity()
        b = _b(h)
    try:
        return _reduce_positive(h, b, m_scaled, index)
    finally:
        if flipped:
            h.flip_polarity()


def _reduce_positive(h, b, m_scaled, index):
    d = h.d
    d1 = d + 1
    g = h.host
    params = interval_params(b, m_scaled)
    seen_any = False
    # complement edge at a vertex of degree i-1, i in A+
    if index is not None:
        for i in sorted(params.a_plus):
            for j in range(1, d + 1):
                e = index.find(False, i - 1, j - 1)
                if e < 0:
                    continue
                seen_any = True
                if b[i - 1] + b[j - 1] > d1:
                    kind = improve_by_edge(h, e, ADD, index)
                    return ReduceOutcome(improved=kind, description=f"add edge {e}")
    else:
        for e in g.live_edges():
            if h.is_member(e):
                continue
            x, y = h.effective_degree(g.eu[e]) + 1, h.effective_degree(g.ev[e]) + 1
            for i, j in ((x, y), (y, x)):
                if i in params.a_plus:
                    seen_any = True
                    if b[i - 1] + b[j - 1] > d1:
                        kind = improve_by_edge(h, e, ADD, index)
                        return ReduceOutcome(improved=kind, description=f"add edge {e}")
    if not seen_any or not params.a_minus:
        raise InternalInvariant(f"reduction found no move for b~={b}, M~={m_scaled}")
    cand = find_candidate(h, params, index)
    if cand is None:
        raise InternalInvariant(f"no candidate although A+ and A- are nonempty; b~={b}")
    if cand.kind == "edge_in_h":
        kind = improve_by_edge(h, cand.edge, DELETE, index)
        return ReduceOutcome(improved=kind, description=f"delete edge {cand.edge}")
    if cand.kind == "edge_in_complement":
        kind = improve_by_edge(h, cand.edge, ADD, index)
        return ReduceOutcome(improved=kind, description=f"add edge {cand.edge}")
    kind = improve_by_multistar(h, cand.star, m_scaled, index)
    verb = "delete" if cand.star.side == IN_H else "add"
    return ReduceOutcome(improved=kind, description=f"{verb} star at {cand.star.center}")


def improve_once(h: SpanningSubgraph, index: DegreePairIndex | None = None) -> Improvement:
    """Make one improvement, or return ``Improvement.NONE`` once max|b~| <= d^2 (d+1).

    The result is falsy exactly when nothing was changed.
    """
    d = h.d
    d1 = d + 1
    if inf_norm(_b(h)) <= d * d * d1:
        return Improvement.NONE
    for t in range(d, 0, -1):
        out = reduce_step(h, t * d * d1, index)
        if out.improved is not None:
            return out.improved
    raise InternalInvariant("level descent ran out of levels")


@dataclass
class SolveReport:
    improvement_count: int = 0
    type_a_count: int = 0
    type_b_count: int = 0
    final_b_inf: int = 0
    final_a_inf: int = 0
    iteration_bound: int = 0


def iteration_bound(d: int, n: int) -> int:
    """Upper bound on the length of any improvement sequence."""
    return ((d + 1) * d * n + 1) * ((d + 1) * n + 1) ** (d - 1)


def solve_general(
    g: Multigraph,
    initial: SpanningSubgraph | None = None,
    on_step: Callable[[tuple, tuple, Improvement], None] | None = None,
) -> tuple[SpanningSubgraph, SolveReport]:
    d = regularity(g)
    if d is None:
        raise NotRegular("input must be regular")
    if d < 2:
        raise DegreeTooSmall(f"d = {d}; need d >= 2")
    h = initial.copy() if initial is not None else SpanningSubgraph(g)
    if h.host is not g:
        raise ValueError("initial subgraph lives on a different host")
    index = DegreePairIndex(h)
    rep = SolveReport(iteration_bound=iteration_bound(d, g.n_alive))
    before = _b(h)
    while True:
        kind = improve_once(h, index)
        if not kind:
            break
        after = _b(h)
        if on_step is not None:
            on_step(before, after, kind)
        before = after
        rep.improvement_count += 1
        if kind is Improvement.TYPE_A:
            rep.type_a_count += 1
        else:
            rep.type_b_count += 1
        if rep.improvement_count > rep.iteration_bound:
            raise InternalInvariant("improvement sequence exceeded its length bound")
    rep.final_b_inf = inf_norm(before)
    rep.final_a_inf = inf_norm(a_from_profile(h.profile(), g.n_alive))
    if rep.final_a_inf > 2 * d * d * (d + 1):
        raise InternalInvariant("final a-vector violates the guaranteed bound")
    return h, rep
