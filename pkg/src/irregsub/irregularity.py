"""Degree profiles and the scaled irregularity vectors.

Every quantity is an integer scaled by ``d + 1``:

    a~_i = (d+1) * m(H, i) - n          for 0 <= i <= d
    b~_i = a~_0 + ... + a~_{i-1}        for 1 <= i <= d

with implicit ``b~_0 = b~_{d+1} = 0``.  Thresholds stated for the unscaled
vectors scale the same way, e.g. ``b_i > 1`` becomes ``b~_i > d + 1``.
"""
from __future__ import annotations

import enum
from typing import Sequence

from .errors import DimensionMismatch, NotRegular
from .multigraph import SpanningSubgraph


class Improvement(enum.Enum):
    TYPE_A = "A"
    TYPE_B = "B"
    NONE = "none"

    def __bool__(self):
        return self is not Improvement.NONE


def degree_profile(h: SpanningSubgraph) -> list[int]:
    return h.profile()


def a_from_profile(profile: Sequence[int], n: int) -> tuple[int, ...]:
    d1 = len(profile)
    return tuple(d1 * c - n for c in profile)


def b_from_a(a: Sequence[int]) -> tuple[int, ...]:
    out = []
    s = 0
    for x in a[:-1]:
        s += x
        out.append(s)
    return tuple(out)


def a_from_b(b: Sequence[int]) -> tuple[int, ...]:
    full = (0, *b, 0)
    return tuple(full[i + 1] - full[i] for i in range(len(b) + 1))


def a_scaled(h: SpanningSubgraph) -> tuple[int, ...]:
    if h.d is None:
        raise NotRegular("irregularity vectors need a regular host")
    return a_from_profile(h.profile(), h.host.n_alive)


def b_scaled(h: SpanningSubgraph) -> tuple[int, ...]:
    return b_from_a(a_scaled(h))


def sorted_c(b: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(abs(x) for x in b))


def inf_norm(v: Sequence[int]) -> int:
    return max((abs(x) for x in v), default=0)


def is_improvement(before: Sequence[int], after: Sequence[int]) -> Improvement:
    """Classify ``after`` against ``before`` in the well-founded descent order."""
    if len(before) != len(after):
        raise DimensionMismatch(f"{len(before)} != {len(after)}")
    s0 = sum(abs(x) for x in before)
    s1 = sum(abs(x) for x in after)
    if s1 < s0:
        return Improvement.TYPE_A
    if s1 == s0 and sorted_c(before) < sorted_c(after):
        return Improvement.TYPE_B
    return Improvement.NONE


def complement_vectors(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vectors of ``G \\ H`` from those of ``H``: a reversed, b negated and reversed."""
    return tuple(a[::-1]), tuple(-x for x in b[::-1])
