"""Compiled twin of the cubic pipeline in ``cubic.py``.

Every routine here follows its Python counterpart operation for operation,
including the order in which buckets are touched, so both engines produce the
same subgraph and the same counters.  State lives in one tuple of arrays; the
scalar slots are named below.
"""
from __future__ import annotations

import numpy as np
from numba import njit

# scalar slots
NE, NALIVE, POL, TOGGLES, UPD, S1, S2, T1, T2 = range(9)
NSCALARS = 9

# No runtime reference counting: every array is allocated in make_state, and
# without NRT a helper call taking arrays costs nothing instead of ~40 ns.
_jit = njit(cache=True, _nrt=False)


def make_state(n: int, eu0, ev0):
    m0 = len(eu0)
    cap_e = m0 + n + 2
    eu = np.full(cap_e, -1, np.int64)
    ev = np.full(cap_e, -1, np.int64)
    eu[:m0] = eu0
    ev[:m0] = ev0
    alive = np.zeros(cap_e, np.bool_)
    alive[:m0] = True
    inc = np.full((n, 3), -1, np.int64)
    ideg = np.zeros(n, np.int64)
    member = np.zeros(cap_e, np.bool_)
    hdeg = np.zeros(n, np.int64)
    counts = np.zeros(4, np.int64)
    ewhere = np.full(cap_e, -1, np.int64)
    eprv = np.full(cap_e, -1, np.int64)
    enxt = np.full(cap_e, -1, np.int64)
    etail = np.full(32, -1, np.int64)
    vwhere = np.full(n, -1, np.int64)
    vprv = np.full(n, -1, np.int64)
    vnxt = np.full(n, -1, np.int64)
    vtail = np.full(4, -1, np.int64)
    sc = np.zeros(NSCALARS, np.int64)
    sc[NE] = m0
    sc[NALIVE] = n
    scratch = np.zeros(64, np.int64)
    seen = np.zeros(n, np.bool_)
    stack = np.zeros(m0 + 3 * (n // 2 + 1) + 4, np.int64)
    sides = np.ones(5, np.bool_)
    _fill_inc(eu, ev, m0, inc, ideg)
    return (eu, ev, alive, inc, ideg, member, hdeg, counts,
            ewhere, eprv, enxt, etail, vwhere, vprv, vnxt, vtail, sc,
            scratch, seen, stack, sides)


@_jit
def _fill_inc(eu, ev, m0, inc, ideg):
    for e in range(m0):
        for p in (eu[e], ev[e]):
            if ideg[p] >= 3:
                raise ValueError("vertex of degree above 3")
            inc[p, ideg[p]] = e
            ideg[p] += 1


# -- graph ---------------------------------------------------------------

@_jit
def _other(S, e, p):
    eu, ev = S[0], S[1]
    return ev[e] if eu[e] == p else eu[e]


@_jit
def _inc_remove(S, p, e):
    inc, ideg = S[3], S[4]
    k = ideg[p]
    i = 0
    while inc[p, i] != e:
        i += 1
    while i < k - 1:
        inc[p, i] = inc[p, i + 1]
        i += 1
    inc[p, k - 1] = -1
    ideg[p] = k - 1


@_jit
def _inc_append(S, p, e):
    inc, ideg = S[3], S[4]
    if ideg[p] >= 3:
        raise ValueError("vertex degree would exceed 3")
    inc[p, ideg[p]] = e
    ideg[p] += 1


@_jit
def _kill(S, e):
    S[2][e] = False
    _inc_remove(S, S[0][e], e)
    _inc_remove(S, S[1][e], e)


@_jit
def _place(S, e, a, b):
    sc = S[16]
    if e == sc[NE]:
        S[0][e] = a
        S[1][e] = b
        sc[NE] += 1
    S[2][e] = True
    _inc_append(S, a, e)
    _inc_append(S, b, e)


@_jit
def _others(S, e, p):
    inc, ideg = S[3], S[4]
    o0 = -1
    o1 = -1
    for t in range(ideg[p]):
        f = inc[p, t]
        if f != e:
            q = _other(S, f, p)
            if o0 < 0:
                o0 = q
            else:
                o1 = q
    return o0, o1


@_jit
def _contractible(S, e):
    u, v = S[0][e], S[1][e]
    ou0, ou1 = _others(S, e, u)
    mult = 1 + (ou0 == v) + (ou1 == v)
    if mult == 3:
        return 0
    ov0, ov1 = _others(S, e, v)
    if mult == 2:
        x = ou0 if ou0 != v else ou1
        y = ov0 if ov0 != u else ov1
        return 2 if x != y else -1
    return 1 if ou0 != ou1 and ov0 != ov1 else -1


@_jit
def _edge_to(S, p, q, skip):
    inc, ideg = S[3], S[4]
    eu, ev = S[0], S[1]
    for t in range(ideg[p]):
        f = inc[p, t]
        if f != skip and (eu[f] == q or ev[f] == q):
            return f
    raise RuntimeError("missing edge")


@_jit
def _special_edge(S, e):
    inc, ideg = S[3], S[4]
    status = _contractible(S, e)
    if status == 0:
        return -1
    if status > 0:
        return e
    u, v = S[0][e], S[1][e]
    ou0, ou1 = _others(S, e, u)
    if 1 + (ou0 == v) + (ou1 == v) == 1:
        for p in (u, v):
            o0, o1 = _others(S, e, p)
            if o0 == o1:
                e = _edge_to(S, p, o0, e)
                break
        if _contractible(S, e) > 0:
            return e
        u, v = S[0][e], S[1][e]
    ou0, ou1 = _others(S, e, u)
    w = ou0 if ou0 != v else ou1
    f = -1
    for t in range(ideg[w]):
        c = inc[w, t]
        o = _other(S, c, w)
        if o != u and o != v:
            f = c
            break
    if _contractible(S, f) > 0:
        return f
    x = _other(S, f, w)
    y, _ = _others(S, f, x)
    f2 = _edge_to(S, x, y, f)
    if _contractible(S, f2) != 2:
        raise RuntimeError("local search for a contractible edge failed")
    return f2


@_jit
def _contract(S, rec):
    # rec: [type, rem0, rem1, u, v, add0..add4, anc0..anc3]
    for t in range(4 if rec[0] == 1 else 5):
        _kill(S, rec[5 + t])
    sc = S[16]
    sc[NALIVE] -= 2
    if rec[0] == 1:
        _place(S, rec[1], rec[10], rec[11])
    else:
        _place(S, rec[1], rec[10], rec[11])
        _place(S, rec[2], rec[12], rec[13])


@_jit
def _find_contraction(S, e, rec):
    inc, ideg = S[3], S[4]
    f = _special_edge(S, e)
    if f < 0:
        return False
    u, v = S[0][f], S[1][f]
    fresh = S[16][NE]
    rec[:] = -1
    rec[3] = u
    rec[4] = v
    if _contractible(S, f) == 2:
        par0 = -1
        par1 = -1
        xu = -1
        for t in range(3):
            p = inc[u, t]
            if _other(S, p, u) == v:
                if par0 < 0:
                    par0 = p
                else:
                    par1 = p
            elif xu < 0:
                xu = p
        vy = -1
        for t in range(3):
            p = inc[v, t]
            if _other(S, p, v) != u:
                vy = p
                break
        rec[0] = 1
        rec[1] = fresh
        rec[5] = xu
        rec[6] = par0
        rec[7] = par1
        rec[8] = vy
        rec[10] = _other(S, xu, u)
        rec[11] = _other(S, vy, v)
    else:
        k = 0
        for t in range(3):
            p = inc[u, t]
            if p != f:
                rec[5 + k] = p
                k += 1
        for t in range(3):
            p = inc[v, t]
            if p != f:
                rec[5 + k] = p
                k += 1
        rec[0] = 2
        rec[1] = fresh
        rec[2] = fresh + 1
        rec[9] = f
        rec[10] = _other(S, rec[5], u)
        rec[11] = _other(S, rec[6], u)
        rec[12] = _other(S, rec[7], v)
        rec[13] = _other(S, rec[8], v)
    _contract(S, rec)
    return True


@_jit
def decompose(S, ops):
    """Fill ``ops`` (rows as in ``_contract``); return the number of steps."""
    alive = S[2]
    m0 = S[16][NE]
    stack = S[19]
    top = 0
    for e in range(m0 - 1, -1, -1):
        stack[top] = e
        top += 1
    k = 0
    while top > 0:
        top -= 1
        e = stack[top]
        if not alive[e]:
            continue
        if not _find_contraction(S, e, ops[k]):
            continue
        rec = ops[k]
        k += 1
        stack[top] = rec[1]
        top += 1
        if rec[0] == 2:
            stack[top] = rec[2]
            top += 1
        if alive[e]:
            stack[top] = e
            top += 1
    return k


# -- subgraph and buckets -----------------------------------------------

@_jit
def _raw_toggle(S, e):
    member, hdeg, counts = S[5], S[6], S[7]
    step = -1 if member[e] else 1
    member[e] = not member[e]
    for w in (S[0][e], S[1][e]):
        k = hdeg[w]
        counts[k] -= 1
        counts[k + step] += 1
        hdeg[w] = k + step


@_jit
def _badd(where, prv, nxt, tail, x, b, sc):
    where[x] = b
    t = tail[b]
    prv[x] = t
    nxt[x] = -1
    if t >= 0:
        nxt[t] = x
    tail[b] = x
    sc[UPD] += 1


@_jit
def _bremove(where, prv, nxt, tail, x, sc):
    b = where[x]
    if b < 0:
        return
    p = prv[x]
    q = nxt[x]
    if p >= 0:
        nxt[p] = q
    if q >= 0:
        prv[q] = p
    else:
        tail[b] = p
    where[x] = -1
    sc[UPD] += 1


@_jit
def _ekey(S, e):
    hdeg = S[6]
    i = hdeg[S[0][e]]
    j = hdeg[S[1][e]]
    if i > j:
        i, j = j, i
    return (0 if S[5][e] else 16) + 4 * i + j


@_jit
def _slot(S, v):
    inc, ideg, member, hdeg = S[3], S[4], S[5], S[6]
    k = hdeg[v]
    if k >= 2:
        want_member = True
        want_deg = 1
        slot = k - 2
    else:
        want_member = False
        want_deg = 2
        slot = 3 - k
    c = 0
    for t in range(ideg[v]):
        f = inc[v, t]
        if member[f] == want_member and hdeg[_other(S, f, v)] == want_deg:
            c += 1
    return slot if c >= 2 else -1


@_jit
def _eadd(S, e):
    _badd(S[8], S[9], S[10], S[11], e, _ekey(S, e), S[16])


@_jit
def _eremove(S, e):
    _bremove(S[8], S[9], S[10], S[11], e, S[16])


@_jit
def _vadd(S, v):
    s = _slot(S, v)
    if s >= 0:
        _badd(S[12], S[13], S[14], S[15], v, s, S[16])


@_jit
def _vremove(S, v):
    _bremove(S[12], S[13], S[14], S[15], v, S[16])


@_jit
def build_base_and_index(S):
    """Base members on the decomposed graph, then the bucket index."""
    alive, inc, member, counts, sc = S[2], S[3], S[5], S[7], S[16]
    n = S[4].shape[0]
    seen = S[18]
    counts[0] = sc[NALIVE]
    ncomp = sc[NALIVE] // 2
    k4 = 4 * (ncomp // 4)
    tail = (1, 2, 0, 3)
    es = S[17][:3]
    t = 0
    for v in range(n):
        if S[4][v] == 0 or seen[v]:
            continue
        for q in range(3):
            es[q] = inc[v, q]
        for q in (1, 2, 1):
            if es[q - 1] > es[q]:
                es[q - 1], es[q] = es[q], es[q - 1]
        seen[v] = True
        seen[_other(S, es[0], v)] = True
        c = t % 4 if t < k4 else tail[t - k4]
        for q in range(c):
            if not member[es[q]]:
                _raw_toggle(S, es[q])
        t += 1
    for e in range(sc[NE]):
        if alive[e]:
            _eadd(S, e)
    for v in range(n):
        if S[4][v] > 0:
            _vadd(S, v)


# -- effective queries ---------------------------------------------------

@_jit
def _a(S):
    c = S[7]
    n = S[16][NALIVE]
    if S[16][POL]:
        return (4 * c[3] - n, 4 * c[2] - n, 4 * c[1] - n, 4 * c[0] - n)
    return (4 * c[0] - n, 4 * c[1] - n, 4 * c[2] - n, 4 * c[3] - n)


@_jit
def _is_state0(a):
    return -8 <= a[0] <= 2 and -8 <= a[3] <= 2 and -2 <= a[1] <= 8 and -2 <= a[2] <= 8


@_jit
def _is_state1(a):
    return a[0] == -10 and -2 <= a[1] <= 6 and -2 <= a[2] <= 6 and -2 <= a[3] <= 6


@_jit
def _is_state2(a):
    return a[0] == -10 and 2 <= a[1] <= 10 and -2 <= a[2] <= 6 and -6 <= a[3] <= 2


@_jit
def _is_proper(a):
    return -8 <= a[0] <= 8 and -8 <= a[1] <= 8 and -8 <= a[2] <= 8 and -8 <= a[3] <= 8


@_jit
def _find(S, raw_h, i, j):
    if S[16][POL]:
        i = 3 - i
        j = 3 - j
        raw_h = not raw_h
    if i > j:
        i, j = j, i
    return S[11][(0 if raw_h else 16) + 4 * i + j]


@_jit
def _P(S, i, j):
    return _find(S, True, i, j)


@_jit
def _Q(S, i, j):
    return _find(S, False, i, j)


@_jit
def _deg(S, v):
    k = S[6][v]
    return 3 - k if S[16][POL] else k


@_jit
def _in_h(S, e):
    return S[5][e] != (S[16][POL] != 0)


@_jit
def _need(e):
    if e < 0:
        raise RuntimeError("an edge the repair relies on is missing")
    return e


@_jit
def _star_delete(S, c):
    """Delete the two edges of some path x-y-z with d(y) = c, d(x) = d(z) = 1."""
    inc, ideg = S[3], S[4]
    slot = c if S[16][POL] else c - 2
    y = S[15][slot]
    if y < 0:
        return False
    f0 = -1
    f1 = -1
    for t in range(ideg[y]):
        f = inc[y, t]
        if _in_h(S, f) and _deg(S, _other(S, f, y)) == 1:
            if f0 < 0:
                f0 = f
            elif f1 < 0:
                f1 = f
    if f1 < 0:
        raise RuntimeError("indexed star center is not one")
    _delete(S, f0)
    _delete(S, f1)
    return True


# -- mutation -------------------------------------------------------------

@_jit
def _toggle(S, e):
    inc, ideg = S[3], S[4]
    eu, ev = S[0], S[1]
    x, y = eu[e], ev[e]
    edges = S[17][0:6]
    ne = 0
    for t in range(ideg[x]):
        edges[ne] = inc[x, t]
        ne += 1
    for t in range(ideg[y]):
        f = inc[y, t]
        dup = False
        for q in range(ne):
            if edges[q] == f:
                dup = True
        if not dup:
            edges[ne] = f
            ne += 1
    verts = S[17][6:20]
    verts[0] = x
    verts[1] = y
    nv = 2
    for q in range(ne):
        f = edges[q]
        for w in (eu[f], ev[f]):
            dup = False
            for r in range(nv):
                if verts[r] == w:
                    dup = True
            if not dup:
                verts[nv] = w
                nv += 1
    for q in range(ne):
        _eremove(S, edges[q])
    for r in range(nv):
        _vremove(S, verts[r])
    _raw_toggle(S, e)
    S[16][TOGGLES] += 1
    for q in range(ne):
        _eadd(S, edges[q])
    for r in range(nv):
        _vadd(S, verts[r])


@_jit
def _delete(S, e):
    if not _in_h(S, e):
        raise RuntimeError("deleting an edge that is not in H")
    _toggle(S, e)


@_jit
def _add(S, e):
    if _in_h(S, e):
        raise RuntimeError("adding an edge that is already in H")
    _toggle(S, e)


@_jit
def _flip(S):
    S[16][POL] = 1 - S[16][POL]


@_jit
def _expand(S, rec, sides):
    hdeg, member, counts, sc = S[6], S[5], S[7], S[16]
    na = 2 if rec[0] == 1 else 4
    anchors = S[17][20:26]
    k = 0
    for t in range(na):
        a = rec[10 + t]
        dup = False
        for q in range(k):
            if anchors[q] == a:
                dup = True
        if not dup:
            anchors[k] = a
            k += 1
    before = S[17][26:32]
    for q in range(k):
        before[q] = hdeg[anchors[q]]
    nrem = 1 if rec[0] == 1 else 2
    for t in range(nrem):
        e = rec[1 + t]
        _eremove(S, e)
        if member[e]:
            _raw_toggle(S, e)
    for q in range(k):
        _vremove(S, anchors[q])
    for t in range(nrem):
        _kill(S, rec[1 + t])
    u, v = rec[3], rec[4]
    sc[NALIVE] += 2
    x, y = rec[10], rec[11]
    nadd = 4 if rec[0] == 1 else 5
    for t in range(nadd):
        e = rec[5 + t]
        if rec[0] == 1:
            if t == 0:
                _place(S, e, x, u)
            elif t == 3:
                _place(S, e, v, y)
            else:
                _place(S, e, u, v)
        else:
            if t == 0:
                _place(S, e, x, u)
            elif t == 1:
                _place(S, e, u, y)
            elif t == 2:
                _place(S, e, rec[12], v)
            elif t == 3:
                _place(S, e, v, rec[13])
            else:
                _place(S, e, u, v)
    hdeg[u] = 0
    counts[0] += 1
    hdeg[v] = 0
    counts[0] += 1
    pol = sc[POL] != 0
    for t in range(nadd):
        e = rec[5 + t]
        member[e] = False
        if sides[t] != pol:
            _raw_toggle(S, e)
    for q in range(k):
        if hdeg[anchors[q]] != before[q]:
            raise RuntimeError("extension changed the degree of an anchor")
    for t in range(nadd):
        _eadd(S, rec[5 + t])
    anchors[k] = u
    anchors[k + 1] = v
    for q in range(k + 2):
        _vadd(S, anchors[q])


# -- repairs ---------------------------------------------------------------

@_jit
def _proper_to_state0(S):
    if not _is_proper(_a(S)):
        raise RuntimeError("subgraph is not proper")
    rounds = 0
    while True:
        a = _a(S)
        if a[0] > a[3]:
            _flip(S)
            a = _a(S)
        if a[3] <= 2:
            break
        rounds += 1
        if rounds > 8:
            raise RuntimeError("first phase exceeded 8 iterations")
        if a[2] <= 0:
            _delete(S, _need(_P(S, 3, 3)))
        else:
            e = _P(S, 2, 3)
            if e >= 0:
                _delete(S, e)
            else:
                e1 = _need(_P(S, 2, 2))
                e2 = _need(_P(S, 3, 3))
                _delete(S, e1)
                _delete(S, e2)
        if not _is_proper(_a(S)):
            raise RuntimeError("first phase left the proper range")
    done = False
    for _ in range(16):
        a = _a(S)
        if a[2] > a[1]:
            _flip(S)
            a = _a(S)
        if a[2] >= -2:
            done = True
            break
        if a[3] > 0:
            _delete(S, _need(_P(S, 3, 3)))
            done = True
            break
        e = _Q(S, 0, 1)
        if e >= 0:
            _add(S, e)
            continue
        # the H(0,0)-edge is only needed (and only guaranteed) when a0 >= 0
        e2 = _need(_Q(S, 1, 1))
        if a[0] >= 0:
            _add(S, _need(_Q(S, 0, 0)))
        _add(S, e2)
        done = True
        break
    if not done:
        raise RuntimeError("second phase did not finish")
    if not _is_state0(_a(S)):
        raise RuntimeError("result is not in state 0")


@_jit
def _repair_state1(S):
    if not _is_state1(_a(S)):
        raise RuntimeError("subgraph is not in state 1")
    done = False
    for _ in range(16):
        a = _a(S)
        if not _is_state1(a):
            raise RuntimeError("left state 1 unexpectedly")
        e = _P(S, 1, 2)
        if e >= 0:
            _delete(S, e)
            done = True
            break
        e = _P(S, 1, 1)
        if e >= 0:
            _delete(S, e)
            if not _is_proper(_a(S)):
                f = _P(S, 2, 2)
                if f < 0:
                    f = _need(_P(S, 2, 3))
                _delete(S, f)
            done = True
            break
        e = _need(_P(S, 1, 3))
        if a[2] != 6:
            _delete(S, e)
            done = True
            break
        if a[1] == 6 and a[3] == -2:
            if not _star_delete(S, 3):
                raise RuntimeError("expected a path through a degree-3 vertex")
            done = True
            break
        f = _P(S, 2, 2)
        if f >= 0:
            _delete(S, f)
            _delete(S, e)
            done = True
            break
        _delete(S, _need(_P(S, 2, 3)))
    if not done:
        raise RuntimeError("state-1 repair did not finish")
    if not _is_proper(_a(S)):
        raise RuntimeError("state-1 repair did not reach a proper subgraph")


@_jit
def _repair_state2(S):
    a = _a(S)
    if not _is_state2(a):
        raise RuntimeError("subgraph is not in state 2")
    if a[1] <= 6:
        _repair_state1(S)
        return
    e = _P(S, 1, 1)
    if e >= 0:
        _delete(S, e)
    elif _star_delete(S, 2):
        pass
    elif a[2] != 6:
        _delete(S, _need(_P(S, 1, 3)))
    else:
        e = _P(S, 1, 2)
        f = _P(S, 1, 3)
        if e >= 0 and f >= 0:
            _delete(S, e)
            _delete(S, f)
        elif e < 0:
            if not _star_delete(S, 3):
                raise RuntimeError("expected a path through a degree-3 vertex")
        else:
            raise RuntimeError("no H(1,3)-edge and no degree-2 path")
        _flip(S)
        _repair_state1(S)
    if not _is_proper(_a(S)):
        raise RuntimeError("state-2 repair did not reach a proper subgraph")


@_jit
def _apply_op(S, rec):
    sc = S[16]
    if not _is_state0(_a(S)):
        raise RuntimeError("replay step started outside state 0")
    sides = S[20]
    sides[:] = True
    if rec[0] == 1:
        sc[T1] += 1
        if not _in_h(S, rec[1]):
            _flip(S)
        _expand(S, rec, sides)
        if _a(S)[0] == -10:
            sc[S1] += 1
            _repair_state1(S)
    else:
        sc[T2] += 1
        in_xy = _in_h(S, rec[1])
        in_zw = _in_h(S, rec[2])
        if not in_xy and not in_zw:
            _flip(S)
            in_xy = True
            in_zw = True
        if in_xy and in_zw:
            _expand(S, rec, sides)
            if _a(S)[0] == -10:
                sc[S1] += 1
                _repair_state1(S)
        else:
            if in_xy:
                sides[2] = False
                sides[3] = False
            else:
                sides[0] = False
                sides[1] = False
            _expand(S, rec, sides)
            a = _a(S)
            if not _is_proper(a):
                if a[0] == -10:
                    sc[S2] += 1
                    _repair_state2(S)
                elif a[1] == 10:
                    u, v = rec[3], rec[4]
                    du, dv = _deg(S, u), _deg(S, v)
                    if not ((du == 1 and dv == 3) or (du == 3 and dv == 1)):
                        raise RuntimeError("u-v is not a (1,3)-edge")
                    _delete(S, rec[9])
                    _flip(S)
                    if not _is_proper(_a(S)):
                        sc[S1] += 1
                        _repair_state1(S)
                else:
                    raise RuntimeError("unexpected vector after extension")
    _proper_to_state0(S)


@_jit
def replay(S, ops, k):
    for t in range(k - 1, -1, -1):
        _apply_op(S, ops[t])
