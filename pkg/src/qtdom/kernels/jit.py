"""Numba backend: the same kernels as qtdom.kernels.pure, compiled.

All masks are np.uint64; constants are hoisted to module level so every
bit operation stays in uint64 (mixing int64 literals into uint64 expressions
trips numba's promotion rules). Kernels release the GIL so the verifier can
fan out over threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
U2 = np.uint64(2)
U4 = np.uint64(4)
U8 = np.uint64(8)
U16 = np.uint64(16)
U32 = np.uint64(32)
U64 = np.uint64(64)
U127 = np.uint64(127)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
FULL = np.uint64(0xFFFFFFFFFFFFFFFF)

_OPTS = dict(cache=True, nogil=True)


@njit(**_OPTS)
def _pc(x):
    # SWAR popcount, additive tail (no wrapping multiply)
    x = x - ((x >> U1) & M1)
    x = (x & M2) + ((x >> U2) & M2)
    x = (x + (x >> U4)) & M4
    x = x + (x >> U8)
    x = x + (x >> U16)
    x = x + (x >> U32)
    return np.int64(x & U127)


@njit(**_OPTS)
def _ctz(x):
    # index of lowest set bit; x must be nonzero
    return _pc((x & (~x + U1)) - U1)


@njit(**_OPTS)
def _full_mask(n):
    return FULL >> np.uint64(64 - n)


@njit(**_OPTS)
def connected(adj, n):
    seen = U1
    frontier = U1
    while frontier != U0:
        nxt = U0
        f = frontier
        while f != U0:
            v = _ctz(f)
            nxt |= adj[v]
            f &= f - U1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == _full_mask(n)


@njit(**_OPTS)
def _connected_sub(adj, sub):
    if sub == U0:
        return False
    start = U1 << np.uint64(_ctz(sub))
    seen = start
    frontier = start
    while frontier != U0:
        nxt = U0
        f = frontier
        while f != U0:
            v = _ctz(f)
            nxt |= adj[v] & sub
            f &= f - U1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == sub


@njit(**_OPTS)
def connected_sub(adj, n, sub):
    return _connected_sub(adj, sub)


@njit(**_OPTS)
def quasi_vertex_mask(adj, n):
    out = U0
    if n < 2:
        return out
    full = _full_mask(n)
    for v in range(n):
        sub = full & ~(U1 << np.uint64(v))
        m2 = 0
        f = sub
        while f != U0:
            u = _ctz(f)
            m2 += _pc(adj[u] & sub)
            f &= f - U1
        if m2 != 2 * (n - 2):
            continue
        if _connected_sub(adj, sub):
            out |= U1 << np.uint64(v)
    return out


@njit(**_OPTS)
def _gamma_try_node(adj, n, full, maxdeg, d, dom, forb,
                    best_size, best_mask, d_st, dom_st, forb_st, cand_st, sp):
    size = _pc(d)
    if dom == full:
        if size < best_size:
            best_size = size
            best_mask = d
        return best_size, best_mask, sp
    undom = _pc(full & ~dom)
    lb = (undom + maxdeg - 1) // maxdeg
    if size + lb >= best_size:
        return best_size, best_mask, sp
    pick = -1
    pick_c = n + 1
    f = full & ~dom
    while f != U0:
        u = _ctz(f)
        f &= f - U1
        c = _pc(adj[u] & ~forb)
        if c < pick_c:
            pick_c = c
            pick = u
    if pick_c == 0:
        return best_size, best_mask, sp
    d_st[sp] = d
    dom_st[sp] = dom
    forb_st[sp] = forb
    cand_st[sp] = adj[pick] & ~forb
    return best_size, best_mask, sp + 1


@njit(**_OPTS)
def gamma_t_solve(adj, n):
    full = _full_mask(n)
    maxdeg = 0
    for v in range(n):
        c = _pc(adj[v])
        if c > maxdeg:
            maxdeg = c

    d0 = U0
    dom = U0
    while dom != full:
        bestv = -1
        bestc = 0
        for v in range(n):
            if (d0 >> np.uint64(v)) & U1 != U0:
                continue
            c = _pc(adj[v] & ~dom)
            if c > bestc:
                bestc = c
                bestv = v
        d0 |= U1 << np.uint64(bestv)
        dom |= adj[bestv]
    best_size = _pc(d0)
    best_mask = d0

    d_st = np.empty(n + 2, np.uint64)
    dom_st = np.empty(n + 2, np.uint64)
    forb_st = np.empty(n + 2, np.uint64)
    cand_st = np.empty(n + 2, np.uint64)
    best_size, best_mask, sp = _gamma_try_node(
        adj, n, full, maxdeg, U0, U0, U0,
        best_size, best_mask, d_st, dom_st, forb_st, cand_st, 0)
    while sp > 0:
        cand = cand_st[sp - 1]
        if cand == U0:
            sp -= 1
            continue
        wbit = cand & (~cand + U1)
        cand_st[sp - 1] = cand & ~wbit
        w = _ctz(wbit)
        forb = forb_st[sp - 1]
        forb_st[sp - 1] = forb | wbit
        best_size, best_mask, sp = _gamma_try_node(
            adj, n, full, maxdeg,
            d_st[sp - 1] | wbit, dom_st[sp - 1] | adj[w], forb,
            best_size, best_mask, d_st, dom_st, forb_st, cand_st, sp)
    return best_size, best_mask


@njit(**_OPTS)
def gamma_t_exhaustive(adj, n):
    full = _full_mask(n)
    for k in range(1, n + 1):
        s = (U1 << np.uint64(k)) - U1
        while s <= full:
            ok = True
            for v in range(n):
                if adj[v] & s == U0:
                    ok = False
                    break
            if ok:
                return k, s
            c = s & (~s + U1)
            r = s + c
            s = ((r ^ s) >> np.uint64(_ctz(c) + 2)) | r
    return n, full


@njit(**_OPTS)
def _refine(adj, n, lab, cs, keys):
    while True:
        ncells = 0
        for i in range(n):
            if cs[i] == 1:
                ncells += 1
        starts = np.empty(ncells, np.int64)
        c = 0
        for i in range(n):
            if cs[i] == 1:
                starts[c] = i
                c += 1
        masks = np.zeros(ncells, np.uint64)
        for ci in range(ncells):
            e = starts[ci + 1] if ci + 1 < ncells else n
            for p in range(starts[ci], e):
                masks[ci] |= U1 << np.uint64(lab[p])
        for p in range(n):
            v = lab[p]
            for ci in range(ncells):
                keys[v, ci] = _pc(adj[v] & masks[ci])
        split = False
        for ci in range(ncells):
            s = starts[ci]
            e = starts[ci + 1] if ci + 1 < ncells else n
            if e - s == 1:
                continue
            # stable insertion sort of lab[s:e] by key vector ascending
            for i in range(s + 1, e):
                x = lab[i]
                j = i - 1
                while j >= s:
                    gt = False
                    for cc in range(ncells):
                        a = keys[lab[j], cc]
                        b = keys[x, cc]
                        if a != b:
                            gt = a > b
                            break
                    if not gt:
                        break
                    lab[j + 1] = lab[j]
                    j -= 1
                lab[j + 1] = x
            for i in range(s + 1, e):
                diff = False
                for cc in range(ncells):
                    if keys[lab[i], cc] != keys[lab[i - 1], cc]:
                        diff = True
                        break
                if diff and cs[i] == 0:
                    cs[i] = 1
                    split = True
        if not split:
            return


@njit(**_OPTS)
def _build_col(adj, lab, j):
    col = U0
    rj = adj[lab[j]]
    for i in range(j):
        col = (col << U1) | ((rj >> np.uint64(lab[i])) & U1)
    return col


@njit(**_OPTS)
def _twin(adj, u, v):
    return (adj[u] & ~(U1 << np.uint64(v))) == (adj[v] & ~(U1 << np.uint64(u)))


@njit(**_OPTS)
def canonical_rows(adj, n, colors):
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = _pc(adj[v])

    lab = np.empty(n, np.int64)
    for v in range(n):
        lab[v] = v
    # insertion sort by (color, -deg, v)
    for i in range(1, n):
        x = lab[i]
        j = i - 1
        while j >= 0:
            a = lab[j]
            if colors[a] != colors[x]:
                gt = colors[a] > colors[x]
            elif deg[a] != deg[x]:
                gt = deg[a] < deg[x]
            else:
                gt = a > x
            if not gt:
                break
            lab[j + 1] = lab[j]
            j -= 1
        lab[j + 1] = x
    cs = np.zeros(n, np.uint8)
    cs[0] = 1
    for i in range(1, n):
        a, b = lab[i - 1], lab[i]
        if colors[a] != colors[b] or deg[a] != deg[b]:
            cs[i] = 1

    keys = np.empty((n, n), np.int64)
    lab_st = np.empty((n + 1, n), np.int64)
    cs_st = np.empty((n + 1, n), np.uint8)
    cand_st = np.empty((n + 1, n), np.int64)
    cand_n = np.empty(n + 1, np.int64)
    cand_i = np.empty(n + 1, np.int64)
    tpos_st = np.empty(n + 1, np.int64)

    best_cols = np.zeros(n, np.uint64)
    best_lab = np.empty(n, np.int64)
    have_best = False

    cur_lab = lab.copy()
    cur_cs = cs.copy()
    sp = 0
    seeded = False
    while True:
        if seeded:
            if sp == 0:
                break
            if cand_i[sp - 1] == cand_n[sp - 1]:
                sp -= 1
                continue
            u = cand_st[sp - 1, cand_i[sp - 1]]
            cand_i[sp - 1] += 1
            tpos = tpos_st[sp - 1]
            for i in range(n):
                cur_lab[i] = lab_st[sp - 1, i]
                cur_cs[i] = cs_st[sp - 1, i]
            p = tpos
            while cur_lab[p] != u:
                p += 1
            while p > tpos:
                cur_lab[p] = cur_lab[p - 1]
                p -= 1
            cur_lab[tpos] = u
            cur_cs[tpos] = 1
            cur_cs[tpos + 1] = 1
        seeded = True

        _refine(adj, n, cur_lab, cur_cs, keys)
        pref = 0
        while pref < n and cur_cs[pref] == 1 and (pref + 1 == n or cur_cs[pref + 1] == 1):
            pref += 1
        if have_best:
            worse = False
            for j in range(1, pref):
                col = _build_col(adj, cur_lab, j)
                b = best_cols[j - 1]
                if col < b:
                    worse = True
                    break
                if col > b:
                    break
            if worse:
                continue
        if pref == n:
            better = not have_best
            if have_best:
                for j in range(1, n):
                    col = _build_col(adj, cur_lab, j)
                    b = best_cols[j - 1]
                    if col > b:
                        better = True
                        break
                    if col < b:
                        break
            if better:
                for j in range(1, n):
                    best_cols[j - 1] = _build_col(adj, cur_lab, j)
                for i in range(n):
                    best_lab[i] = cur_lab[i]
                have_best = True
            continue
        tpos = 0
        while True:
            if cur_cs[tpos] == 1 and (tpos + 1 == n or cur_cs[tpos + 1] == 1):
                tpos += 1
            else:
                break
        tend = tpos + 1
        while tend < n and cur_cs[tend] == 0:
            tend += 1
        nc = 0
        for i in range(tpos, tend):
            u = cur_lab[i]
            skip = False
            for j in range(tpos, i):
                if _twin(adj, u, cur_lab[j]):
                    skip = True
                    break
            if not skip:
                cand_st[sp, nc] = u
                nc += 1
        cand_n[sp] = nc
        cand_i[sp] = 0
        tpos_st[sp] = tpos
        for i in range(n):
            lab_st[sp, i] = cur_lab[i]
            cs_st[sp, i] = cur_cs[i]
        sp += 1

    out = np.zeros(n, np.uint64)
    pos = np.empty(n, np.int64)
    for i in range(n):
        pos[best_lab[i]] = i
    for i in range(n):
        w = U0
        r = adj[best_lab[i]]
        while r != U0:
            t = _ctz(r)
            r &= r - U1
            w |= U1 << np.uint64(pos[t])
        out[i] = w
    return out, best_lab
