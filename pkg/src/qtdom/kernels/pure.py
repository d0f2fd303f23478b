"""Pure-Python bitset kernels (fallback backend).

Adjacency arrives as a uint64 numpy array (one neighbor bitmask per vertex)
and is converted to Python ints once on entry; everything after that is plain
integer bit twiddling. The jit backend in qtdom.kernels.jit mirrors these
functions operation for operation — the two must stay byte-compatible, which
tests/test_kernels.py enforces.
"""

from __future__ import annotations

import numpy as np


def _rows(adj, n: int) -> list[int]:
    return [int(adj[i]) for i in range(n)]


def connected(adj, n: int) -> bool:
    """Reachability flood fill from vertex 0."""
    rows = _rows(adj, n)
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nxt |= rows[v]
            f &= f - 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def connected_sub(adj, n: int, sub: int) -> bool:
    """Connectivity of the subgraph induced by the vertex mask `sub`."""
    rows = _rows(adj, n)
    return _connected_sub(rows, sub)


def _connected_sub(rows: list[int], sub: int) -> bool:
    if sub == 0:
        return False
    start = 1 << ((sub & -sub).bit_length() - 1)
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nxt |= rows[v] & sub
            f &= f - 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == sub


def quasi_vertex_mask(adj, n: int) -> int:
    """Bitmask of vertices v such that G - v is a tree."""
    rows = _rows(adj, n)
    out = 0
    if n < 2:
        return 0
    full = (1 << n) - 1
    for v in range(n):
        sub = full & ~(1 << v)
        m2 = 0
        f = sub
        while f:
            u = (f & -f).bit_length() - 1
            m2 += (rows[u] & sub).bit_count()
            f &= f - 1
        if m2 != 2 * (n - 2):
            continue
        if _connected_sub(rows, sub):
            out |= 1 << v
    return out


def gamma_t_solve(adj, n: int) -> tuple[int, int]:
    """Exact total domination number via branch and bound.

    Branches on the candidate dominators of the undominated vertex with the
    fewest of them; lower bound ceil(undominated / maxdeg); candidates tried
    in ascending id, each branch forbidding the ones tried before it.
    Assumes the graph is connected with n >= 2. Returns (size, witness mask).
    """
    rows = _rows(adj, n)
    full = (1 << n) - 1
    maxdeg = max(r.bit_count() for r in rows)

    # greedy incumbent: repeatedly take the vertex covering most undominated
    d0 = 0
    dominated = 0
    while dominated != full:
        bestv = -1
        bestc = 0
        for v in range(n):
            if (d0 >> v) & 1:
                continue
            c = (rows[v] & ~dominated).bit_count()
            if c > bestc:
                bestc = c
                bestv = v
        d0 |= 1 << bestv
        dominated |= rows[bestv]
    best_size = d0.bit_count()
    best_mask = d0

    # DFS stack of (domset, dominated, forbidden, remaining candidate mask)
    stack = []

    def evaluate(d: int, dom: int, forb: int) -> None:
        nonlocal best_size, best_mask
        size = d.bit_count()
        if dom == full:
            if size < best_size:
                best_size = size
                best_mask = d
            return
        undom = (full & ~dom).bit_count()
        lb = (undom + maxdeg - 1) // maxdeg
        if size + lb >= best_size:
            return
        pick = -1
        pick_c = n + 1
        f = full & ~dom
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            c = (rows[u] & ~forb).bit_count()
            if c < pick_c:
                pick_c = c
                pick = u
        if pick_c == 0:
            return
        stack.append([d, dom, forb, rows[pick] & ~forb])

    evaluate(0, 0, 0)
    while stack:
        top = top_d, top_dom, top_forb, cand = stack[-1]
        if cand == 0:
            stack.pop()
            continue
        wbit = cand & -cand
        top[3] = cand & ~wbit
        w = wbit.bit_length() - 1
        top[2] = top_forb | wbit  # later siblings must avoid w
        evaluate(top_d | wbit, top_dom | rows[w], top_forb)
    return best_size, best_mask


def gamma_t_exhaustive(adj, n: int) -> tuple[int, int]:
    """Minimum total dominating set by subset enumeration in increasing
    cardinality (Gosper iteration inside each cardinality); first feasible
    subset wins. Independent oracle for gamma_t_solve; n <= 20."""
    rows = _rows(adj, n)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        s = (1 << k) - 1
        while s <= full:
            ok = True
            for v in range(n):
                if rows[v] & s == 0:
                    ok = False
                    break
            if ok:
                return k, s
            c = s & -s
            r = s + c
            s = (((r ^ s) >> 2) // c) | r
    return n, full  # unreachable for delta >= 1


def _refine(rows: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts toward every cell
    until stable. Sub-cells ordered by count signature ascending; ties keep
    the incoming order (stable)."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            keyed = sorted(
                cell, key=lambda v: tuple((rows[v] & m).bit_count() for m in masks)
            )
            group = [keyed[0]]
            gkey = tuple((rows[keyed[0]] & m).bit_count() for m in masks)
            for v in keyed[1:]:
                k = tuple((rows[v] & m).bit_count() for m in masks)
                if k == gkey:
                    group.append(v)
                else:
                    out.append(group)
                    group = [v]
                    gkey = k
                    split = True
            out.append(group)
        cells = out
        if not split:
            return cells


def _twin(rows: list[int], u: int, v: int) -> bool:
    # true iff swapping u,v is an automorphism (handles both twin kinds)
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def _partial_cols(rows: list[int], lab: list[int], pref: int) -> list[int]:
    # column words of the upper triangle restricted to the first `pref` labels;
    # col j holds bits (i,j) for i<j with i=0 most significant
    cols = []
    for j in range(1, pref):
        w = 0
        rj = rows[lab[j]]
        for i in range(j):
            w = (w << 1) | ((rj >> lab[i]) & 1)
        cols.append(w)
    return cols


def canonical_rows(adj, n: int, colors) -> tuple[np.ndarray, np.ndarray]:
    """Canonical labeling via refinement + individualization backtracking.

    The canonical labeling maximizes the column-major upper-triangle bit
    string over all labelings consistent with iterated equitable refinement
    of the (color, degree) partition. Twin vertices are branch-pruned (their
    swap is an automorphism) and subtrees whose determined code prefix falls
    below the incumbent are cut.

    Returns (rows, perm): neighbor bitmasks of the relabeled graph, and
    perm[label] = original vertex.
    """
    rows = _rows(adj, n)
    cols_of = [int(colors[v]) for v in range(n)]
    deg = [r.bit_count() for r in rows]

    order = sorted(range(n), key=lambda v: (cols_of[v], -deg[v], v))
    cells: list[list[int]] = []
    for v in order:
        if cells and (cols_of[v], deg[v]) == (
            cols_of[cells[-1][0]],
            deg[cells[-1][0]],
        ):
            cells[-1].append(v)
        else:
            cells.append([v])

    best_cols: list[int] | None = None
    best_lab: list[int] | None = None

    def descend(cells: list[list[int]]) -> None:
        nonlocal best_cols, best_lab
        cells = _refine(rows, cells)
        lab: list[int] = []
        for cell in cells:
            if len(cell) != 1:
                break
            lab.append(cell[0])
        pref = len(lab)
        if best_cols is not None:
            part = _partial_cols(rows, lab, pref)
            if part < best_cols[: pref - 1]:
                return
        if pref == n:
            cols = _partial_cols(rows, lab, n)
            if best_cols is None or cols > best_cols:
                best_cols = cols
                best_lab = lab
            return
        tpos = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[tpos]
        for i, u in enumerate(target):
            if any(_twin(rows, u, target[j]) for j in range(i)):
                continue
            child = (
                cells[:tpos]
                + [[u], [x for x in target if x != u]]
                + cells[tpos + 1:]
            )
            descend(child)

    descend(cells)
    assert best_lab is not None
    out = np.zeros(n, dtype=np.uint64)
    pos = [0] * n
    for i, v in enumerate(best_lab):
        pos[v] = i
    for i, v in enumerate(best_lab):
        w = 0
        r = rows[v]
        while r:
            t = (r & -r).bit_length() - 1
            r &= r - 1
            w |= 1 << pos[t]
        out[i] = w
    return out, np.array(best_lab, dtype=np.int64)
