"""The labeled tree family built from P6 by two growth operations, and
isomorph-free enumeration of free trees.

The base tree is a six-vertex path whose two leaves carry status C, the two
support vertices status A, and the middle pair status B. Operation o1 hangs
a four-vertex path x-w-v-z (statuses B,B,A,C) off a status-C leaf; operation
o2 hangs a three-vertex path x-w-v (statuses B,A,C) off any status-B vertex.
Trees reachable this way are exactly the trees (n >= 3) whose total
domination number equals their annihilation number plus one, which is what
`gamma_membership` tests directly.

Free trees are enumerated by level-sequence successor generation
(Beyer-Hedetniemi rooted successors filtered to centroid rootings), with an
independent Prufer-decode + canonical-dedupe oracle for cross-validation at
small orders.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import OperationError, QtdomError
from .graphs import Graph, canonical_form, is_tree
from .invariants import annihilation_number, total_domination_number

STATUS_A = "A"
STATUS_B = "B"
STATUS_C = "C"

_STATUS_COLOR = {STATUS_A: 0, STATUS_B: 1, STATUS_C: 2}


@dataclass(frozen=True)
class TraceStep:
    op: str                 # "o1" or "o2"
    y: int                  # attachment vertex
    added: tuple[int, ...]  # ids of the added vertices, in path order


@dataclass(frozen=True)
class GammaTree:
    tree: Graph
    status: tuple[str, ...]
    trace: tuple[TraceStep, ...]

    @property
    def n(self) -> int:
        return self.tree.n

    def colored_form(self) -> bytes:
        return canonical_form(self.tree, [_STATUS_COLOR[s] for s in self.status])

    def last_op(self) -> TraceStep:
        if not self.trace:
            raise OperationError("base tree has no last operation")
        return self.trace[-1]


def make_T0() -> GammaTree:
    """Six-vertex path with statuses C,A,B,B,A,C along the path."""
    tree = Graph(6, [(i, i + 1) for i in range(5)])
    return GammaTree(tree=tree,
                     status=(STATUS_C, STATUS_A, STATUS_B, STATUS_B,
                             STATUS_A, STATUS_C),
                     trace=())


def apply_o1(t: GammaTree, y: int) -> GammaTree:
    """Attach path x-w-v-z at the status-C leaf y (statuses B,B,A,C)."""
    if not 0 <= y < t.n:
        raise OperationError(f"vertex {y} out of range")
    if t.status[y] != STATUS_C or t.tree.degree(y) != 1:
        raise OperationError("o1 needs a status-C leaf")
    n = t.n
    x, w, v, z = n, n + 1, n + 2, n + 3
    edges = t.tree.edges() + [(y, x), (x, w), (w, v), (v, z)]
    return GammaTree(
        tree=Graph(n + 4, edges),
        status=t.status + (STATUS_B, STATUS_B, STATUS_A, STATUS_C),
        trace=t.trace + (TraceStep("o1", y, (x, w, v, z)),),
    )


def apply_o2(t: GammaTree, y: int) -> GammaTree:
    """Attach path x-w-v at the status-B vertex y (statuses B,A,C)."""
    if not 0 <= y < t.n:
        raise OperationError(f"vertex {y} out of range")
    if t.status[y] != STATUS_B:
        raise OperationError("o2 needs a status-B vertex")
    n = t.n
    x, w, v = n, n + 1, n + 2
    edges = t.tree.edges() + [(y, x), (x, w), (w, v)]
    return GammaTree(
        tree=Graph(n + 3, edges),
        status=t.status + (STATUS_B, STATUS_A, STATUS_C),
        trace=t.trace + (TraceStep("o2", y, (x, w, v)),),
    )


def replay_trace(t: GammaTree) -> GammaTree:
    """Rebuild a GammaTree from its trace (consistency check helper)."""
    cur = make_T0()
    for step in t.trace:
        cur = apply_o1(cur, step.y) if step.op == "o1" else apply_o2(cur, step.y)
    return cur


def expansions(t: GammaTree, max_n: int) -> Iterator[GammaTree]:
    """All one-operation extensions not exceeding max_n vertices."""
    if t.n + 4 <= max_n:
        for y in range(t.n):
            if t.status[y] == STATUS_C and t.tree.degree(y) == 1:
                yield apply_o1(t, y)
    if t.n + 3 <= max_n:
        for y in range(t.n):
            if t.status[y] == STATUS_B:
                yield apply_o2(t, y)


def enumerate_gamma(max_n: int) -> Iterator[GammaTree]:
    """All family members with at most max_n vertices, one per isomorphism
    class of the underlying unlabeled tree.

    BFS over (tree, status) states deduplicated by status-colored canonical
    form; emitted trees deduplicated by unlabeled canonical form. Statuses
    matter for which operations apply mid-construction, not for the output.
    """
    if max_n > 64:
        raise QtdomError("max_n capped at 64")
    if max_n < 6:
        return
    t0 = make_T0()
    seen_states = {t0.colored_form()}
    emitted = set()
    queue = deque([t0])
    while queue:
        t = queue.popleft()
        form = canonical_form(t.tree)
        if form not in emitted:
            emitted.add(form)
            yield t
        for child in expansions(t, max_n):
            cf = child.colored_form()
            if cf not in seen_states:
                seen_states.add(cf)
                queue.append(child)


def gamma_membership(t: Graph) -> bool:
    """Whether the tree t belongs to the family: n >= 3 and gamma_t = a + 1.

    The two-vertex path satisfies the equality but is excluded by definition.
    """
    if not is_tree(t):
        raise OperationError("gamma_membership needs a tree")
    if t.n < 3:
        return False
    return total_domination_number(t).gamma_t == annihilation_number(t).a + 1


# ---------------------------------------------------------------------------
# free trees

def rooted_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of all rooted trees on n vertices
    (root level 0), in decreasing lexicographic order."""
    if n == 1:
        yield (0,)
        return
    level = list(range(n))
    while True:
        yield tuple(level)
        p = -1
        for i in range(n - 1, 0, -1):
            if level[i] > 1:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while level[q] != level[p] - 1:
            q -= 1
        for i in range(p, n):
            level[i] = level[i - (p - q)]


def tree_from_levels(levels: Sequence[int]) -> Graph:
    """Tree for a preorder level sequence; vertex i is the i-th preorder
    visit, parent = most recent shallower vertex."""
    n = len(levels)
    edges = []
    last_at = {0: 0}
    for i in range(1, n):
        parent = last_at[levels[i] - 1]
        edges.append((parent, i))
        last_at[levels[i]] = i
    return Graph(n, edges) if n > 1 else Graph(1)


def _centroids(levels: Sequence[int]) -> list[int]:
    n = len(levels)
    parent = [-1] * n
    last_at = {0: 0}
    for i in range(1, n):
        parent[i] = last_at[levels[i] - 1]
        last_at[levels[i]] = i
    size = [1] * n
    for i in range(n - 1, 0, -1):
        size[parent[i]] += size[i]
    heaviest = [n - size[v] for v in range(n)]
    for i in range(1, n):
        p = parent[i]
        if size[i] > heaviest[p]:
            heaviest[p] = size[i]
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def _canon_rooted_seq(g: Graph, root: int) -> tuple[int, ...]:
    def sub(v: int, par: int, depth: int) -> tuple[int, ...]:
        kids = sorted(
            (sub(u, v, depth + 1) for u in g.neighbors(v) if u != par),
            reverse=True)
        out = [depth]
        for k in kids:
            out.extend(k)
        return tuple(out)

    return sub(root, -1, 0)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Rooted level sequences are filtered to centroid rootings: a sequence is
    kept iff its root is the centroid (unicentral trees), or is one of the
    two centroids and its sequence is the larger of the two centroid
    rootings (bicentral trees, ties emitted once by construction).
    """
    if not 1 <= n <= 20:
        raise QtdomError("free-tree enumeration capped at 1 <= n <= 20")
    if n == 1:
        yield Graph(1)
        return
    for seq in rooted_level_sequences(n):
        cents = _centroids(seq)
        if 0 not in cents:
            continue
        if len(cents) == 2:
            other = cents[0] if cents[0] != 0 else cents[1]
            g = tree_from_levels(seq)
            if seq < _canon_rooted_seq(g, other):
                continue
            yield g
        else:
            yield tree_from_levels(seq)


def tree_centroids(g: Graph) -> list[int]:
    """Centroid vertex/vertices of a tree (one or two)."""
    n = g.n
    if n == 1:
        return [0]
    order = []
    parent = [-1] * n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    heaviest = [n - size[v] for v in range(n)]
    for v in range(n):
        if parent[v] >= 0 and size[v] > heaviest[parent[v]]:
            heaviest[parent[v]] = size[v]
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def free_tree_key(g: Graph) -> tuple[int, ...]:
    """Complete isomorphism invariant for trees: the larger canonical rooted
    sequence over the centroid rootings. Independent of the bitset
    canonical-labeling kernel."""
    return max(_canon_rooted_seq(g, c) for c in tree_centroids(g))


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on n vertices from a Prufer sequence of length n-2.
    Plain quadratic decoding: repeatedly join the smallest unused leaf."""
    if n < 2:
        return Graph(1)
    if len(seq) != n - 2:
        raise QtdomError("prufer sequence must have length n-2")
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    used = [False] * n
    edges = []
    for v in seq:
        for u in range(n):
            if degree[u] == 1 and not used[u]:
                break
        edges.append((u, v))
        used[u] = True
        degree[u] -= 1
        degree[v] -= 1
    rest = [u for u in range(n) if not used[u]]
    edges.append((rest[0], rest[1]))
    return Graph(n, edges)


def free_trees_via_prufer(n: int) -> list[Graph]:
    """Independent oracle: decode every Prufer sequence and dedupe by the
    centroid-rooted canonical sequence. Exponential in n; capped at n <= 10."""
    if not 1 <= n <= 10:
        raise QtdomError("prufer oracle capped at n <= 10")
    if n == 1:
        return [Graph(1)]
    if n == 2:
        return [Graph(2, [(0, 1)])]
    seen = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        g = prufer_decode(seq, n)
        key = free_tree_key(g)
        if key not in seen:
            seen[key] = g
    return list(seen.values())
