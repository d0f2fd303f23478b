"""Immutable simple undirected graphs on at most 64 vertices.

Adjacency is one 64-bit neighbor mask per vertex, so vertex sets are single
machine words everywhere (branch-and-bound speed dominates this package's
runtime). Vertices are 0-indexed ints. graph6 I/O is bit-exact per the
published byte layout; a plain "u v" edge-list format is supported for
hand-written fixtures.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import GraphFormatError, QtdomError

MAX_N = 64

CanonicalForm = bytes


class Graph:
    """Simple undirected graph, immutable after construction.

    Construction validates symmetry, loop-freeness and the edge-count
    identity m = (1/2) * sum(popcount(row)).
    """

    __slots__ = ("n", "m", "_rows", "_arr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_N:
            raise QtdomError(f"vertex count {n} outside 1..{MAX_N}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise QtdomError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise QtdomError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._finish(n, rows)

    def _finish(self, n: int, rows: list[int]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", tuple(rows))
        total = 0
        for v, r in enumerate(rows):
            if (r >> v) & 1:
                raise QtdomError(f"self-loop at vertex {v}")
            if r >> n:
                raise QtdomError("adjacency bits beyond vertex count")
            total += r.bit_count()
        for v in range(n):
            f = rows[v]
            while f:
                u = (f & -f).bit_length() - 1
                f &= f - 1
                if not (rows[u] >> v) & 1:
                    raise QtdomError(f"asymmetric adjacency {v}->{u}")
        object.__setattr__(self, "m", total // 2)
        object.__setattr__(self, "_arr", None)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        g._finish(len(rows), list(rows))
        return g

    @property
    def adj(self) -> np.ndarray:
        """uint64 neighbor-mask array (shared, do not mutate)."""
        if self._arr is None:
            a = np.array(self._rows, dtype=np.uint64)
            a.setflags(write=False)
            object.__setattr__(self, "_arr", a)
        return self._arr

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self._rows)

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def leaf_count(self) -> int:
        return sum(1 for r in self._rows if r.bit_count() == 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            f = self._rows[u] >> (u + 1) << (u + 1)
            for v in _bits(f):
                out.append((u, v))
        return out

    def relabel(self, new_of_old: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to new_of_old[v]."""
        n = self.n
        rows = [0] * n
        for v in range(n):
            w = 0
            for u in _bits(self._rows[v]):
                w |= 1 << new_of_old[u]
            rows[new_of_old[v]] = w
        return Graph.from_rows(rows)

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of `drop`, order-preserving
        compact relabeling."""
        dropset = set(drop)
        keep = [v for v in range(self.n) if v not in dropset]
        if not keep:
            raise QtdomError("cannot remove every vertex")
        newid = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            w = 0
            for u in _bits(self._rows[v]):
                if u in newid:
                    w |= 1 << newid[u]
            rows[newid[v]] = w
        return Graph.from_rows(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield v


# ---------------------------------------------------------------------------
# small named graphs

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise QtdomError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 is the center."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# predicates and basic invariants

def is_connected(g: Graph) -> bool:
    return bool(kernels.connected(g.adj, g.n))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> list[tuple[int, int]]:
    """(vertex, degree) pairs sorted ascending by (degree, vertex id)."""
    return sorted(((v, g.degree(v)) for v in range(g.n)),
                  key=lambda t: (t[1], t[0]))


# ---------------------------------------------------------------------------
# canonical forms

def canonical_perm(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Canonical labeling; perm[label] = original vertex."""
    if colors is None:
        cols = np.zeros(g.n, dtype=np.int64)
    else:
        cols = np.asarray(list(colors), dtype=np.int64)
        if len(cols) != g.n:
            raise QtdomError("color vector length mismatch")
    _, perm = kernels.canonical_rows(g.adj, g.n, cols)
    return [int(v) for v in perm]


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Isomorphism-invariant byte string: graph6 of the canonically relabeled
    graph, plus the label-ordered color sequence when colors are given.

    Two graphs have equal form iff they are isomorphic (respecting colors).
    """
    perm = canonical_perm(g, colors)
    new_of_old = [0] * g.n
    for i, v in enumerate(perm):
        new_of_old[v] = i
    canon = g.relabel(new_of_old)
    form = write_graph6(canon).encode("ascii")
    if colors is not None:
        form += b"#" + bytes(int(colors[v]) & 0xFF for v in perm)
    return form


# ---------------------------------------------------------------------------
# graph6 (bit-exact per the published format; n <= 64)

def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(63 + val))
    return head + "".join(body)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ord(ch)}")
    if s[0] == "~":
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 vertex count")
        if s[1] == "~":
            raise GraphFormatError("graph6 vertex count > 64 unsupported")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise GraphFormatError("graph6 vertex count must be >= 1")
    if n > MAX_N:
        raise GraphFormatError(f"graph6 vertex count {n} exceeds {MAX_N}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body length {len(body)}, expected {need} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            bits.append((val >> k) & 1)
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero graph6 padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format ("u v" per line, 0-indexed)

def parse_edge_list(text: str) -> Graph:
    edges = []
    hi = -1
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
        hi = max(hi, u, v)
    if hi < 0:
        raise GraphFormatError("edge list contains no edges")
    if hi >= MAX_N:
        raise GraphFormatError(f"vertex id {hi} exceeds {MAX_N - 1}")
    return Graph(hi + 1, edges)


def write_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())
