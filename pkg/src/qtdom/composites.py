"""The five composite constructions, with deterministic vertex numbering.

New vertices are always indexed after existing ones: triangulation apexes in
sorted edge order, double/bijection second copies shifted by n, Mycielskian
shadows shifted by n with the apex last, and the identified graph keeping
the first factor's labels. All constructions enforce the 64-vertex cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import OperationError
from .graphs import MAX_N, Graph


def triangulate(g: Graph) -> Graph:
    """One apex vertex per edge, adjacent to both endpoints.
    n' = n + m, m' = 3m."""
    n2 = g.n + g.m
    if n2 > MAX_N:
        raise OperationError(f"triangulation needs n + m <= {MAX_N}")
    edges = g.edges()
    out = list(edges)
    for idx, (u, v) in enumerate(sorted(edges)):
        apex = g.n + idx
        out.append((u, apex))
        out.append((v, apex))
    return Graph(n2, out)


def double(g: Graph) -> Graph:
    """Two copies plus crossed edges u1-v2, u2-v1 per original edge.
    n' = 2n, m' = 4m."""
    if 2 * g.n > MAX_N:
        raise OperationError(f"double graph needs 2n <= {MAX_N}")
    n = g.n
    out = []
    for u, v in g.edges():
        out += [(u, v), (u + n, v + n), (u, v + n), (u + n, v)]
    return Graph(2 * n, out)


@dataclass(frozen=True)
class BijectionSpec:
    """Bijection from the first factor's vertices onto the second's,
    as an index array (mapping[u] = image of u)."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(n)):
            raise OperationError("bijection mapping must be a permutation")

    @classmethod
    def identity(cls, n: int) -> "BijectionSpec":
        return cls(tuple(range(n)))


def bijection_graph(g: Graph, h: Graph, f: BijectionSpec | Sequence[int]) -> Graph:
    """Disjoint union of equal-order g and h plus the matching u - f(u).
    m' = m(g) + m(h) + n."""
    if not isinstance(f, BijectionSpec):
        f = BijectionSpec(tuple(int(x) for x in f))
    if g.n != h.n:
        raise OperationError("bijection graph needs n(G) = n(H)")
    if len(f.mapping) != g.n:
        raise OperationError("bijection length mismatch")
    if 2 * g.n > MAX_N:
        raise OperationError(f"bijection graph needs n(G) + n(H) <= {MAX_N}")
    n = g.n
    out = list(g.edges())
    out += [(u + n, v + n) for u, v in h.edges()]
    out += [(u, f.mapping[u] + n) for u in range(n)]
    return Graph(2 * n, out)


def mycielskian(g: Graph) -> Graph:
    """Shadow vertex per vertex plus an apex adjacent to every shadow; each
    edge vi-vj yields ui-vj and vi-uj. n' = 2n + 1, m' = 3m + n."""
    if 2 * g.n + 1 > MAX_N:
        raise OperationError(f"mycielskian needs 2n + 1 <= {MAX_N}")
    n = g.n
    apex = 2 * n
    out = list(g.edges())
    for u, v in g.edges():
        out += [(u + n, v), (u, v + n)]
    out += [(apex, u + n) for u in range(n)]
    return Graph(2 * n + 1, out)


def universal_vertices(h: Graph) -> list[int]:
    return [v for v in range(h.n) if h.degree(v) == h.n - 1]


def universally_identify(g: Graph, v: int, h: Graph, u: int) -> Graph:
    """Merge vertex v of g with the universal vertex u of h.
    n' = n(g) + n(h) - 1; h's remaining vertices follow g's."""
    if not 0 <= v < g.n:
        raise OperationError(f"vertex {v} out of range")
    if not 0 <= u < h.n:
        raise OperationError(f"anchor {u} out of range")
    if h.degree(u) != h.n - 1:
        raise OperationError(f"anchor {u} is not universal in H")
    n2 = g.n + h.n - 1
    if n2 > MAX_N:
        raise OperationError(f"identification needs n(G) + n(H) - 1 <= {MAX_N}")
    hmap = {}
    nxt = g.n
    for x in range(h.n):
        if x == u:
            hmap[x] = v
        else:
            hmap[x] = nxt
            nxt += 1
    out = list(g.edges())
    out += [(hmap[a], hmap[b]) for a, b in h.edges()]
    return Graph(n2, out)


def identify_threshold(n_g: int) -> int:
    """Smallest H order for the identification closure hypothesis:
    ceil(n(G)/3 + 2), whole-expression ceiling."""
    return math.ceil(n_g / 3 + 2)
