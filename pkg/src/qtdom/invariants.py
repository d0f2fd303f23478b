"""Exact computation of the two central invariants.

Total domination number: minimum size of a set D such that every vertex of
the graph has a neighbor in D. Computed by bitset branch and bound, with an
independent subset-enumeration oracle for cross-checking. Undefined (raises)
on graphs that are disconnected or have an isolated vertex.

Annihilation number: largest k such that the k smallest degrees sum to at
most m. The sorted (degree, id) prefix is used as the witness set; a sorted
prefix always satisfies the optimal-annihilation-set condition (max degree
inside <= min degree outside).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .errors import QtdomError, UndefinedInvariantError
from .graphs import Graph, degree_sequence, is_connected

ORACLE_MAX_N = 20


@dataclass(frozen=True)
class DomResult:
    gamma_t: int
    witness: frozenset[int]


@dataclass(frozen=True)
class AnnihilationResult:
    a: int
    vertices: frozenset[int]
    degree_sum: int


def sum_of_set(s: Iterable[int], g: Graph) -> int:
    total = 0
    for v in s:
        if not 0 <= v < g.n:
            raise QtdomError(f"vertex {v} out of range")
        total += g.degree(v)
    return total


def annihilation_number(g: Graph) -> AnnihilationResult:
    """Largest k with d_1 + ... + d_k <= m over the ascending degree
    sequence; ties broken by vertex id."""
    seq = degree_sequence(g)
    total = 0
    chosen: list[int] = []
    for v, d in seq:
        if total + d > g.m:
            break
        total += d
        chosen.append(v)
    return AnnihilationResult(a=len(chosen), vertices=frozenset(chosen),
                              degree_sum=total)


def is_total_dominating(s: Iterable[int], g: Graph) -> bool:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise QtdomError(f"vertex {v} out of range")
        mask |= 1 << v
    return all(g.neighbor_mask(v) & mask for v in range(g.n))


def _require_defined(g: Graph) -> None:
    if g.n < 2 or g.min_degree() == 0:
        raise UndefinedInvariantError(
            "total domination undefined: isolated vertex present")
    if not is_connected(g):
        raise UndefinedInvariantError(
            "total domination undefined here: graph is disconnected")


def _mask_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        out.add((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return frozenset(out)


def total_domination_number(g: Graph) -> DomResult:
    """Exact gamma_t by branch and bound (see kernels)."""
    _require_defined(g)
    size, mask = kernels.gamma_t_solve(g.adj, g.n)
    return DomResult(gamma_t=int(size), witness=_mask_set(int(mask)))


def total_domination_oracle(g: Graph) -> DomResult:
    """Exact gamma_t by subset enumeration in increasing cardinality.

    Independent of the branch-and-bound path; capped at n <= 20.
    """
    if g.n > ORACLE_MAX_N:
        raise QtdomError(f"oracle capped at n <= {ORACLE_MAX_N}")
    _require_defined(g)
    size, mask = kernels.gamma_t_exhaustive(g.adj, g.n)
    return DomResult(gamma_t=int(size), witness=_mask_set(int(mask)))
