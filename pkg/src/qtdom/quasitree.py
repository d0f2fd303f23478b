"""Quasi-trees: detection, type classification, and the six hub-attachment
constructions over the tree family.

A quasi-vertex is a vertex whose removal leaves a tree; a quasi-tree has one,
and is non-trivial when the graph itself is not a tree. A quasi-tree is
type-1 when some quasi-vertex h leaves a family member (gamma_membership),
type-2 otherwise.

The constructions QT1..QT6 take a family tree whose construction ended in o1
(classes 1,3,5) or o2 (classes 2,4,6) and join a new hub h to the tree:
classes 1/2 with t >= 2 edges avoiding the last-operation vertices, classes
3/4 with t >= 2 edges into them, classes 5/6 with t1 >= 1 into them and
t2 >= 1 outside. Instances carry full provenance for the verifier's catalog.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from . import kernels
from .errors import OperationError
from .families import GammaTree, TraceStep, gamma_membership, make_T0, expansions
from .graphs import Graph, is_tree, write_graph6


class QTClass(IntEnum):
    QT1 = 1
    QT2 = 2
    QT3 = 3
    QT4 = 4
    QT5 = 5
    QT6 = 6

    @property
    def wants_o1(self) -> bool:
        return self in (QTClass.QT1, QTClass.QT3, QTClass.QT5)


def quasi_vertices(g: Graph) -> frozenset[int]:
    """All v with g - v connected and acyclic."""
    mask = int(kernels.quasi_vertex_mask(g.adj, g.n))
    out = set()
    while mask:
        out.add((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return frozenset(out)


def is_nontrivial_quasi_tree(g: Graph) -> bool:
    return not is_tree(g) and bool(quasi_vertices(g))


@dataclass(frozen=True)
class TypeClassification:
    kind: int              # 1 or 2
    witness: int | None    # quasi-vertex h with g-h in the family, type-1 only


def classify_type(g: Graph) -> TypeClassification:
    """Type-1 with the lowest-id witness quasi-vertex whose removal leaves a
    family member; type-2 when no quasi-vertex qualifies."""
    if not is_nontrivial_quasi_tree(g):
        raise OperationError("classify_type needs a non-trivial quasi-tree")
    for h in sorted(quasi_vertices(g)):
        t = g.remove_vertices([h])
        if t.n >= 3 and gamma_membership(t):
            return TypeClassification(kind=1, witness=h)
    return TypeClassification(kind=2, witness=None)


@dataclass(frozen=True)
class QTInstance:
    graph: Graph
    cls: QTClass
    base: GammaTree
    last_op_vertices: tuple[int, ...]
    hub: int
    t1: tuple[int, ...]     # hub edges into the last-operation vertices
    t2: tuple[int, ...]     # hub edges into the rest of the base tree
    y: int                  # attachment vertex of the base's last operation

    def provenance(self) -> dict:
        return {
            "class": f"QT{int(self.cls)}",
            "base_graph6": write_graph6(self.base.tree),
            "base_trace": [
                {"op": s.op, "y": s.y, "added": list(s.added)}
                for s in self.base.trace
            ],
            "last_op_vertices": list(self.last_op_vertices),
            "hub": self.hub,
            "t1": list(self.t1),
            "t2": list(self.t2),
            "y": self.y,
        }

    def to_json(self) -> str:
        doc = {"graph6": write_graph6(self.graph)}
        doc.update(self.provenance())
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def build_qt(cls: QTClass, base: GammaTree, attachments) -> QTInstance:
    """Join a new hub to `base` per the class's attachment rule.

    `attachments` is a vertex sequence for classes 1-4, or a pair of vertex
    sequences (into the last-operation vertices, outside them) for 5/6.
    """
    cls = QTClass(cls)
    if not base.trace:
        raise OperationError("base tree has no last operation (bare P6)")
    step: TraceStep = base.trace[-1]
    if cls.wants_o1 and step.op != "o1":
        raise OperationError(f"{cls.name} needs a base whose last operation is o1")
    if not cls.wants_o1 and step.op != "o2":
        raise OperationError(f"{cls.name} needs a base whose last operation is o2")
    last = set(step.added)
    rest = set(range(base.n)) - last

    if cls in (QTClass.QT5, QTClass.QT6):
        try:
            raw1, raw2 = attachments
        except (TypeError, ValueError):
            raise OperationError(
                f"{cls.name} takes a pair of attachment sets") from None
        t1, t2 = _as_targets(raw1, last, cls, "t1"), _as_targets(raw2, rest, cls, "t2")
        if not t1 or not t2:
            raise OperationError(f"{cls.name} needs t1 >= 1 and t2 >= 1")
    else:
        allowed = rest if cls in (QTClass.QT1, QTClass.QT2) else last
        chosen = _as_targets(attachments, allowed, cls, "attachments")
        if len(chosen) < 2:
            raise OperationError(f"{cls.name} needs t >= 2 attachment edges")
        if cls in (QTClass.QT1, QTClass.QT2):
            t1, t2 = (), chosen
        else:
            t1, t2 = chosen, ()

    hub = base.n
    edges = base.tree.edges() + [(a, hub) for a in t1 + t2]
    graph = Graph(base.n + 1, edges)
    inst = QTInstance(graph=graph, cls=cls, base=base,
                      last_op_vertices=step.added, hub=hub,
                      t1=t1, t2=t2, y=step.y)
    # construction guarantees: hub is a quasi-vertex leaving a family member
    assert is_tree(graph.remove_vertices([hub]))
    return inst


def _as_targets(raw, allowed: set[int], cls: QTClass, what: str) -> tuple[int, ...]:
    try:
        vs = sorted(set(int(v) for v in raw))
    except TypeError:
        raise OperationError(f"{cls.name}: {what} must be a vertex sequence") from None
    for v in vs:
        if v not in allowed:
            raise OperationError(
                f"{cls.name}: vertex {v} not in the allowed {what} target set")
    return tuple(vs)


_DELETIONS = {
    QTClass.QT1: ("last",),
    QTClass.QT2: ("last",),
    QTClass.QT3: ("last", "hub"),
    QTClass.QT4: ("last", "hub"),
    QTClass.QT5: ("last",),
    QTClass.QT6: ("last",),
}


def lemma_reduction(q: QTInstance) -> Graph:
    """The reduced graph each class's lemma argues about: drop the
    last-operation vertices, plus the hub for classes 3 and 4."""
    drop = list(q.last_op_vertices)
    if "hub" in _DELETIONS[q.cls]:
        drop.append(q.hub)
    return q.graph.remove_vertices(drop)


# ---------------------------------------------------------------------------
# seeded random instances for the verifier's lemma replay

def random_gamma_tree(rng: np.random.Generator, max_n: int,
                      final_op: str | None = None) -> GammaTree:
    """Random family member grown from the base path; when final_op is given
    the last applied operation has that kind (max_n must leave room)."""
    need = 4 if final_op == "o1" else 3
    t = make_T0()
    budget = int(rng.integers(0, max(1, (max_n - t.n - need) // 3 + 1)))
    for _ in range(budget):
        options = [c for c in expansions(t, max_n - need)]
        if not options:
            break
        t = options[int(rng.integers(0, len(options)))]
    if final_op is None:
        return t
    if final_op == "o1":
        ys = [y for y in range(t.n)
              if t.status[y] == "C" and t.tree.degree(y) == 1]
        from .families import apply_o1 as op
    else:
        ys = [y for y in range(t.n) if t.status[y] == "B"]
        from .families import apply_o2 as op
    return op(t, ys[int(rng.integers(0, len(ys)))])


def random_qt_instance(cls: QTClass, rng: np.random.Generator,
                       max_base_n: int = 18) -> QTInstance:
    """Seeded random instance of the given class (uniform over valid target
    subsets of a uniformly chosen size)."""
    cls = QTClass(cls)
    base = random_gamma_tree(rng, max_base_n, "o1" if cls.wants_o1 else "o2")
    last = list(base.trace[-1].added)
    rest = [v for v in range(base.n) if v not in base.trace[-1].added]

    def pick(pool, k):
        idx = rng.choice(len(pool), size=k, replace=False)
        return [pool[int(i)] for i in idx]

    if cls in (QTClass.QT1, QTClass.QT2):
        t = int(rng.integers(2, min(len(rest), 5) + 1))
        return build_qt(cls, base, pick(rest, t))
    if cls in (QTClass.QT3, QTClass.QT4):
        t = int(rng.integers(2, len(last) + 1))
        return build_qt(cls, base, pick(last, t))
    t1 = int(rng.integers(1, len(last) + 1))
    t2 = int(rng.integers(1, min(len(rest), 4) + 1))
    return build_qt(cls, base, (pick(last, t1), pick(rest, t2)))
