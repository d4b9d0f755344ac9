"""Metrizability of edge weights, bridges, and membership of candidate matrices.

A weight is metrizable when some pseudometric on the vertices agrees with it
on every edge. That happens exactly when no edge is longer than the shortest
path between its endpoints, which is what :func:`check_metrizable` tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import (
    DEFAULT_EPS,
    CycleWitness,
    DistanceMatrix,
    Violation,
    WeightedGraph,
    connected_components,
    edge_key,
    validate_matrix_shape,
)
from .shortest_path import all_pairs_distance, shortest_path_witness


class NotMetrizableError(ValueError):
    pass


@dataclass(frozen=True)
class MetrizabilityReport:
    metrizable: bool
    witness: CycleWitness | None
    checked_edges: int
    # largest w(e) - d_w(u, v) over all edges; 0 for edgeless graphs
    worst_slack: float

    def to_dict(self) -> dict:
        return {
            "metrizable": self.metrizable,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "worst_slack": self.worst_slack,
        }


def edge_slacks(g: WeightedGraph, d: DistanceMatrix | None = None) -> list[float]:
    """``w(e) - d_w(e)`` per edge, in edge order. Never negative up to rounding."""
    if d is None:
        d = all_pairs_distance(g)
    return [w - d[u, v] for u, v, w in g.edges]


def violating_cycle(g: WeightedGraph, u: str, v: str) -> CycleWitness:
    """Close the shortest ``u``..``v`` path avoiding the edge ``{u, v}`` into a cycle."""
    w = g.weight(u, v)
    path = shortest_path_witness(g.without_edge(u, v), u, v)
    if path is None:
        raise ValueError(f"{{{u}, {v}}} is a bridge and lies on no cycle")
    cycle = path.vertices + (u,)
    return CycleWitness(cycle=cycle, max_edge=(u, v), lhs=2 * w, rhs=w + path.weight)


def check_metrizable(g: WeightedGraph, eps: float = DEFAULT_EPS) -> MetrizabilityReport:
    if eps < 0:
        raise ValueError("eps must be >= 0")
    slacks = edge_slacks(g)
    if not slacks:
        return MetrizabilityReport(True, None, 0, 0.0)
    worst = max(range(len(slacks)), key=lambda i: (slacks[i], -i))
    worst_slack = max(slacks[worst], 0.0)
    if worst_slack <= eps:
        return MetrizabilityReport(True, None, len(slacks), worst_slack)
    u, v, _ = g.edges[worst]
    return MetrizabilityReport(False, violating_cycle(g, u, v), len(slacks), worst_slack)


def bridges(g: WeightedGraph) -> set[tuple[str, str]]:
    """Edges lying on no cycle, as :func:`edge_key` pairs.

    Iterative depth-first search with low-link values, one tree per component.
    """
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    out: set[tuple[str, str]] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # frames: (vertex, parent, iterator over neighbours)
        stack = [(root, None, iter(g.neighbors(root)))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if y in disc:
                    low[x] = min(low[x], disc[y])
                else:
                    disc[y] = low[y] = counter
                    counter += 1
                    stack.append((y, x, iter(g.neighbors(y))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[x])
                if low[x] > disc[parent]:
                    out.add(edge_key(parent, x))
    return out


def free_reweight_set(g: WeightedGraph, edges: Iterable[tuple[str, str]]) -> bool:
    """True iff the given edges may be reweighted arbitrarily without losing metrizability.

    That is the case exactly when each of them is a bridge.
    """
    keys = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise KeyError(f"{{{u}, {v}}} is not an edge")
        keys.append(edge_key(u, v))
    b = bridges(g)
    return all(k in b for k in keys)


def is_forest(g: WeightedGraph) -> bool:
    # a forest has exactly n - c edges
    return g.m == g.n - len(connected_components(g))


def metric_exists(g: WeightedGraph, eps: float = DEFAULT_EPS) -> tuple[bool, str]:
    """Whether some *metric* on V agrees with the weight on every edge.

    Distinct components can always be pushed apart by positive constants, so
    only distances inside a component matter.
    """
    if not check_metrizable(g, eps).metrizable:
        return False, "not metrizable"
    d = all_pairs_distance(g)
    for comp in connected_components(g):
        for i, u in enumerate(comp):
            for v in comp[i + 1:]:
                if d[u, v] <= eps:
                    return False, f"shortest-path distance between {u} and {v} is {d[u, v]!r}"
    if len(connected_components(g)) > 1:
        return True, "every component's shortest-path pseudometric is a metric; join components with positive constants"
    return True, "the shortest-path pseudometric is a metric"


def validate_membership(g: WeightedGraph, m: DistanceMatrix, eps: float = DEFAULT_EPS) -> Violation | None:
    """Check that ``m`` is a pseudometric on V(g) agreeing with the weight on every edge.

    Returns None when it is, otherwise the first failing check: shape,
    finiteness, sign, edge agreement, then triangles ordered by (u, v, z).
    """
    if set(m.vertices) != set(g.vertices) or len(m.vertices) != g.n:
        raise ValueError(f"matrix labels {list(m.vertices)} do not match graph vertices {list(g.vertices)}")
    m = m.reorder(g.vertices)
    a = m.entries
    labels = g.vertices
    bad = np.argwhere(~np.isfinite(a))
    if len(bad):
        i, j = bad[0]
        return Violation("nonfinite", (labels[i], labels[j]), f"entry({labels[i]},{labels[j]}) = {a[i, j]!r}")
    shape = validate_matrix_shape(m, eps)
    if shape is not None:
        return shape
    bad = np.argwhere(a < -eps)
    if len(bad):
        i, j = bad[0]
        return Violation("negative", (labels[i], labels[j]), f"entry({labels[i]},{labels[j]}) = {a[i, j]!r}")
    for u, v, w in g.edges:
        x = m[u, v]
        if abs(x - w) > eps:
            return Violation("edge", (u, v), f"entry({u},{v}) = {x!r} but w({{{u},{v}}}) = {w!r}")
    for i in range(len(labels)):
        # excess[j, z] = a[i, j] - a[i, z] - a[z, j]
        excess = a[i][:, None] - a[i][None, :] - a.T
        bad = np.argwhere(excess > eps)
        if not len(bad):
            continue
        j, z = bad[0]
        u, v, p = labels[i], labels[j], labels[z]
        return Violation(
            "triangle",
            (u, v, p),
            f"entry({u},{v}) = {a[i, j]!r} > entry({u},{p}) + entry({p},{v}) = {a[i, z] + a[z, j]!r}",
        )
    return None
