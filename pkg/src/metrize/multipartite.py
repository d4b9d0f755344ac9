"""Complete multipartite graphs and the least pseudometric extending a weight.

On a complete k-partite graph (k >= 2) with a metrizable weight, every
pseudometric agreeing with the weight lies between the least one computed
here and the shortest-path pseudometric. The quadrilateral helpers cover the
4-cycle with weights a, b, c, k on v1v2, v2v3, v3v4, v4v1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import DEFAULT_EPS, DistanceMatrix, Violation, WeightedGraph, validate_matrix_shape
from .metrization import NotMetrizableError, check_metrizable, validate_membership
from .shortest_path import all_pairs_distance


class NotMultipartiteError(ValueError):
    pass


class PreconditionError(ValueError):
    """Input outside the class where the sandwich property is guaranteed."""


class TheoremViolation(AssertionError):
    """A result contradicts a proven identity; indicates a bug, never bad input."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[str, ...], ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    def part_of(self, v: str) -> int:
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        raise KeyError(v)

    def to_dict(self) -> dict:
        return {"k": self.k, "parts": [list(p) for p in self.parts]}


def detect_partition(g: WeightedGraph) -> Partition | None:
    """Parts of a complete multipartite structure, or None if there is none.

    Parts are the components of the complement graph; the result is accepted
    only if no part contains an edge and all cross-part pairs are edges.
    """
    if g.n == 0:
        return None
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    verts = g.vertices
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if not g.has_edge(u, v):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
    groups: dict[str, list[str]] = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    parts = sorted((tuple(sorted(p)) for p in groups.values()), key=lambda p: p[0])
    part = {v: i for i, p in enumerate(parts) for v in p}
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if g.has_edge(u, v) == (part[u] == part[v]):
                return None
    return Partition(tuple(parts))


def _require_multipartite(g: WeightedGraph) -> Partition:
    partition = detect_partition(g)
    if partition is None:
        raise NotMultipartiteError("graph is not complete multipartite")
    if partition.k < 2:
        raise NotMultipartiteError("graph is 1-partite (edgeless); a least element needs k >= 2")
    return partition


def _least(g: WeightedGraph, partition: Partition) -> np.ndarray:
    n = g.n
    out = np.zeros((n, n))
    for u, v, w in g.edges:
        i, j = g.index(u), g.index(v)
        out[i, j] = out[j, i] = w
    for part in partition.parts:
        others = [p for p in g.vertices if p not in part]
        for a, u in enumerate(part):
            for v in part[a + 1:]:
                x = max(abs(g.weight(u, p) - g.weight(p, v)) for p in others)
                i, j = g.index(u), g.index(v)
                out[i, j] = out[j, i] = x
    return out


def least_pseudometric(g: WeightedGraph, eps: float = DEFAULT_EPS) -> DistanceMatrix:
    """Entrywise smallest pseudometric agreeing with the weight on every edge.

    For u, v in the same part the value is the largest ``|w(u,p) - w(p,v)|``
    over vertices p outside that part; adjacent pairs keep their weight.
    """
    partition = _require_multipartite(g)
    if not check_metrizable(g, eps).metrizable:
        raise NotMetrizableError("weight is not metrizable")
    return DistanceMatrix(g.vertices, _least(g, partition))


def two_path_infimum(g: WeightedGraph, u: str, v: str) -> float:
    """Smallest ``w(u,p) + w(p,v)`` over common neighbours p."""
    nu, nv = g.neighbors(u), g.neighbors(v)
    return min((nu[p] + nv[p] for p in nu if p in nv), default=math.inf)


def greatest_vs_least_interval(
    g: WeightedGraph, u: str, v: str, eps: float = DEFAULT_EPS
) -> tuple[float, float]:
    """``(least, greatest)`` admissible value of the distance between nonadjacent u, v."""
    g.index(u)
    g.index(v)
    if u == v:
        raise ValueError("u and v must be distinct")
    if g.has_edge(u, v):
        raise ValueError(f"{u} and {v} are adjacent; their distance is fixed at {g.weight(u, v)!r}")
    rho = least_pseudometric(g, eps)
    d = all_pairs_distance(g)
    upper = d[u, v]
    two = two_path_infimum(g, u, v)
    if abs(two - upper) > eps * max(1.0, upper):
        raise TheoremViolation(f"shortest path {upper!r} differs from two-path infimum {two!r}")
    return rho[u, v], upper


def _sandwich_preconditions(g: WeightedGraph, eps: float) -> Partition:
    partition = detect_partition(g)
    if partition is None:
        raise PreconditionError("graph is not complete multipartite")
    if partition.k < 2:
        raise PreconditionError("graph needs at least two parts")
    big = [p for p in partition.parts if len(p) > 2]
    if big:
        raise PreconditionError(f"part {list(big[0])} has more than two vertices")
    if not check_metrizable(g, eps).metrizable:
        raise PreconditionError("weight is not metrizable")
    return partition


def sandwich_validate(g: WeightedGraph, f: DistanceMatrix, eps: float = DEFAULT_EPS) -> Violation | None:
    """Check ``least <= f <= shortest-path`` and cross-check membership.

    Returns None when f is sandwiched (and therefore a member), otherwise the
    first out-of-range pair. Raises ValueError on mismatched labels,
    :class:`PreconditionError` outside graphs with k >= 2 parts of size <= 2,
    and :class:`TheoremViolation` if a sandwiched f fails membership.
    """
    if set(f.vertices) != set(g.vertices) or len(f.vertices) != g.n:
        raise ValueError(f"matrix labels {list(f.vertices)} do not match graph vertices {list(g.vertices)}")
    partition = _sandwich_preconditions(g, eps)
    f = f.reorder(g.vertices)
    shape = validate_matrix_shape(f, eps)
    if shape is not None:
        raise PreconditionError(f"candidate is not symmetric with zero diagonal: {shape.message}")
    lo = _least(g, partition)
    hi = all_pairs_distance(g).entries
    a = f.entries
    labels = g.vertices
    for i in range(g.n):
        for j in range(g.n):
            if a[i, j] < lo[i, j] - eps:
                u, v = labels[i], labels[j]
                return Violation("below-least", (u, v), f"entry({u},{v}) = {a[i, j]!r} < least {lo[i, j]!r}")
            if a[i, j] > hi[i, j] + eps:
                u, v = labels[i], labels[j]
                return Violation("above-greatest", (u, v), f"entry({u},{v}) = {a[i, j]!r} > shortest path {hi[i, j]!r}")
    member = validate_membership(g, f, eps)
    if member is not None:
        raise TheoremViolation(f"sandwiched matrix is not a member: {member.message}")
    return None


def sandwich_sample(g: WeightedGraph, seed: int | None = None, eps: float = DEFAULT_EPS) -> DistanceMatrix:
    """Random member: each nonadjacent pair drawn uniformly between its bounds."""
    partition = _sandwich_preconditions(g, eps)
    rng = np.random.default_rng(seed)
    lo = _least(g, partition)
    hi = all_pairs_distance(g).entries
    out = hi.copy()
    for part in partition.parts:
        if len(part) == 2:
            i, j = g.index(part[0]), g.index(part[1])
            a, b = sorted((lo[i, j], hi[i, j]))
            out[i, j] = out[j, i] = a if a == b else min(max(rng.uniform(a, b), a), b)
    return DistanceMatrix(g.vertices, out)


def is_star(g: WeightedGraph) -> bool:
    partition = detect_partition(g)
    return partition is not None and partition.k == 2 and min(len(p) for p in partition.parts) == 1


# -- the quadrilateral ------------------------------------------------------------


@dataclass(frozen=True)
class QuadReport:
    a: float
    b: float
    c: float
    k: float
    metrizable: bool
    # diagonal -> (lower, upper); lower > upper is possible only when not metrizable
    ranges: dict

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "k": self.k,
            "metrizable": self.metrizable,
            "intervals": {name: list(r) for name, r in self.ranges.items()},
        }


def quadrilateral(a: float, b: float, c: float, k: float) -> WeightedGraph:
    return WeightedGraph(
        ("v1", "v2", "v3", "v4"),
        (("v1", "v2", a), ("v2", "v3", b), ("v3", "v4", c), ("v4", "v1", k)),
    )


def analyze_quadrilateral(a: float, b: float, c: float, k: float, eps: float = 0.0) -> QuadReport:
    a, b, c, k = (float(x) for x in (a, b, c, k))
    if min(a, b, c, k) < 0:
        raise ValueError("weights must be nonnegative")
    metrizable = 2 * max(a, b, c, k) <= a + b + c + k + eps
    ranges = {
        "v1-v3": (max(abs(a - b), abs(c - k)), min(a + b, c + k)),
        "v2-v4": (max(abs(b - c), abs(a - k)), min(b + c, a + k)),
    }
    return QuadReport(a, b, c, k, metrizable, ranges)
