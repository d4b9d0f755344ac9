"""Weighted shortest-path pseudometric and path witnesses."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .graph import DistanceMatrix, WeightedGraph

# relative slack when deciding whether an edge is tight on a shortest path
_TIGHT_RTOL = 1e-12


@dataclass(frozen=True)
class PathRecord:
    vertices: tuple[str, ...]
    weight: float

    @property
    def edges(self) -> list[tuple[str, str]]:
        return list(zip(self.vertices, self.vertices[1:]))


def single_source(g: WeightedGraph, source: str) -> dict[str, float]:
    """Distances from ``source``; unreachable vertices map to ``inf``."""
    dist = {v: math.inf for v in g.vertices}
    dist[source] = 0.0
    heap = [(0.0, g.index(source), source)]
    done = set()
    while heap:
        d, _, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        for y, w in g.neighbors(x).items():
            nd = d + w
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, g.index(y), y))
    return dist


def _floyd_warshall(g: WeightedGraph) -> np.ndarray:
    n = g.n
    d = np.full((n, n), math.inf)
    np.fill_diagonal(d, 0.0)
    for u, v, w in g.edges:
        i, j = g.index(u), g.index(v)
        d[i, j] = d[j, i] = min(d[i, j], w)
    for k in range(n):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    return d


def all_pairs_distance(g: WeightedGraph, dense: bool = False) -> DistanceMatrix:
    """Shortest-path pseudometric of ``g``; ``inf`` between components.

    ``dense=True`` uses triple-loop relaxation instead of one heap-based
    search per source.
    """
    if dense:
        d = _floyd_warshall(g)
    else:
        d = np.empty((g.n, g.n))
        for i, s in enumerate(g.vertices):
            dist = single_source(g, s)
            d[i] = [dist[v] for v in g.vertices]
    # both directions are weights of real paths; summation order may differ by an ulp
    d = np.minimum(d, d.T)
    return DistanceMatrix(g.vertices, d)


def _reachable(g, start, target, tight, blocked) -> bool:
    stack, seen = [start], {start}
    while stack:
        x = stack.pop()
        if x == target:
            return True
        for y in tight[x]:
            if y not in seen and y not in blocked:
                seen.add(y)
                stack.append(y)
    return False


def shortest_path_witness(g: WeightedGraph, u: str, v: str) -> PathRecord | None:
    """Minimum-weight simple path from ``u`` to ``v``, or None if disconnected.

    Among minimum-weight paths the lexicographically smallest vertex sequence
    is returned.
    """
    g.index(u)
    g.index(v)
    if u == v:
        return PathRecord((u,), 0.0)
    to_v = single_source(g, v)
    if math.isinf(to_v[u]):
        return None
    # edges x -> y lying on some shortest x..v path
    tight = {}
    for x in g.vertices:
        if math.isinf(to_v[x]):
            tight[x] = []
            continue
        tol = _TIGHT_RTOL * max(1.0, to_v[x])
        tight[x] = sorted(y for y, w in g.neighbors(x).items() if abs(w + to_v[y] - to_v[x]) <= tol)
    # greedy smallest next vertex that can still reach v; zero-weight edges
    # make the tight graph cyclic, hence the reachability test
    path = [u]
    used = {u}
    while path[-1] != v:
        cur = path[-1]
        for y in tight[cur]:
            if y not in used and _reachable(g, y, v, tight, used):
                path.append(y)
                used.add(y)
                break
        else:  # pragma: no cover - tight graph always offers a continuation
            raise RuntimeError("no continuation along tight edges")
    weight = 0.0
    for a, b in zip(path, path[1:]):
        weight += g.weight(a, b)
    return PathRecord(tuple(path), weight)
