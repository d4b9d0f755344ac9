"""Exhaustive reference computations and seeded random instances.

Everything here enumerates cycles or simple paths directly and is
exponential in the number of vertices; graphs larger than ``MAX_VERTICES``
are refused unless ``force=True``. Nothing in this module calls the fast
algorithms it is meant to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import DEFAULT_EPS, DistanceMatrix, WeightedGraph, edge_key

MAX_VERTICES = 10

GRAPH_CLASSES = ("arbitrary", "connected", "forest", "multipartite", "disconnected")


class OracleBoundError(ValueError):
    pass


def _guard(g: WeightedGraph, force: bool):
    if g.n > MAX_VERTICES and not force:
        raise OracleBoundError(f"{g.n} vertices exceeds the oracle bound of {MAX_VERTICES}; pass force=True")


def enumerate_cycles(g: WeightedGraph, max_len: int | None = None, force: bool = False) -> Iterator[tuple[str, ...]]:
    """Every simple cycle once, as an open vertex tuple.

    A cycle starts at its smallest label and runs in the direction whose
    second vertex is smaller than its last.
    """
    _guard(g, force)
    limit = g.n if max_len is None else max_len
    for s in sorted(g.vertices):
        path = [s]
        on_path = {s}

        def extend():
            cur = path[-1]
            for y in sorted(g.neighbors(cur)):
                if y == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                elif y > s and y not in on_path and len(path) < limit:
                    path.append(y)
                    on_path.add(y)
                    yield from extend()
                    path.pop()
                    on_path.discard(y)

        yield from extend()


def cycle_weight(g: WeightedGraph, cycle: tuple[str, ...]) -> tuple[float, float, tuple[str, str]]:
    """(total weight, max edge weight, max edge) of an open cycle tuple."""
    total, top, top_edge = 0.0, -1.0, None
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        w = g.weight(a, b)
        total += w
        if w > top:
            top, top_edge = w, (a, b)
    return total, top, top_edge


def cycle_condition_holds(
    g: WeightedGraph, eps: float = DEFAULT_EPS, force: bool = False
) -> tuple[bool, tuple[str, ...] | None]:
    """Test ``2 * max <= total`` on every cycle; return the first failing cycle."""
    for c in enumerate_cycles(g, force=force):
        total, top, _ = cycle_weight(g, c)
        if 2 * top - total > eps:
            return False, c
    return True, None


def edges_on_cycles(g: WeightedGraph, force: bool = False) -> set[tuple[str, str]]:
    out = set()
    for c in enumerate_cycles(g, force=force):
        for a, b in zip(c, c[1:] + c[:1]):
            out.add(edge_key(a, b))
    return out


def _simple_paths(g: WeightedGraph, u: str) -> Iterator[tuple[str, float, float]]:
    """(endpoint, weight, max edge weight) of every simple path starting at u."""
    on_path = {u}

    def extend(cur, total, top):
        yield cur, total, top
        for y, w in g.neighbors(cur).items():
            if y not in on_path:
                on_path.add(y)
                yield from extend(y, total + w, max(top, w))
                on_path.discard(y)

    yield from extend(u, 0.0, 0.0)


def exhaustive_all_pairs(g: WeightedGraph, force: bool = False) -> DistanceMatrix:
    """Minimum weight over all simple paths, for every pair; ``inf`` if none."""
    _guard(g, force)
    d = np.full((g.n, g.n), math.inf)
    for i, u in enumerate(g.vertices):
        for end, total, _ in _simple_paths(g, u):
            j = g.index(end)
            if total < d[i, j]:
                d[i, j] = total
    return DistanceMatrix(g.vertices, d)


def rho0_path_sup(g: WeightedGraph, u: str, v: str, force: bool = False) -> float:
    """Supremum over simple u..v paths P of ``max_e (2 w(e) - w(P))_+``.

    Branch and bound over simple paths: a prefix with weight W and heaviest
    edge M can reach at most ``max(2M - W, w_max - W)``, so prefixes that
    cannot beat the current best are cut. The result is still exact.
    """
    _guard(g, force)
    g.index(u)
    g.index(v)
    if u == v or g.has_edge(u, v):
        raise ValueError("u and v must be distinct and nonadjacent")
    w_max = max((w for _, _, w in g.edges), default=0.0)
    best = 0.0
    on_path = {u}

    def extend(cur, total, top):
        nonlocal best
        for y, w in g.neighbors(cur).items():
            if y in on_path:
                continue
            t, m = total + w, max(top, w)
            if y == v:
                best = max(best, 2 * m - t)
                continue
            if max(2 * m - t, w_max - t) <= best:
                continue
            on_path.add(y)
            extend(y, t, m)
            on_path.discard(y)

    extend(u, 0.0, 0.0)
    return best


def forbidden_triple(g: WeightedGraph) -> tuple[str, str, str] | None:
    """Distinct u, v nonadjacent and p adjacent to exactly one of them."""
    for u, v in combinations(g.vertices, 2):
        if g.has_edge(u, v):
            continue
        for p in g.vertices:
            if p != u and p != v and g.has_edge(u, p) != g.has_edge(v, p):
                return u, v, p
    return None


# -- random instances ---------------------------------------------------------------


@dataclass(frozen=True)
class InstanceGenerator:
    """Recipe for a seeded random weighted graph.

    ``metrizable`` draws points on ``[0, weight_max]`` and weights each edge
    by the distance of its endpoints; otherwise weights are uniform on
    ``[0, weight_max]``. ``zero_fraction`` is the chance of a zero weight
    (or, for metrizable instances, of a point repeating an earlier one).
    For ``multipartite``, ``parts`` fixes the part sizes; otherwise
    k is drawn from ``k_range`` and sizes from ``1..part_cap``.
    """

    seed: int = 0
    graph_class: str = "arbitrary"
    n_max: int = 6
    n_min: int = 1
    weight_max: float = 10.0
    zero_fraction: float = 0.0
    metrizable: bool = False
    edge_prob: float = 0.5
    parts: tuple[int, ...] | None = None
    k_range: tuple[int, int] = (2, 4)
    part_cap: int = 3


def _labels(n: int) -> list[str]:
    width = len(str(max(n - 1, 0)))
    return [f"v{i:0{width}d}" for i in range(n)]


def _pairs(spec: InstanceGenerator, rng: np.random.Generator) -> tuple[list[str], list[tuple[str, str]]]:
    cls = spec.graph_class
    if cls == "multipartite":
        if spec.parts is not None:
            sizes = list(spec.parts)
        else:
            k = int(rng.integers(spec.k_range[0], spec.k_range[1] + 1))
            sizes = [int(s) for s in rng.integers(1, spec.part_cap + 1, size=k)]
        labels = _labels(sum(sizes))
        owner = [i for i, s in enumerate(sizes) for _ in range(s)]
        pairs = [(labels[a], labels[b]) for a, b in combinations(range(len(labels)), 2) if owner[a] != owner[b]]
        return labels, pairs
    n = int(rng.integers(spec.n_min, spec.n_max + 1))
    labels = _labels(n)
    if cls == "arbitrary":
        pairs = [(labels[a], labels[b]) for a, b in combinations(range(n), 2) if rng.random() < spec.edge_prob]
    elif cls in ("connected", "forest"):
        # random recursive tree, then extra edges unless a forest is wanted
        pairs = []
        for b in range(1, n):
            if cls == "connected" or rng.random() < 0.8:
                pairs.append((labels[int(rng.integers(0, b))], labels[b]))
        if cls == "connected":
            have = {edge_key(*p) for p in pairs}
            for a, b in combinations(range(n), 2):
                if edge_key(labels[a], labels[b]) not in have and rng.random() < spec.edge_prob:
                    pairs.append((labels[a], labels[b]))
    elif cls == "disconnected":
        n = max(n, 2)
        labels = _labels(n)
        cuts = sorted(rng.choice(np.arange(1, n), size=int(rng.integers(1, min(3, n - 1) + 1)), replace=False))
        bounds = [0, *map(int, cuts), n]
        pairs = []
        for lo, hi in zip(bounds, bounds[1:]):
            for b in range(lo + 1, hi):
                pairs.append((labels[int(rng.integers(lo, b))], labels[b]))
            have = {edge_key(*q) for q in pairs}
            for a, b in combinations(range(lo, hi), 2):
                p = (labels[a], labels[b])
                if edge_key(*p) not in have and rng.random() < spec.edge_prob / 2:
                    pairs.append(p)
    else:
        raise ValueError(f"unknown graph class {cls!r}; expected one of {GRAPH_CLASSES}")
    return labels, pairs


def generate(spec: InstanceGenerator) -> WeightedGraph:
    rng = np.random.default_rng(spec.seed)
    labels, pairs = _pairs(spec, rng)
    if spec.metrizable:
        pos: dict[str, float] = {}
        for i, v in enumerate(labels):
            if i and rng.random() < spec.zero_fraction:
                pos[v] = pos[labels[int(rng.integers(0, i))]]
            else:
                pos[v] = float(rng.uniform(0, spec.weight_max))
        edges = [(a, b, abs(pos[a] - pos[b])) for a, b in pairs]
    else:
        edges = []
        for a, b in pairs:
            w = 0.0 if rng.random() < spec.zero_fraction else float(rng.uniform(0, spec.weight_max))
            edges.append((a, b, w))
    return WeightedGraph(tuple(labels), tuple(edges))
