"""Weighted simple graphs, distance matrices, and their text formats.

Edge-list format (UTF-8)::

    # comment to end of line
    node a
    edge a b 2.5

JSON format: ``{"vertices": [...], "edges": [[u, v, w], ...]}``.
Matrix format: TSV whose first row holds the vertex labels; each following
row holds the entries of one vertex in header order, ``inf`` for +infinity.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

DEFAULT_EPS = 1e-9


class GraphError(ValueError):
    """Raised when a graph or matrix breaks a structural invariant."""


class GraphFormatError(GraphError):
    """Raised by the parsers; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Unordered pair as a lexicographically ordered tuple."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    """Finite simple graph with nonnegative finite edge weights.

    ``vertices`` keeps the declared order; every matrix built from the graph
    uses that order for its rows and columns.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)
    _adj: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        edges = tuple((str(u), str(v), float(w)) for u, v, w in self.edges)
        index = {}
        for v in vertices:
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj: dict[str, dict[str, float]] = {v: {} for v in vertices}
        for u, v, w in edges:
            if u not in index or v not in index:
                missing = u if u not in index else v
                raise GraphError(f"edge endpoint {missing!r} is not a vertex")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {{{u}, {v}}}")
            if not math.isfinite(w) or w < 0:
                raise GraphError(f"weight of {{{u}, {v}}} must be finite and >= 0, got {w!r}")
            adj[u][v] = w
            adj[v][u] = w
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence], vertices: Iterable[str] = ()) -> "WeightedGraph":
        """Build a graph, appending edge endpoints not already in ``vertices``."""
        edges = [tuple(e) for e in edges]
        order = list(dict.fromkeys(str(v) for v in vertices))
        seen = set(order)
        for u, v, _ in edges:
            for x in (str(u), str(v)):
                if x not in seen:
                    seen.add(x)
                    order.append(x)
        return cls(tuple(order), tuple(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise KeyError(f"{v!r} is not a vertex") from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def weight(self, u: str, v: str) -> float:
        try:
            return self._adj[u][v]
        except KeyError:
            raise KeyError(f"{{{u}, {v}}} is not an edge") from None

    def neighbors(self, v: str) -> dict[str, float]:
        """Neighbour -> weight, in edge declaration order. Do not mutate."""
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def edge_keys(self) -> list[tuple[str, str]]:
        return [edge_key(u, v) for u, v, _ in self.edges]

    def without_edge(self, u: str, v: str) -> "WeightedGraph":
        if not self.has_edge(u, v):
            raise KeyError(f"{{{u}, {v}}} is not an edge")
        k = edge_key(u, v)
        return WeightedGraph(self.vertices, tuple(e for e in self.edges if edge_key(e[0], e[1]) != k))

    def with_weights(self, weights: dict[tuple[str, str], float]) -> "WeightedGraph":
        """Copy with the weights of the given edges (keyed by :func:`edge_key`) replaced."""
        for k in weights:
            if not self.has_edge(*k):
                raise KeyError(f"{{{k[0]}, {k[1]}}} is not an edge")
        weights = {edge_key(*k): w for k, w in weights.items()}
        return WeightedGraph(
            self.vertices,
            tuple((u, v, weights.get(edge_key(u, v), w)) for u, v, w in self.edges),
        )

    def with_edges(self, extra: Iterable[Sequence]) -> "WeightedGraph":
        return WeightedGraph(self.vertices, self.edges + tuple(tuple(e) for e in extra))

    def induced(self, keep: Iterable[str]) -> "WeightedGraph":
        keep = set(keep)
        return WeightedGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def canonical(self) -> "WeightedGraph":
        """Same graph with each edge oriented by vertex order and edges sorted."""
        idx = self._index
        edges = []
        for u, v, w in self.edges:
            if idx[u] > idx[v]:
                u, v = v, u
            edges.append((u, v, w))
        edges.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
        return WeightedGraph(self.vertices, tuple(edges))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Square matrix of values in [0, +inf] indexed by vertex labels.

    Symmetry and the zero diagonal are not enforced here; use
    :func:`validate_matrix_shape`.
    """

    vertices: tuple[str, ...]
    entries: np.ndarray
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        entries = np.array(self.entries, dtype=float)
        n = len(vertices)
        if entries.shape != (n, n):
            raise GraphError(f"matrix shape {entries.shape} does not match {n} labels")
        if len(set(vertices)) != n:
            raise GraphError("duplicate matrix label")
        entries.setflags(write=False)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vertices)})

    def __getitem__(self, pair: tuple[str, str]) -> float:
        u, v = pair
        return float(self.entries[self._index[u], self._index[v]])

    def index(self, v: str) -> int:
        return self._index[v]

    def reorder(self, vertices: Sequence[str]) -> "DistanceMatrix":
        if sorted(vertices) != sorted(self.vertices):
            raise GraphError("label sets differ")
        perm = [self._index[v] for v in vertices]
        return DistanceMatrix(tuple(vertices), self.entries[np.ix_(perm, perm)])

    def allclose(self, other: "DistanceMatrix", atol: float = 0.0) -> bool:
        """Entrywise equality within ``atol``; infinities must match exactly."""
        if set(self.vertices) != set(other.vertices):
            return False
        b = other.reorder(self.vertices).entries
        a = self.entries
        inf_a, inf_b = np.isinf(a), np.isinf(b)
        if not np.array_equal(inf_a, inf_b):
            return False
        fin = ~inf_a
        return bool(np.all(np.abs(a[fin] - b[fin]) <= atol)) and bool(np.all(a[inf_a] == b[inf_a]))

    def replace(self, updates: dict[tuple[str, str], float], symmetric: bool = True) -> "DistanceMatrix":
        out = self.entries.copy()
        for (u, v), x in updates.items():
            i, j = self._index[u], self._index[v]
            out[i, j] = x
            if symmetric:
                out[j, i] = x
        return DistanceMatrix(self.vertices, out)


@dataclass(frozen=True)
class CycleWitness:
    """A cycle violating ``2 * max weight <= total weight``.

    ``cycle`` is closed: its first and last labels coincide.
    """

    cycle: tuple[str, ...]
    max_edge: tuple[str, str]
    lhs: float
    rhs: float

    def to_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "max_edge": list(self.max_edge),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class Violation:
    """First failing check found by a matrix validator."""

    kind: str
    where: tuple[str, ...]
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "where": list(self.where), "message": self.message}


# -- components ---------------------------------------------------------------


def connected_components(g: WeightedGraph) -> list[list[str]]:
    """Vertex sets of the components, each sorted, ordered by smallest label."""
    seen: set[str] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        seen.add(start)
        stack, comp = [start], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def validate_matrix_shape(m: DistanceMatrix, eps: float = 0.0) -> Violation | None:
    """Check the zero diagonal and symmetry; triangle inequalities are not examined."""
    a = m.entries
    labels = m.vertices
    for i, v in enumerate(labels):
        if not abs(a[i, i]) <= eps:
            return Violation("diagonal", (v,), f"entry({v},{v}) = {a[i, i]!r} is not 0")
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            x, y = a[i, j], a[j, i]
            if x == y:
                continue
            if math.isinf(x) or math.isinf(y) or math.isnan(x) or math.isnan(y) or abs(x - y) > eps:
                u, v = labels[i], labels[j]
                return Violation("symmetry", (u, v), f"entry({u},{v}) = {x!r} but entry({v},{u}) = {y!r}")
    return None


# -- edge-list format -----------------------------------------------------------


def _parse_weight(token: str, lineno: int | None) -> float:
    try:
        w = float(token)
    except ValueError:
        raise GraphFormatError(f"bad weight {token!r}", lineno) from None
    if not math.isfinite(w):
        raise GraphFormatError(f"weight must be finite, got {token!r}", lineno)
    if w < 0:
        raise GraphFormatError(f"negative weight {token!r}", lineno)
    return w


def parse_edge_list(text: str) -> WeightedGraph:
    vertices: dict[str, None] = {}
    edges = []
    pairs: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "node":
            if len(tok) != 2:
                raise GraphFormatError("expected 'node <label>'", lineno)
            vertices.setdefault(tok[1])
        elif tok[0] == "edge":
            if len(tok) != 4:
                raise GraphFormatError("expected 'edge <u> <v> <weight>'", lineno)
            u, v = tok[1], tok[2]
            if u == v:
                raise GraphFormatError(f"self-loop at {u!r}", lineno)
            w = _parse_weight(tok[3], lineno)
            k = edge_key(u, v)
            if k in pairs:
                raise GraphFormatError(f"duplicate edge {{{u}, {v}}} (first on line {pairs[k]})", lineno)
            pairs[k] = lineno
            vertices.setdefault(u)
            vertices.setdefault(v)
            edges.append((u, v, w))
        else:
            raise GraphFormatError(f"unknown directive {tok[0]!r}", lineno)
    return WeightedGraph(tuple(vertices), tuple(edges))


def to_edge_list(g: WeightedGraph) -> str:
    lines = [f"node {v}" for v in g.vertices]
    lines += [f"edge {u} {v} {w!r}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


# -- JSON format ----------------------------------------------------------------


def graph_from_json(data: str | dict) -> WeightedGraph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise GraphFormatError("expected an object with an 'edges' array")
    vertices = data.get("vertices", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError("'vertices' must be a list of strings")
    edges = []
    for item in data["edges"]:
        if not (isinstance(item, list) and len(item) == 3):
            raise GraphFormatError(f"edge must be [u, v, weight], got {item!r}")
        u, v, w = item
        if not isinstance(w, (int, float)) or isinstance(w, bool):
            raise GraphFormatError(f"weight must be a number, got {w!r}")
        edges.append((str(u), str(v), _parse_weight(repr(float(w)), None)))
    try:
        return WeightedGraph.from_edges(edges, vertices)
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def graph_to_json(g: WeightedGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [[u, v, w] for u, v, w in g.edges]}


# -- matrix TSV -----------------------------------------------------------------


def _fmt(x: float) -> str:
    return repr(float(x))


def matrix_to_tsv(m: DistanceMatrix) -> str:
    rows = ["\t".join(m.vertices)]
    rows += ["\t".join(_fmt(x) for x in row) for row in m.entries]
    return "\n".join(rows) + "\n"


def matrix_from_tsv(text: str) -> DistanceMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty matrix")
    labels = lines[0].split("\t")
    n = len(labels)
    if len(lines) - 1 != n:
        raise GraphFormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != n:
            raise GraphFormatError(f"expected {n} columns, found {len(cells)}", lineno)
        try:
            rows.append([float(c) for c in cells])
        except ValueError:
            raise GraphFormatError("non-numeric entry", lineno) from None
    try:
        return DistanceMatrix(tuple(labels), np.array(rows, dtype=float).reshape(n, n))
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def matrix_to_json(m: DistanceMatrix) -> dict:
    # JSON has no infinity literal
    return {
        "vertices": list(m.vertices),
        "entries": [[x if math.isfinite(x) else "inf" for x in map(float, row)] for row in m.entries],
    }
