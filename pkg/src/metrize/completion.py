"""Pseudometric extension across the components of a disconnected graph.

Each component gets an anchor vertex; one component is the base. A vertex u
of component i and a vertex v of another component j are placed at distance
``a_i + a_j + d(u, anchor_i) + d(v, anchor_j)``, where ``a_base = 0``.
Components are identified by their smallest vertex label.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graph import DEFAULT_EPS, DistanceMatrix, WeightedGraph, connected_components
from .metrization import NotMetrizableError, check_metrizable
from .shortest_path import all_pairs_distance


class CompletionSpecError(ValueError):
    pass


@dataclass(frozen=True)
class CompletionSpec:
    anchors: dict[str, str]
    base: str
    constants: dict[str, float]

    @classmethod
    def default(cls, g: WeightedGraph) -> "CompletionSpec":
        """Smallest label as anchor, base at the globally smallest vertex, other constants 1."""
        comps = connected_components(g)
        if not comps:
            raise CompletionSpecError("graph has no vertices")
        base = comps[0][0]
        return cls(
            anchors={c[0]: c[0] for c in comps},
            base=base,
            constants={c[0]: 0.0 if c[0] == base else 1.0 for c in comps},
        )

    @classmethod
    def from_json(cls, data: str | dict) -> "CompletionSpec":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise CompletionSpecError(f"invalid JSON: {exc.msg}") from None
        try:
            return cls(
                anchors={str(k): str(v) for k, v in data["anchors"].items()},
                base=str(data["base"]),
                constants={str(k): float(v) for k, v in data["constants"].items()},
            )
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise CompletionSpecError(f"malformed completion spec: {exc}") from None

    def to_dict(self) -> dict:
        return {"anchors": dict(self.anchors), "base": self.base, "constants": dict(self.constants)}

    def check(self, g: WeightedGraph) -> list[list[str]]:
        """Raise :class:`CompletionSpecError` unless consistent with ``g``; return its components."""
        comps = connected_components(g)
        reps = {c[0] for c in comps}
        if set(self.anchors) != reps:
            raise CompletionSpecError(f"anchors must be keyed by component representatives {sorted(reps)}")
        if set(self.constants) != reps:
            raise CompletionSpecError(f"constants must be keyed by component representatives {sorted(reps)}")
        if self.base not in reps:
            raise CompletionSpecError(f"base {self.base!r} is not a component representative")
        for c in comps:
            if self.anchors[c[0]] not in c:
                raise CompletionSpecError(f"anchor {self.anchors[c[0]]!r} is outside component {c[0]!r}")
            if not self.constants[c[0]] >= 0:
                raise CompletionSpecError(f"constant for {c[0]!r} must be >= 0")
        if self.constants[self.base] != 0:
            raise CompletionSpecError("the base component's constant must be 0")
        return comps


def complete_disconnected(
    g: WeightedGraph, spec: CompletionSpec | None = None, eps: float = DEFAULT_EPS
) -> DistanceMatrix:
    if spec is None:
        spec = CompletionSpec.default(g)
    comps = spec.check(g)
    if not check_metrizable(g, eps).metrizable:
        raise NotMetrizableError("weight is not metrizable")
    d = all_pairs_distance(g)
    rep = {v: c[0] for c in comps for v in c}
    out = d.entries.copy()
    # offset[v] = a_i + d(v, anchor_i)
    offset = np.array([spec.constants[rep[v]] + d[v, spec.anchors[rep[v]]] for v in g.vertices])
    for i, u in enumerate(g.vertices):
        for j, v in enumerate(g.vertices):
            if rep[u] != rep[v]:
                out[i, j] = offset[i] + offset[j]
    return DistanceMatrix(g.vertices, out)


def star_supergraph(g: WeightedGraph, spec: CompletionSpec | None = None) -> WeightedGraph:
    """``g`` plus an edge of weight ``a_i`` from each anchor to the base anchor."""
    if spec is None:
        spec = CompletionSpec.default(g)
    comps = spec.check(g)
    hub = spec.anchors[spec.base]
    extra = [(spec.anchors[c[0]], hub, spec.constants[c[0]]) for c in comps if c[0] != spec.base]
    return g.with_edges(extra)
