"""Shared test utilities: random members of the extension set."""

import numpy as np

from metrize import CompletionSpec, WeightedGraph, all_pairs_distance, complete_disconnected, connected_components


def random_spec(g, rng, max_const=5.0):
    comps = connected_components(g)
    base = comps[int(rng.integers(len(comps)))][0]
    return CompletionSpec(
        anchors={c[0]: c[int(rng.integers(len(c)))] for c in comps},
        base=base,
        constants={c[0]: 0.0 if c[0] == base else float(rng.uniform(0, max_const)) for c in comps},
    )


def random_member(g: WeightedGraph, rng, extra_prob=0.5):
    """A random pseudometric agreeing with the (metrizable) weight of ``g`` on its edges.

    Adds shortcut edges inside components, each as short as the original
    edges allow, then joins components with random anchors and constants.
    """
    d = all_pairs_distance(g).entries.copy()
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = [(idx[u], idx[v], w) for u, v, w in g.edges]
    pairs = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if np.isfinite(d[i, j]) and not g.has_edge(g.vertices[i], g.vertices[j])
    ]
    rng.shuffle(pairs)
    added = []
    for i, j in pairs:
        if rng.random() >= extra_prob:
            continue
        need = 0.0
        for x, y, w in edges:
            need = max(need, w - min(d[x, i] + d[j, y], d[x, j] + d[i, y]))
        if need > d[i, j]:
            continue
        t = float(rng.uniform(need, d[i, j]))
        d = np.minimum(d, np.minimum(d[:, i, None] + t + d[None, j, :], d[:, j, None] + t + d[None, i, :]))
        added.append((i, j))
    h = g.with_edges((g.vertices[i], g.vertices[j], float(d[i, j])) for i, j in added)
    return complete_disconnected(h, random_spec(h, rng))
