import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_member
from metrize import (
    DistanceMatrix,
    NotMetrizableError,
    NotMultipartiteError,
    PreconditionError,
    WeightedGraph,
    all_pairs_distance,
    analyze_quadrilateral,
    check_metrizable,
    detect_partition,
    greatest_vs_least_interval,
    is_star,
    least_pseudometric,
    quadrilateral,
    sandwich_sample,
    sandwich_validate,
    validate_membership,
)
from metrize.multipartite import two_path_infimum
from metrize.oracle import InstanceGenerator, forbidden_triple, generate, rho0_path_sup


def star(*weights):
    return WeightedGraph.from_edges([("c", f"l{i}", w) for i, w in enumerate(weights, 1)])


def multipartite(seed, **kw):
    return generate(InstanceGenerator(seed=seed, graph_class="multipartite", metrizable=True, zero_fraction=0.1, **kw))


def test_detect_examples(quad):
    assert detect_partition(quad).to_dict() == {"k": 2, "parts": [["v1", "v3"], ["v2", "v4"]]}
    tri = WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])
    assert detect_partition(tri).to_dict() == {"k": 3, "parts": [["a"], ["b"], ["c"]]}
    p3 = WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1)])
    assert detect_partition(p3).to_dict() == {"k": 2, "parts": [["a", "c"], ["b"]]}
    p4 = WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("c", "d", 1)])
    assert detect_partition(p4) is None
    assert forbidden_triple(p4) is not None
    assert detect_partition(WeightedGraph(("a", "b"))).k == 1
    assert detect_partition(WeightedGraph(())) is None


def _all_graphs(n):
    vs = tuple("abcdef"[:n])
    pairs = list(itertools.combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        yield WeightedGraph(vs, tuple((u, v, 1.0) for i, (u, v) in enumerate(pairs) if mask >> i & 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_recognition_matches_forbidden_pattern(n):
    for g in _all_graphs(n):
        p = detect_partition(g)
        assert (p is None) == (forbidden_triple(g) is not None)
        if p is not None:
            where = {v: i for i, part in enumerate(p.parts) for v in part}
            for u, v in itertools.combinations(g.vertices, 2):
                assert g.has_edge(u, v) == (where[u] != where[v])


def test_least_quadrilateral(quad):
    rho = least_pseudometric(quad)
    # max(|a - b|, |c - k|) and max(|b - c|, |a - k|)
    assert rho["v1", "v3"] == 1.0
    assert rho["v2", "v4"] == 3.0
    assert rho_path_sup_matches(quad, rho)
    assert rho["v1", "v2"] == 1.0 and rho["v3", "v3"] == 0.0
    ones = least_pseudometric(quadrilateral(1, 1, 1, 1))
    assert ones["v1", "v3"] == 0.0 and ones["v2", "v4"] == 0.0


def rho_path_sup_matches(g, rho, atol=1e-9):
    for u, v in itertools.combinations(g.vertices, 2):
        if not g.has_edge(u, v) and abs(rho0_path_sup(g, u, v, force=True) - rho[u, v]) > atol:
            return False
    return True


def test_least_star():
    g = star(5, 2)
    assert rho0_path_sup(g, "l1", "l2") == 3.0
    assert least_pseudometric(g)["l1", "l2"] == 3.0


def test_least_errors():
    p4 = WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("c", "d", 1)])
    with pytest.raises(NotMultipartiteError):
        least_pseudometric(p4)
    with pytest.raises(NotMultipartiteError):
        least_pseudometric(WeightedGraph(("a", "b", "c")))
    with pytest.raises(NotMetrizableError):
        least_pseudometric(quadrilateral(1, 1, 1, 4))


def test_interval_examples(quad):
    assert greatest_vs_least_interval(quad, "v1", "v3") == (1.0, 3.0)
    assert greatest_vs_least_interval(quadrilateral(1, 1, 1, 1), "v1", "v3") == (0.0, 2.0)
    assert greatest_vs_least_interval(star(5, 2), "l1", "l2") == (3.0, 7.0)
    with pytest.raises(ValueError):
        greatest_vs_least_interval(quad, "v1", "v2")
    with pytest.raises(ValueError):
        greatest_vs_least_interval(quad, "v1", "v1")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_formulas_against_oracle(seed):
    g = multipartite(seed, k_range=(2, 3), part_cap=2)
    rho = least_pseudometric(g)
    d = all_pairs_distance(g)
    assert rho_path_sup_matches(g, rho)
    assert validate_membership(g, rho) is None
    for u, v in itertools.combinations(g.vertices, 2):
        assert rho[u, v] <= d[u, v] + 1e-9
        if not g.has_edge(u, v):
            assert two_path_infimum(g, u, v) == pytest.approx(d[u, v], abs=1e-12)


def test_least_below_random_members():
    rng = np.random.default_rng(7)
    for s in range(10):
        g = multipartite(s, k_range=(2, 4), part_cap=3)
        rho = least_pseudometric(g).entries
        for _ in range(10):
            m = random_member(g, rng)
            assert validate_membership(g, m) is None
            assert np.all(rho <= m.entries + 1e-9)
        if max(len(p) for p in detect_partition(g).parts) <= 2:
            for seed in range(10):
                assert np.all(rho <= sandwich_sample(g, seed).entries + 1e-9)


def test_sandwich_validate_examples(quad):
    rho = least_pseudometric(quad)
    d = all_pairs_distance(quad)
    mid = DistanceMatrix(quad.vertices, (rho.entries + d.entries) / 2)
    assert validate_membership(quad, mid) is None
    assert sandwich_validate(quad, mid) is None
    assert sandwich_validate(quad, rho) is None
    assert sandwich_validate(quad, d) is None
    low = rho.replace({("v1", "v3"): 0.5})
    assert sandwich_validate(quad, low).kind == "below-least"
    high = d.replace({("v2", "v4"): 6.0})
    assert sandwich_validate(quad, high).kind == "above-greatest"


def test_sandwich_preconditions():
    k33 = WeightedGraph.from_edges([(a, b, 1) for a in "abc" for b in "xyz"])
    with pytest.raises(PreconditionError, match="more than two"):
        sandwich_sample(k33, 0)
    p4 = WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("c", "d", 1)])
    with pytest.raises(PreconditionError, match="not complete multipartite"):
        sandwich_validate(p4, all_pairs_distance(p4))
    q = quadrilateral(1, 1, 1, 4)
    with pytest.raises(PreconditionError, match="not metrizable"):
        sandwich_sample(q, 0)
    asym = DistanceMatrix(("v1", "v2", "v3", "v4"), np.eye(4))
    with pytest.raises(PreconditionError):
        sandwich_validate(quadrilateral(1, 2, 3, 4), asym)


def test_sharpness_with_part_of_three():
    # K_{3,1}: part {v1, v2, v3}, unit weights
    g = WeightedGraph.from_edges([("v1", "p", 1), ("v2", "p", 1), ("v3", "p", 1)])
    rho, d = least_pseudometric(g), all_pairs_distance(g)
    f = DistanceMatrix(g.vertices, 1 - np.eye(4)).replace({("v1", "v3"): 0, ("v2", "v3"): 0})
    assert np.all(rho.entries <= f.entries) and np.all(f.entries <= d.entries)
    v = validate_membership(g, f)
    assert v is not None and v.kind == "triangle"


def test_sandwich_sample_members_and_seeds(quad):
    a, b = sandwich_sample(quad, 1), sandwich_sample(quad, 2)
    assert validate_membership(quad, a) is None and validate_membership(quad, b) is None
    assert not np.array_equal(a.entries, b.entries)
    assert np.array_equal(sandwich_sample(quad, 1).entries, a.entries)


def test_sandwich_sample_degenerate():
    g = quadrilateral(0, 1, 0, 1)
    assert np.array_equal(sandwich_sample(g, 5).entries, all_pairs_distance(g).entries)


def test_is_star():
    assert is_star(star(1, 2, 3))
    assert not is_star(quadrilateral(1, 2, 3, 4))
    assert not is_star(WeightedGraph.from_edges([("a", "b", 1), ("b", "c", 1), ("a", "c", 1)]))
    assert not is_star(WeightedGraph(("a",)))


def test_quad_report_examples():
    r = analyze_quadrilateral(1, 2, 3, 4)
    assert r.metrizable and r.ranges == {"v1-v3": (1.0, 3.0), "v2-v4": (3.0, 5.0)}
    assert not analyze_quadrilateral(1, 1, 1, 4).metrizable
    with pytest.raises(ValueError):
        analyze_quadrilateral(-1, 1, 1, 1)


@given(st.floats(0, 1e6, allow_nan=False))
def test_quad_equal_weights(t):
    r = analyze_quadrilateral(t, t, t, t)
    assert r.metrizable
    assert r.ranges == {"v1-v3": (0.0, 2 * t), "v2-v4": (0.0, 2 * t)}


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 20), min_size=4, max_size=4))
def test_quad_report_matches_graph(ws):
    r = analyze_quadrilateral(*ws)
    g = quadrilateral(*ws)
    assert r.metrizable == check_metrizable(g).metrizable
    if r.metrizable:
        lo, hi = r.ranges["v1-v3"]
        assert lo <= hi
        assert greatest_vs_least_interval(g, "v1", "v3") == (lo, hi)
        assert greatest_vs_least_interval(g, "v2", "v4") == r.ranges["v2-v4"]
