from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from powergraphs.connectivity import (
    ResourceLimitError,
    all_minimum_cutsets,
    certify_minimal,
    max_disjoint_paths,
    min_vertex_cut_between,
    minimalize_cutset,
    minimum_cutset,
    vertex_connectivity,
)
from powergraphs.cyclic import (
    gamma_set,
    min_order_maximal_cyclic,
    maximal_cyclic_subgroups,
    nongenerators,
    sylow_complement_product,
)
from powergraphs.groups import (
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
)
from powergraphs.powergraph import PowerGraph, build_power_graph


def test_complete_graph_connectivity():
    graph = build_power_graph(make_cyclic(8))
    assert vertex_connectivity(graph) == 7
    with pytest.raises(ValueError):
        minimum_cutset(graph)


def test_quaternion_connectivity():
    graph = build_power_graph(make_generalized_quaternion(8))
    assert vertex_connectivity(graph) == 2


def test_cyclic_12_connectivity():
    graph = build_power_graph(make_cyclic(12))
    assert vertex_connectivity(graph) == 6


def test_minimum_cutset_report():
    graph = build_power_graph(make_cyclic(12))
    report = minimum_cutset(graph)
    assert report.kappa == 6 == len(report.cut)
    assert report.is_minimum and report.is_minimal
    assert graph.is_cut_set(report.cut)
    assert graph.is_separation(report.cut, report.witness)


def test_connectivity_rejects_tiny_graphs():
    graph = build_power_graph(make_cyclic(1))
    with pytest.raises(ValueError):
        vertex_connectivity(graph)


def test_min_cut_between_star_center():
    graph = build_power_graph(make_abelian([(2, 1), (2, 1)]))
    report = min_vertex_cut_between(graph, 1, 2)
    assert report.cut == {0}
    assert report.kappa == 1


def test_min_cut_between_quaternion_involution_free_pair():
    Q8 = make_generalized_quaternion(8)
    graph = build_power_graph(Q8)
    # two order-4 elements generating different subgroups
    a, b = 1, 4
    assert Q8.cyclic_closure(a) != Q8.cyclic_closure(b)
    report = min_vertex_cut_between(graph, a, b)
    assert report.kappa == 2


def test_min_cut_between_consistency():
    graph = build_power_graph(make_cyclic(20))
    report = min_vertex_cut_between(graph, 2, 5)
    comps = graph.components_after_removal(report.cut)
    side_with_2 = next(c for c in comps if 2 in c)
    assert 5 not in side_with_2


def test_min_cut_between_rejects_adjacent():
    graph = build_power_graph(make_cyclic(12))
    with pytest.raises(ValueError):
        min_vertex_cut_between(graph, 0, 1)
    with pytest.raises(ValueError):
        min_vertex_cut_between(graph, 3, 3)


def test_max_disjoint_paths_match_cut():
    graph = build_power_graph(make_cyclic(18))
    for s, t in ((2, 3), (6, 9), (2, 9)):
        if graph.adjacent(s, t):
            continue
        paths = max_disjoint_paths(graph, s, t)
        report = min_vertex_cut_between(graph, s, t)
        assert len(paths) == report.kappa
        inner_seen = set()
        for path in paths:
            assert path[0] == s and path[-1] == t
            for a, b in zip(path, path[1:]):
                assert graph.adjacent(a, b)
            inner = set(path[1:-1])
            assert not (inner & inner_seen)
            inner_seen |= inner


def test_all_minimum_cutsets_example_group():
    G = make_abelian([(2, 1), (2, 1), (3, 1)])
    graph = build_power_graph(G)
    kappa = vertex_connectivity(graph)
    assert kappa == 3
    sets = all_minimum_cutsets(graph, G.generator_classes, kappa)
    x = G.encode((0, 0, 1))
    expected = {frozenset(G.cyclic_closure(x))}
    for v in (G.encode((1, 0, 0)), G.encode((0, 1, 0)), G.encode((1, 1, 0))):
        vx = G.mul(v, x)
        expected.add(frozenset({0} | G.generator_class(vx)))
    assert set(sets) == expected


@pytest.mark.parametrize("n,count", [(12, 1), (18, 2), (15, 1)])
def test_all_minimum_cutsets_counts_cyclic(n, count):
    G = make_cyclic(n)
    graph = build_power_graph(G)
    kappa = vertex_connectivity(graph)
    sets = all_minimum_cutsets(graph, G.generator_classes, kappa)
    assert len(sets) == count
    for s in sets:
        assert len(s) == kappa and 0 in s
        assert graph.is_cut_set(s)


def test_all_minimum_cutsets_dihedral_identity_only():
    G = make_dihedral(6)
    graph = build_power_graph(G)
    sets = all_minimum_cutsets(graph, G.generator_classes, 1)
    assert sets == [frozenset({0})]


def test_all_minimum_cutsets_quaternion():
    G = make_generalized_quaternion(8)
    graph = build_power_graph(G)
    involution = next(g for g, o in enumerate(G.element_orders) if o == 2)
    sets = all_minimum_cutsets(graph, G.generator_classes, 2)
    assert sets == [frozenset({0, involution})]


def all_minimum_cutsets_by_subsets(graph, kappa):
    """Oracle: every size-kappa cut-set, by scanning all vertex subsets."""
    n = graph.vertex_count
    found = []
    for removed in combinations(range(n), kappa):
        if n - kappa >= 2 and len(graph.components_after_removal(removed)) >= 2:
            found.append(frozenset(removed))
    return sorted(found, key=sorted)


@pytest.mark.parametrize(
    "G",
    [
        make_cyclic(12),
        make_cyclic(15),
        make_cyclic(18),
        make_abelian([(2, 1), (2, 1), (3, 1)]),
        make_abelian([(2, 1), (2, 1)]),
        make_generalized_quaternion(16),
        make_dihedral(12),
    ],
    ids=lambda g: g.name,
)
def test_class_union_enumeration_matches_subset_oracle(G):
    graph = build_power_graph(G)
    kappa = vertex_connectivity(graph)
    via_classes = all_minimum_cutsets(graph, G.generator_classes, kappa)
    via_subsets = all_minimum_cutsets_by_subsets(graph, kappa)
    assert via_classes == via_subsets


def test_all_minimum_cutsets_resource_limit():
    G = make_abelian([(2, 1), (2, 1), (3, 1)])
    graph = build_power_graph(G)
    with pytest.raises(ResourceLimitError) as info:
        all_minimum_cutsets(graph, G.generator_classes, 3, max_combinations=3)
    assert isinstance(info.value.partial, tuple)


def test_all_minimum_cutsets_complete_graph_empty():
    G = make_cyclic(9)
    graph = build_power_graph(G)
    assert all_minimum_cutsets(graph, G.generator_classes, 8) == []


def test_certify_minimal_quotient_cut():
    G = make_abelian([(3, 1), (3, 1), (5, 1)])
    graph = build_power_graph(G)
    q = sylow_complement_product(G, 3)
    report = certify_minimal(graph, q)
    assert report.is_minimal
    assert graph.is_separation(report.cut, report.witness)


def test_certify_minimal_gamma_cut():
    G = make_abelian([(2, 1), (2, 1), (3, 1), (5, 1)])
    graph = build_power_graph(G)
    M = min_order_maximal_cyclic(G)
    report = certify_minimal(graph, gamma_set(G, M))
    assert report.is_minimal


def test_certify_not_minimal_with_cyclic_sylow():
    G = make_abelian([(2, 1), (2, 1), (3, 1)])
    graph = build_power_graph(G)
    M = next(m for m in maximal_cyclic_subgroups(G) if m.order == 6)
    report = certify_minimal(graph, nongenerators(G, M))
    assert report.is_minimal is False
    assert report.witness is None


def test_certify_minimal_rejects_non_cut():
    graph = build_power_graph(make_cyclic(12))
    with pytest.raises(ValueError):
        certify_minimal(graph, {3})


def test_minimalize_cutset():
    graph = build_power_graph(make_dihedral(6))
    cut = minimalize_cutset(graph, {0, 1, 3})
    assert cut == {0}
    assert graph.is_minimal_cut_set(cut)


def test_dihedral_connectivity_is_one():
    for order in range(6, 21, 2):
        graph = build_power_graph(make_dihedral(order))
        assert vertex_connectivity(graph) == 1


def random_graph(n, edge_bits):
    adj = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (edge_bits >> k) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return PowerGraph(vertex_count=n, adj=tuple(adj), group_name="random")


def brute_st_separator_size(graph, s, t):
    """Oracle: smallest vertex set (avoiding s, t) whose removal parts them."""
    n = graph.vertex_count
    others = [v for v in range(n) if v not in (s, t)]
    for k in range(len(others) + 1):
        for removed in combinations(others, k):
            comps = graph.components_after_removal(removed)
            side_s = next(c for c in comps if s in c)
            if t not in side_s:
                return k
    raise AssertionError("adjacent pair passed in")


@given(st.integers(4, 9), st.integers(0, 2**36 - 1))
@settings(max_examples=120, deadline=None)
def test_flow_cut_matches_subset_oracle_on_random_graphs(n, edge_bits):
    graph = random_graph(n, edge_bits)
    pair = next(
        ((s, t) for s in range(n) for t in range(s + 1, n) if not graph.adjacent(s, t)),
        None,
    )
    if pair is None:
        return
    s, t = pair
    report = min_vertex_cut_between(graph, s, t)
    paths = max_disjoint_paths(graph, s, t)
    want = brute_st_separator_size(graph, s, t)
    assert report.kappa == len(report.cut) == len(paths) == want
    comps = graph.components_after_removal(report.cut)
    assert t not in next(c for c in comps if s in c)


def kappa_by_subset_enumeration(graph):
    """Oracle: smallest removal size that disconnects, by exhaustive search."""
    n = graph.vertex_count
    if graph.is_complete:
        return n - 1
    for k in range(n - 1):
        for removed in combinations(range(n), k):
            if n - k >= 2 and len(graph.components_after_removal(removed)) >= 2:
                return k
    return n - 1


def test_flow_kappa_matches_subset_enumeration():
    from powergraphs.harness import corpus_groups

    for G in corpus_groups(16):
        graph = build_power_graph(G)
        assert vertex_connectivity(graph) == kappa_by_subset_enumeration(graph), G.name
