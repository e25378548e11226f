"""Structural invariants over the group corpus, plus randomized properties."""

import pytest
from hypothesis import given, settings, strategies as st

from powergraphs.connectivity import vertex_connectivity
from powergraphs.cyclic import (
    external_overlap,
    maximal_cyclic_subgroups,
    min_order_maximal_cyclic,
    nongenerators,
)
from powergraphs.groups import (
    AbelianSpec,
    direct_product,
    make_abelian,
    make_cyclic,
    make_generalized_quaternion,
)
from powergraphs.harness import corpus_groups, run_property_suite
from powergraphs.numtheory import euler_phi
from powergraphs.powergraph import build_power_graph

CORPUS = corpus_groups(60)
NILPOTENT_EXTRAS = [
    direct_product(make_generalized_quaternion(8), make_abelian([(3, 1), (3, 1)])),
    direct_product(make_generalized_quaternion(8), make_cyclic(9)),
]


small_factor = st.tuples(st.sampled_from([2, 3, 5, 7]), st.integers(1, 2))
small_spec = st.lists(small_factor, min_size=1, max_size=3).filter(
    lambda fs: AbelianSpec(tuple(fs)).order <= 64
)


@given(small_spec)
@settings(max_examples=60, deadline=None)
def test_abelian_spec_order_independent(factors):
    assert AbelianSpec(tuple(factors)) == AbelianSpec(tuple(reversed(factors)))


@given(small_spec)
@settings(max_examples=40, deadline=None)
def test_random_abelian_group_axioms(factors):
    G = make_abelian(factors)
    assert G.mul(0, 0) == 0
    for g in range(G.size):
        assert G.mul(g, G.inverse(g)) == 0
        assert G.size % G.element_order(g) == 0
    classes = G.generator_classes
    assert sum(len(c) for c in classes) == G.size
    for c in classes:
        assert len(c) == euler_phi(G.element_order(min(c)))


def _suite_over(suite_id, groups):
    summary = run_property_suite(suite_id, groups)
    failure = summary.first_failure()
    assert failure is None, f"{suite_id}: {failure.group_label}: {failure.detail}"
    return summary


def test_graph_basics_suite():
    _suite_over("graph-basics", CORPUS)


def test_nongenerator_cutset_suite():
    _suite_over("mtilde-cutset", CORPUS)


def test_external_overlap_cutset_suite():
    _suite_over("mbar-cutset", CORPUS)


def test_overlap_equals_nongenerators_suite():
    _suite_over("mbar-eq-mtilde", CORPUS)


def test_nongenerators_minimal_suite():
    _suite_over("mtilde-minimal", CORPUS)


def test_overlap_minimal_suite():
    summary = _suite_over("mbar-minimal", list(CORPUS) + NILPOTENT_EXTRAS)
    ran = [r for r in summary.results if r.status == "pass"]
    assert any(r.group_label.startswith("Q8x") for r in ran)


def test_size_compare_suite():
    summary = _suite_over("size-compare", list(CORPUS) + NILPOTENT_EXTRAS)
    assert sum(1 for r in summary.results if r.status == "pass") >= 20


def test_sylow_complement_minimal_suite():
    _suite_over("sylow-complement-minimal", list(CORPUS) + NILPOTENT_EXTRAS)


def test_cyclic_factorization_suite():
    _suite_over("cyclic-factorization", list(CORPUS) + NILPOTENT_EXTRAS)


def test_element_coverage_suite():
    _suite_over("element-coverage", CORPUS)


def test_witness_equivalence_suite():
    _suite_over("witness-equivalence", CORPUS)


def test_proper_pgroup_suite():
    summary = _suite_over("proper-pgroup", CORPUS)
    ran = [r for r in summary.results if r.status == "pass"]
    assert len(ran) >= 15  # plenty of p-groups of order <= 60 in the corpus


def test_class_union_suite():
    _suite_over("class-union", CORPUS)


def test_menger_suite():
    _suite_over("menger", CORPUS)


def test_cyclic_bound_suite():
    _suite_over("cyclic-bound", [make_cyclic(n) for n in range(2, 121)])


def test_nongenerator_floor_explicit():
    # the non-generator count of a minimum-order maximal cyclic subgroup is a
    # floor across all maximal cyclic subgroups
    for G in NILPOTENT_EXTRAS:
        best = min_order_maximal_cyclic(G)
        floor = len(nongenerators(G, best))
        for m in maximal_cyclic_subgroups(G):
            assert len(nongenerators(G, m)) >= floor


def test_overlap_within_nongenerators_everywhere():
    for G in CORPUS:
        if G.is_cyclic:
            continue
        for m in maximal_cyclic_subgroups(G):
            bar = external_overlap(G, m)
            tilde = nongenerators(G, m)
            assert bar <= tilde < m.elements


def test_cyclic_two_prime_cut_exceeds_nongenerators():
    # for cyclic groups on two odd primes, every cut-set is strictly larger
    # than the non-generator set; kappa gives the bound over all cut-sets
    for n in (45, 75, 225):
        G = make_cyclic(n)
        kappa = vertex_connectivity(build_power_graph(G))
        assert kappa > n - euler_phi(n)


@pytest.mark.parametrize("order", [8, 16, 32])
def test_quaternion_two_cut(order):
    G = make_generalized_quaternion(order)
    graph = build_power_graph(G)
    assert vertex_connectivity(graph) == 2
    involution = next(g for g, o in enumerate(G.element_orders) if o == 2)
    assert graph.is_cut_set({0, involution})
