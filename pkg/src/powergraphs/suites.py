"""Property suites: structural invariants checked per group over a corpus.

Each suite is a callable taking a Group and returning None when the suite
does not apply to that group, or (passed, detail) where detail describes the
first counterexample on failure. Suites are registered in SUITES by id.
"""

from __future__ import annotations

import random
from typing import Callable

from .connectivity import (
    max_disjoint_paths,
    min_vertex_cut_between,
    minimalize_cutset,
    vertex_connectivity,
)
from .cyclic import (
    WitnessNotFoundError,
    external_generator_witness,
    external_overlap,
    maximal_cyclic_subgroups,
    min_order_maximal_cyclic,
    nongenerators,
    sylow_complement_product,
)
from .groups import Group
from .numtheory import euler_phi, factorize, prime_power_base
from .powergraph import Separation, build_power_graph, proper_power_graph_connected
from .predictions import kappa_cyclic_lower_bound

_CLASS_UNION_VERTEX_LIMIT = 40
_MENGER_PAIRS_PER_GROUP = 12

CheckResult = tuple[bool, str] | None
SuiteCheck = Callable[[Group], CheckResult]

SUITES: dict[str, SuiteCheck] = {}


def _suite(suite_id: str) -> Callable[[SuiteCheck], SuiteCheck]:
    def register(fn: SuiteCheck) -> SuiteCheck:
        SUITES[suite_id] = fn
        return fn

    return register


def _noncyclic_sylow_primes(group: Group) -> tuple[int, ...]:
    dec = group.sylow_decomposition()
    orders = group.element_orders
    return tuple(
        p
        for p, members in zip(dec.primes, dec.subgroups)
        if max(orders[g] for g in members) != len(members)
    )


@_suite("graph-basics")
def check_graph_basics(group: Group) -> CheckResult:
    """Connectedness, universal identity, symmetry, completeness criterion."""
    if group.size < 2:
        return None
    graph = build_power_graph(group)
    n = graph.vertex_count
    if not graph.is_connected():
        return False, "power graph is disconnected"
    if graph.degree(0) != n - 1:
        return False, "identity is not adjacent to every other vertex"
    for v in range(n):
        if (graph.adj[v] >> v) & 1:
            return False, f"self-loop at {v}"
        for u in range(v):
            if graph.adjacent(u, v) != graph.adjacent(v, u):
                return False, f"asymmetric adjacency at ({u}, {v})"
    expect_complete = group.is_cyclic and prime_power_base(group.size) is not None
    if graph.is_complete != expect_complete:
        return False, (
            f"complete={graph.is_complete} but cyclic-prime-power={expect_complete}"
        )
    return True, ""


@_suite("mtilde-cutset")
def check_nongenerators_cut(group: Group) -> CheckResult:
    """Non-generators of every maximal cyclic subgroup cut the power graph,
    with (outside, generators) as a witnessing separation."""
    if group.is_cyclic:
        return None
    graph = build_power_graph(group)
    everything = frozenset(range(group.size))
    for m in maximal_cyclic_subgroups(group):
        tilde = nongenerators(group, m)
        if len(tilde) != m.order - euler_phi(m.order):
            return False, f"{m.generator}: wrong non-generator count"
        if not graph.is_cut_set(tilde):
            return False, f"non-generators of <{m.generator}> are not a cut-set"
        sep = Separation(everything - m.elements, m.elements - tilde)
        if not graph.is_separation(tilde, sep):
            return False, f"(outside, generators) fails as a separation for <{m.generator}>"
    return True, ""


@_suite("mbar-cutset")
def check_external_overlap_cut(group: Group) -> CheckResult:
    """The external overlap of every maximal cyclic subgroup is a cut-set
    sitting inside the non-generators, which are a proper subset."""
    if group.is_cyclic:
        return None
    graph = build_power_graph(group)
    for m in maximal_cyclic_subgroups(group):
        bar = external_overlap(group, m)
        tilde = nongenerators(group, m)
        if not (bar <= tilde and tilde < m.elements):
            return False, f"<{m.generator}>: overlap/non-generator inclusions fail"
        if not graph.is_cut_set(bar):
            return False, f"external overlap of <{m.generator}> is not a cut-set"
    return True, ""


@_suite("mbar-eq-mtilde")
def check_overlap_equals_nongenerators(group: Group) -> CheckResult:
    """For abelian groups: overlap equals the non-generators exactly when
    every Sylow subgroup is non-cyclic."""
    if group.is_cyclic or not group.is_abelian:
        return None
    dec = group.sylow_decomposition()
    expected = len(_noncyclic_sylow_primes(group)) == len(dec.primes)
    for m in maximal_cyclic_subgroups(group):
        equal = external_overlap(group, m) == nongenerators(group, m)
        if equal != expected:
            return False, (
                f"<{m.generator}>: overlap==nongenerators is {equal}, "
                f"all-Sylow-non-cyclic is {expected}"
            )
    return True, ""


@_suite("mtilde-minimal")
def check_nongenerators_minimal(group: Group) -> CheckResult:
    """For abelian groups with >= 2 prime divisors: the non-generator cut-set
    is minimal exactly when every Sylow subgroup is non-cyclic."""
    if group.is_cyclic or not group.is_abelian:
        return None
    dec = group.sylow_decomposition()
    if len(dec.primes) < 2:
        return None
    graph = build_power_graph(group)
    expected = len(_noncyclic_sylow_primes(group)) == len(dec.primes)
    for m in maximal_cyclic_subgroups(group):
        tilde = nongenerators(group, m)
        if not graph.is_cut_set(tilde):
            return False, f"non-generators of <{m.generator}> are not a cut-set"
        minimal = graph.is_minimal_cut_set(tilde)
        if minimal != expected:
            return False, (
                f"<{m.generator}>: minimal={minimal}, all-Sylow-non-cyclic={expected}"
            )
    return True, ""


@_suite("mbar-minimal")
def check_overlap_minimal(group: Group) -> CheckResult:
    """For nilpotent groups with >= 2 non-cyclic Sylow subgroups: the overlap
    cut-set is minimal, the graph minus a maximal cyclic subgroup stays
    connected, and removing the non-generators leaves exactly two components."""
    if group.is_cyclic or not group.is_nilpotent:
        return None
    if len(_noncyclic_sylow_primes(group)) < 2:
        return None
    graph = build_power_graph(group)
    everything = frozenset(range(group.size))
    for m in maximal_cyclic_subgroups(group):
        comps = graph.components_after_removal(m.elements)
        if len(comps) != 1:
            return False, f"graph minus <{m.generator}> is disconnected"
        bar = external_overlap(group, m)
        if not graph.is_minimal_cut_set(bar):
            return False, f"external overlap of <{m.generator}> is not minimal"
        tilde = nongenerators(group, m)
        two = graph.components_after_removal(tilde)
        want = {everything - m.elements, m.elements - tilde}
        if set(two) != want:
            return False, (
                f"removing non-generators of <{m.generator}> does not leave "
                "exactly (outside, generators)"
            )
    return True, ""


@_suite("size-compare")
def check_nongenerator_size_minimum(group: Group) -> CheckResult:
    """For nilpotent groups: a minimum-order maximal cyclic subgroup has the
    fewest non-generators."""
    if group.is_cyclic or not group.is_nilpotent:
        return None
    best = min_order_maximal_cyclic(group)
    floor = len(nongenerators(group, best))
    for m in maximal_cyclic_subgroups(group):
        if len(nongenerators(group, m)) < floor:
            return False, f"<{m.generator}> has fewer non-generators than the minimum"
    return True, ""


@_suite("sylow-complement-minimal")
def check_sylow_complement_minimal(group: Group) -> CheckResult:
    """For nilpotent groups with >= 2 prime divisors: the product of all
    Sylow subgroups except a non-cyclic, non-quaternion one is a minimal
    cut-set."""
    if group.is_cyclic or not group.is_nilpotent:
        return None
    dec = group.sylow_decomposition()
    if len(dec.primes) < 2:
        return None
    orders = group.element_orders
    checked = False
    graph = build_power_graph(group)
    for p, members in zip(dec.primes, dec.subgroups):
        if max(orders[g] for g in members) == len(members):
            continue  # cyclic Sylow subgroup
        if p == 2 and sum(1 for g in members if orders[g] == 2) == 1:
            continue  # generalized quaternion
        complement = sylow_complement_product(group, p)
        if not graph.is_cut_set(complement):
            return False, f"Sylow complement at {p} is not a cut-set"
        if not graph.is_minimal_cut_set(complement):
            return False, f"Sylow complement at {p} is not a minimal cut-set"
        checked = True
    if not checked:
        return None
    return True, ""


@_suite("cyclic-factorization")
def check_maximal_cyclic_product_form(group: Group) -> CheckResult:
    """For nilpotent groups: every maximal cyclic subgroup is the product of
    maximal cyclic subgroups of the Sylow subgroups."""
    if group.is_cyclic or not group.is_nilpotent:
        return None
    dec = group.sylow_decomposition()
    orders = group.element_orders
    for m in maximal_cyclic_subgroups(group):
        total = 1
        for p, members in zip(dec.primes, dec.subgroups):
            part = m.elements & members
            total *= len(part)
            gen = max(part, key=lambda g: orders[g])
            if group.cyclic_closure(gen) != part:
                return False, f"<{m.generator}>: Sylow {p} part is not cyclic"
            grown = any(
                part < group.cyclic_closure(h) for h in members if h not in part
            )
            if grown:
                return False, (
                    f"<{m.generator}>: Sylow {p} part is not maximal in its Sylow subgroup"
                )
        if total != m.order:
            return False, f"<{m.generator}>: Sylow parts do not multiply to the order"
    return True, ""


@_suite("element-coverage")
def check_element_coverage(group: Group) -> CheckResult:
    """Every element lies in a maximal cyclic subgroup; with every Sylow
    subgroup non-cyclic (abelian case), elements generating a non-maximal
    subgroup lie in at least two."""
    maximal = maximal_cyclic_subgroups(group)
    for g in range(group.size):
        containing = [m for m in maximal if g in m.elements]
        if not containing:
            return False, f"element {g} lies in no maximal cyclic subgroup"
    if group.is_abelian and not group.is_cyclic:
        dec = group.sylow_decomposition()
        if len(_noncyclic_sylow_primes(group)) == len(dec.primes):
            maximal_masks = {frozenset(m.elements) for m in maximal}
            for g in range(group.size):
                if group.cyclic_closure(g) in maximal_masks:
                    continue
                hits = sum(1 for m in maximal if g in m.elements)
                if hits < 2:
                    return False, f"non-maximal generator {g} lies in only {hits} subgroup"
    return True, ""


@_suite("witness-equivalence")
def check_witness_equivalence(group: Group) -> CheckResult:
    """For abelian groups: every non-generator of every maximal cyclic
    subgroup has an outside generator exactly when all Sylow subgroups are
    non-cyclic; where witnesses exist, the search and constructive strategies
    both produce valid ones."""
    if group.is_cyclic or not group.is_abelian:
        return None
    dec = group.sylow_decomposition()
    expected = len(_noncyclic_sylow_primes(group)) == len(dec.primes)
    for m in maximal_cyclic_subgroups(group):
        missing = None
        for alpha in sorted(nongenerators(group, m)):
            try:
                external_generator_witness(group, m, alpha, strategy="search")
            except WitnessNotFoundError:
                missing = alpha
                break
        if (missing is None) != expected:
            return False, (
                f"<{m.generator}>: witness coverage {missing is None}, "
                f"all-Sylow-non-cyclic {expected}"
            )
        if expected:
            for alpha in sorted(nongenerators(group, m)):
                external_generator_witness(group, m, alpha, strategy="constructive")
    return True, ""


@_suite("proper-pgroup")
def check_proper_graph_p_group(group: Group) -> CheckResult:
    """For p-groups: the identity-deleted power graph is connected exactly
    for cyclic and generalized quaternion groups."""
    if group.size < 3 or prime_power_base(group.size) is None:
        return None
    orders = group.element_orders
    involutions = sum(1 for o in orders if o == 2)
    quaternion = (
        group.size % 2 == 0 and not group.is_cyclic and involutions == 1
    )
    expected = group.is_cyclic or quaternion
    connected = proper_power_graph_connected(group)
    if connected != expected:
        return False, f"proper graph connected={connected}, expected {expected}"
    return True, ""


@_suite("class-union")
def check_minimal_cutsets_are_class_unions(group: Group) -> CheckResult:
    """Minimal cut-sets found by pure graph search contain the identity and
    are unions of generator classes.

    Cut-sets come from greedily minimalizing vertex neighborhoods and
    pairwise minimum cuts, with no use of the class structure, so this
    validates the class-quotient enumeration independently.
    """
    if group.size > _CLASS_UNION_VERTEX_LIMIT:
        return None
    graph = build_power_graph(group)
    if graph.is_complete:
        return None
    n = graph.vertex_count
    seeds = []
    for v in range(n):
        nb = graph.neighbors(v)
        if len(nb) < n - 1 and graph.is_cut_set(nb):
            seeds.append(nb)
    rng = random.Random(f"class-union:{group.name}")
    non_adjacent = [
        (s, t) for s in range(n) for t in range(s + 1, n) if not graph.adjacent(s, t)
    ]
    for s, t in rng.sample(non_adjacent, min(10, len(non_adjacent))):
        seeds.append(min_vertex_cut_between(graph, s, t).cut)
    minimal_sets = {minimalize_cutset(graph, seed) for seed in seeds}
    for cut in sorted(minimal_sets, key=sorted):
        if not graph.is_minimal_cut_set(cut):
            return False, f"minimalization produced a non-minimal cut {sorted(cut)}"
        if 0 not in cut:
            return False, f"minimal cut-set {sorted(cut)} misses the identity"
        for w in cut:
            if not group.generator_class(w) <= cut:
                return False, (
                    f"minimal cut-set {sorted(cut)} splits the class of {w}"
                )
    return True, ""


@_suite("menger")
def check_menger_consistency(group: Group) -> CheckResult:
    """Sampled non-adjacent pairs: max disjoint paths = min cut size, the cut
    separates the pair, and the paths are internally disjoint."""
    if group.size < 2:
        return None
    graph = build_power_graph(group)
    if graph.is_complete:
        return None
    n = graph.vertex_count
    non_adjacent = [
        (s, t) for s in range(n) for t in range(s + 1, n) if not graph.adjacent(s, t)
    ]
    rng = random.Random(f"menger:{group.name}")
    for s, t in rng.sample(non_adjacent, min(_MENGER_PAIRS_PER_GROUP, len(non_adjacent))):
        report = min_vertex_cut_between(graph, s, t)
        paths = max_disjoint_paths(graph, s, t)
        if len(paths) != report.kappa or len(report.cut) != report.kappa:
            return False, f"pair ({s},{t}): path count and cut size disagree"
        if s in report.cut or t in report.cut:
            return False, f"pair ({s},{t}): cut touches an endpoint"
        seen: set[int] = set()
        for path in paths:
            if path[0] != s or path[-1] != t:
                return False, f"pair ({s},{t}): path endpoints wrong"
            inner = set(path[1:-1])
            if inner & seen:
                return False, f"pair ({s},{t}): paths share an internal vertex"
            seen |= inner
            if any(not graph.adjacent(a, b) for a, b in zip(path, path[1:])):
                return False, f"pair ({s},{t}): path uses a non-edge"
        comps = graph.components_after_removal(report.cut)
        side_s = next(c for c in comps if s in c)
        if t in side_s:
            return False, f"pair ({s},{t}): removing the cut does not separate them"
    return True, ""


@_suite("cyclic-bound")
def check_cyclic_lower_bound(group: Group) -> CheckResult:
    """For cyclic groups: connectivity is at least phi(n)+1, with equality
    exactly for primes and products of two distinct primes."""
    if not group.is_cyclic or group.size < 2:
        return None
    if len(factorize(group.size)) == 1:
        return None  # complete graph; bound is about cut-sets
    bound, equality = kappa_cyclic_lower_bound(group.size)
    kappa = vertex_connectivity(build_power_graph(group))
    if kappa < bound:
        return False, f"kappa {kappa} below the bound {bound}"
    if (kappa == bound) != equality:
        return False, f"equality case wrong: kappa={kappa}, bound={bound}"
    return True, ""
