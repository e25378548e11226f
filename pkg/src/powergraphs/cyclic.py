"""Maximal cyclic subgroups and the cut-set constructions built from them.

A maximal cyclic subgroup M of a non-cyclic group yields several canonical
vertex cuts of the power graph: its non-generators, its overlap with cyclic
subgroups generated outside it, the product of all Sylow subgroups except a
chosen one, and (in one specific abelian configuration) a layered set
assembled from exact-order shells and divisor subgroups of M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import iter_bits, mask_of
from .groups import Group, UnsupportedStructureError
from .numtheory import factorize, p_adic_valuation, solve_congruence
from .predictions import gamma_cardinality


class WitnessNotFoundError(LookupError):
    """No outside element generates the requested one; a Sylow subgroup is cyclic."""


@dataclass(frozen=True)
class CyclicSubgroup:
    """A cyclic subgroup as an element set with a designated generator."""

    elements: frozenset[int]
    generator: int
    order: int
    is_maximal: bool


def cyclic_subgroup(group: Group, g: int) -> CyclicSubgroup:
    """The cyclic subgroup generated by g, with its maximality decided."""
    mask = group.closure_mask(g)
    maximal = not any(
        other != mask and other & mask == mask for other in group.closure_masks
    )
    gen = min(h for h in iter_bits(mask) if group.closure_masks[h] == mask)
    return CyclicSubgroup(
        elements=frozenset(iter_bits(mask)),
        generator=gen,
        order=mask.bit_count(),
        is_maximal=maximal,
    )


def maximal_cyclic_subgroups(group: Group) -> tuple[CyclicSubgroup, ...]:
    """All maximal cyclic subgroups, one entry per distinct subgroup.

    Brute force by design: compute every cyclic closure, keep the ones maximal
    under set inclusion, dedupe by element set. Ordered by generator index.
    """
    first_gen: dict[int, int] = {}
    for g in range(group.size):
        first_gen.setdefault(group.closure_masks[g], g)
    distinct = list(first_gen)
    out = []
    for mask in distinct:
        if any(other != mask and other & mask == mask for other in distinct):
            continue
        gen = first_gen[mask]
        out.append(
            CyclicSubgroup(
                elements=frozenset(iter_bits(mask)),
                generator=gen,
                order=mask.bit_count(),
                is_maximal=True,
            )
        )
    return tuple(sorted(out, key=lambda m: m.generator))


def min_order_maximal_cyclic(group: Group) -> CyclicSubgroup:
    """A maximal cyclic subgroup of least order; ties by least generator index."""
    return min(maximal_cyclic_subgroups(group), key=lambda m: (m.order, m.generator))


def nongenerators(group: Group, subgroup: CyclicSubgroup) -> frozenset[int]:
    """Members of the subgroup that do not generate it; |M| - phi(|M|) many."""
    return subgroup.elements - group.generator_class(subgroup.generator)


def external_overlap(group: Group, subgroup: CyclicSubgroup) -> frozenset[int]:
    """Union of the subgroup's intersections with closures of outside elements."""
    if group.is_cyclic:
        raise ValueError("external overlap needs a non-cyclic group")
    m_mask = mask_of(subgroup.elements)
    acc = 0
    for y in range(group.size):
        if not (m_mask >> y) & 1:
            acc |= group.closure_masks[y] & m_mask
    return frozenset(iter_bits(acc))


def sylow_product(group: Group, primes: tuple[int, ...] | frozenset[int]) -> frozenset[int]:
    """Product of the Sylow subgroups at the given primes, as an element set.

    For a nilpotent group this is exactly the set of elements whose order has
    all its prime factors among ``primes``.
    """
    dec = group.sylow_decomposition()
    chosen = frozenset(primes)
    unknown = chosen - set(dec.primes)
    if unknown:
        raise ValueError(f"primes {sorted(unknown)} do not divide the group order")
    keep = []
    for g, order in enumerate(group.element_orders):
        if all(p in chosen for p, _ in factorize(order)):
            keep.append(g)
    return frozenset(keep)


def sylow_complement_product(group: Group, k_prime: int) -> frozenset[int]:
    """Product of all Sylow subgroups except the one at k_prime."""
    dec = group.sylow_decomposition()
    if k_prime not in dec.primes:
        raise ValueError(f"{k_prime} does not divide the group order")
    return sylow_product(group, tuple(p for p in dec.primes if p != k_prime))


def elements_of_exact_order(group: Group, subgroup: CyclicSubgroup, d: int) -> frozenset[int]:
    """Members of the cyclic subgroup of order exactly d (d must divide |M|)."""
    if d < 1 or subgroup.order % d != 0:
        raise ValueError(f"{d} does not divide the subgroup order {subgroup.order}")
    orders = group.element_orders
    return frozenset(g for g in subgroup.elements if orders[g] == d)


def elements_of_dividing_order(group: Group, subgroup: CyclicSubgroup, d: int) -> frozenset[int]:
    """The unique subgroup of order d inside the cyclic subgroup."""
    if d < 1 or subgroup.order % d != 0:
        raise ValueError(f"{d} does not divide the subgroup order {subgroup.order}")
    orders = group.element_orders
    return frozenset(g for g in subgroup.elements if d % orders[g] == 0)


def gamma_set(group: Group, subgroup: CyclicSubgroup) -> frozenset[int]:
    """The layered cut-set of a maximal cyclic subgroup M in the configuration
    |G| = 2^a * p2^n2 * p3^n3, 2-Sylow non-cyclic, odd Sylows cyclic.

    With |M| = 2^m * p2^n2 * p3^n3 the set is the union of the exact-order
    shells at 2^m * p2^n2 * p3^j for j = 1..n3 and the divisor subgroups of
    orders 2^m * p2^(n2-1) and 2^(m-1) * p2^n2. The construction validates
    its own cardinality against the closed formula and fails loudly on
    mismatch.
    """
    if not group.is_abelian:
        raise UnsupportedStructureError(f"{group.name}: layered cut-set needs an abelian group")
    dec = group.sylow_decomposition()
    if len(dec.primes) != 3 or dec.primes[0] != 2:
        raise UnsupportedStructureError(
            f"{group.name}: need exactly three primes with smallest prime 2"
        )
    p2, p3 = dec.primes[1], dec.primes[2]
    orders = group.element_orders
    cyclic_sylow = {
        p: max(orders[g] for g in dec.subgroup(p)) == len(dec.subgroup(p))
        for p in dec.primes
    }
    if cyclic_sylow[2] or not (cyclic_sylow[p2] and cyclic_sylow[p3]):
        raise UnsupportedStructureError(
            f"{group.name}: need a non-cyclic 2-Sylow subgroup and cyclic odd "
            "Sylow subgroups"
        )
    if not subgroup.is_maximal:
        raise UnsupportedStructureError("layered cut-set is defined for maximal cyclic subgroups")
    n2 = p_adic_valuation(group.size, p2)
    n3 = p_adic_valuation(group.size, p3)
    m = p_adic_valuation(subgroup.order, 2)
    if m < 1 or subgroup.order != 2**m * p2**n2 * p3**n3:
        raise UnsupportedStructureError(
            f"maximal cyclic subgroup order {subgroup.order} does not have the "
            f"expected shape 2^m * {p2}^{n2} * {p3}^{n3}"
        )
    acc: set[int] = set()
    for j in range(1, n3 + 1):
        acc |= elements_of_exact_order(group, subgroup, 2**m * p2**n2 * p3**j)
    acc |= elements_of_dividing_order(group, subgroup, 2**m * p2 ** (n2 - 1))
    acc |= elements_of_dividing_order(group, subgroup, 2 ** (m - 1) * p2**n2)
    expected = gamma_cardinality(m, p2, n2, p3, n3)
    if len(acc) != expected:
        raise RuntimeError(
            f"layered cut-set size self-check failed: built {len(acc)}, formula {expected}"
        )
    return frozenset(acc)


def external_generator_witness(
    group: Group, subgroup: CyclicSubgroup, alpha: int, *, strategy: str = "search"
) -> int:
    """An element outside the maximal cyclic subgroup whose closure contains alpha.

    alpha must be a non-generator of the subgroup. The default strategy scans
    all outside elements; "constructive" rebuilds the witness from Sylow
    components and a congruence solution, as an independent cross-check. A
    WitnessNotFoundError signals that some Sylow subgroup is cyclic.
    """
    if not group.is_abelian:
        raise ValueError("witness search is defined for abelian groups")
    if not subgroup.is_maximal:
        raise ValueError("witness search needs a maximal cyclic subgroup")
    if alpha not in nongenerators(group, subgroup):
        raise ValueError(f"element {alpha} is not a non-generator of the subgroup")
    if strategy == "search":
        beta = _witness_by_search(group, subgroup, alpha)
    elif strategy == "constructive":
        beta = _witness_constructive(group, subgroup, alpha)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if beta in subgroup.elements or alpha not in group.cyclic_closure(beta):
        raise RuntimeError(f"internal: produced an invalid witness {beta} for {alpha}")
    return beta


def _witness_by_search(group: Group, subgroup: CyclicSubgroup, alpha: int) -> int:
    bit = 1 << alpha
    for y in range(group.size):
        if y not in subgroup.elements and group.closure_masks[y] & bit:
            return y
    raise WitnessNotFoundError(
        f"no element outside the subgroup generates {alpha}; some Sylow "
        "subgroup of the group is cyclic"
    )


def _dlog(group: Group, base: int, target: int, order: int) -> int:
    x = 0
    for k in range(order):
        if x == target:
            return k
        x = group.mul(x, base)
    raise RuntimeError(f"internal: {target} not a power of {base}")


def _witness_constructive(group: Group, subgroup: CyclicSubgroup, alpha: int) -> int:
    outside = [y for y in range(group.size) if y not in subgroup.elements]
    if not outside:
        raise WitnessNotFoundError("the subgroup is the whole group; no outside element")
    if alpha == 0:
        return min(outside)
    dec = group.sylow_decomposition()
    gen_parts = dec.project(subgroup.generator)
    alpha_parts = dec.project(alpha)
    orders = group.element_orders
    exps = []
    for w, a in zip(gen_parts, alpha_parts):
        exps.append(_dlog(group, w, a, orders[w]))

    def order_p_outside(i: int, p: int) -> int:
        inside = subgroup.elements
        for u in sorted(dec.subgroups[i]):
            if orders[u] == p and u not in inside:
                return u
        raise WitnessNotFoundError(
            f"Sylow {p}-subgroup is cyclic: every order-{p} element lies in "
            "the subgroup"
        )

    for i, p in enumerate(dec.primes):
        if exps[i] == 0:
            u = order_p_outside(i, p)
            return group.mul(u, alpha)
    for i, p in enumerate(dec.primes):
        if exps[i] % p == 0 and exps[i] != 0:
            u = order_p_outside(i, p)
            beta = group.mul(u, group.power(gen_parts[i], exps[i] // p))
            for j in range(len(dec.primes)):
                if j == i:
                    continue
                k = solve_congruence(p, exps[j], orders[gen_parts[j]])
                beta = group.mul(beta, group.power(gen_parts[j], k))
            return beta
    raise RuntimeError("internal: non-generator with no reducible component")


def maximal_cyclic_orders(group: Group) -> tuple[int, ...]:
    """Sorted distinct orders of the maximal cyclic subgroups."""
    return tuple(sorted({m.order for m in maximal_cyclic_subgroups(group)}))
