from collections import Counter

import pytest

from powergraphs.groups import (
    AbelianSpec,
    UnsupportedStructureError,
    direct_product,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
)
from powergraphs.numtheory import euler_phi


def check_group_axioms(G):
    n = G.size
    assert all(G.mul(0, a) == a and G.mul(a, 0) == a for a in range(n))
    for a in range(n):
        inv = G.inverse(a)
        assert G.mul(a, inv) == 0 and G.mul(inv, a) == 0
    if n <= 24:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_abelian_spec_canonical_order():
    a = AbelianSpec(((3, 1), (2, 2), (2, 1)))
    b = AbelianSpec(((2, 1), (2, 2), (3, 1)))
    assert a == b
    assert a.factors == ((2, 1), (2, 2), (3, 1))
    assert a.order == 24
    assert a.label == "C2xC4xC3"


def test_abelian_spec_rejects_bad_factors():
    with pytest.raises(ValueError):
        AbelianSpec(())
    with pytest.raises(ValueError):
        AbelianSpec(((4, 1),))
    with pytest.raises(ValueError):
        AbelianSpec(((3, 0),))


def test_make_cyclic_trivial_and_basic():
    G1 = make_cyclic(1)
    assert G1.size == 1 and G1.element_orders == (1,)
    G6 = make_cyclic(6)
    assert max(G6.element_orders) == 6
    with pytest.raises(ValueError):
        make_cyclic(0)


def test_make_cyclic_residue_arithmetic():
    G = make_cyclic(12)
    for i in range(12):
        for j in range(12):
            assert G.mul(i, j) == (i + j) % 12


def test_cyclic_12_order_counts():
    G = make_cyclic(12)
    counts = Counter(G.element_orders)
    # one element per divisor class, phi(d) elements of order d
    assert counts == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}
    assert counts[12] == euler_phi(12)


def test_klein_four_orders():
    G = make_abelian([(2, 1), (2, 1)])
    assert sorted(G.element_orders) == [1, 2, 2, 2]
    check_group_axioms(G)


def test_example_group_of_order_12():
    G = make_abelian([(2, 1), (2, 1), (3, 1)])
    assert G.size == 12
    check_group_axioms(G)


def test_abelian_order_225_element_orders():
    G = make_abelian([(3, 1), (3, 1), (5, 2)])
    assert G.size == 225
    assert set(G.element_orders) == {1, 3, 5, 15, 25, 75}


def test_mixed_radix_component_order():
    G = make_abelian([(2, 2), (3, 1)])  # C4 x C3
    g = G.encode((1, 1))
    assert G.element_order(g) == 12


def test_quaternion_8():
    Q8 = make_generalized_quaternion(8)
    check_group_axioms(Q8)
    counts = Counter(Q8.element_orders)
    assert counts == {1: 1, 2: 1, 4: 6}


def test_quaternion_rejects_bad_orders():
    for bad in (4, 6, 12, 24):
        with pytest.raises(ValueError):
            make_generalized_quaternion(bad)


def test_quaternion_16_single_involution():
    Q16 = make_generalized_quaternion(16)
    assert sum(1 for o in Q16.element_orders if o == 2) == 1


def test_dihedral_involutions():
    D6 = make_dihedral(6)
    check_group_axioms(D6)
    assert sum(1 for o in D6.element_orders if o == 2) == 3
    D8 = make_dihedral(8)
    assert sum(1 for o in D8.element_orders if o == 2) == 5
    with pytest.raises(ValueError):
        make_dihedral(7)
    with pytest.raises(ValueError):
        make_dihedral(4)


def test_element_order_examples():
    G = make_cyclic(12)
    assert G.element_order(0) == 1
    assert G.element_order(1) == 12


def test_orders_divide_group_order():
    for G in (
        make_cyclic(24),
        make_abelian([(2, 2), (3, 1), (5, 1)]),
        make_generalized_quaternion(16),
        make_dihedral(14),
    ):
        for g in range(G.size):
            assert G.size % G.element_order(g) == 0


def test_cyclic_closure():
    G = make_cyclic(8)
    assert G.cyclic_closure(0) == {0}
    assert G.cyclic_closure(2) == {0, 2, 4, 6}
    assert len(G.cyclic_closure(2)) == G.element_order(2)


def test_generator_classes_partition():
    for G in (make_cyclic(12), make_abelian([(2, 1), (2, 1), (3, 1)]), make_dihedral(10)):
        classes = G.generator_classes
        assert sum(len(c) for c in classes) == G.size
        seen = set()
        for c in classes:
            assert not (c & seen)
            seen |= c
            g = min(c)
            assert len(c) == euler_phi(G.element_order(g))
    # C12: one class per divisor of 12
    assert len(make_cyclic(12).generator_classes) == 6


def test_generator_class_of_order_6_element():
    G = make_cyclic(6)
    assert G.generator_class(1) == {1, 5}
    assert len(G.generator_class(1)) == euler_phi(6)
    assert G.generator_class(0) == {0}


def test_sylow_decomposition_cyclic_12():
    G = make_cyclic(12)
    dec = G.sylow_decomposition()
    assert dec.primes == (2, 3)
    assert len(dec.subgroup(2)) == 4
    assert len(dec.subgroup(3)) == 3
    for g in range(12):
        comps = dec.project(g)
        acc = 0
        for c in comps:
            acc = G.mul(acc, c)
        assert acc == g
    assert dec.project(0) == (0, 0)


def test_sylow_decomposition_example_group():
    G = make_abelian([(2, 1), (2, 1), (3, 1)])
    dec = G.sylow_decomposition()
    assert sorted(G.element_order(g) for g in dec.subgroup(2)) == [1, 2, 2, 2]
    assert len(dec.subgroup(3)) == 3


def test_sylow_rejects_dihedral_6():
    D6 = make_dihedral(6)
    assert not D6.is_nilpotent
    with pytest.raises(UnsupportedStructureError):
        D6.sylow_decomposition()


def test_quaternion_is_nilpotent():
    assert make_generalized_quaternion(8).is_nilpotent


def test_direct_product_structure():
    G = direct_product(make_generalized_quaternion(8), make_cyclic(3))
    assert G.size == 24
    assert not G.is_abelian
    assert G.is_nilpotent
    assert max(G.element_orders) == 12


def test_is_cyclic_and_abelian_flags():
    assert make_cyclic(9).is_cyclic
    assert not make_abelian([(3, 1), (3, 1)]).is_cyclic
    assert make_abelian([(2, 1), (3, 1)]).is_cyclic  # C2 x C3 is C6
    assert not make_dihedral(8).is_abelian
    assert make_dihedral(8).is_nilpotent  # 2-group


def test_identity_row_and_column():
    for G in (make_dihedral(12), make_generalized_quaternion(16)):
        for a in range(G.size):
            assert G.mul(0, a) == a and G.mul(a, 0) == a
