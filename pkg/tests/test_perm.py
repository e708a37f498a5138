"""Permutation and stabilizer-chain unit tests."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rank1binary.perm import (
    Permutation, PermutationGroup, alternating_group, composition_factor_orders,
    cyclic_group, factorial, is_primitive, is_two_transitive, orbits_of,
    pointwise_stabilizer, setwise_stabilizer, stabilizer_of_point,
    symmetric_group, transporter,
)

perms8 = st.permutations(list(range(8))).map(lambda im: Permutation(list(im)))


def test_identity_and_inverse():
    e = Permutation.identity(5)
    assert e.is_identity() and e.degree == 5
    p = Permutation([1, 2, 0, 4, 3])
    assert (p * p.inverse()).is_identity()
    assert p.order() == 6


def test_right_action_composition():
    a = Permutation([1, 0, 2])
    b = Permutation([0, 2, 1])
    ab = a * b
    for i in range(3):
        assert ab.images[i] == b.images[a.images[i]]


def test_cycles_roundtrip():
    p = Permutation.from_cycles(6, [(0, 1), (2, 3, 4)])
    assert p.cycles() == [(0, 1), (2, 3, 4)]
    assert p.images[5] == 5


@given(perms8, perms8, perms8)
@settings(max_examples=50, deadline=None)
def test_associativity_and_inverse(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * b).inverse() == b.inverse() * a.inverse()


@given(perms8)
@settings(max_examples=50, deadline=None)
def test_power_matches_order(p):
    assert (p ** p.order()).is_identity()
    assert p ** -1 == p.inverse()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_symmetric_group_order(n):
    g = symmetric_group(n)
    assert g.order() == factorial(n)
    assert len(g.element_list()) == g.order()


def test_alternating_and_cyclic():
    assert alternating_group(5).order() == 60
    assert cyclic_group(12).order() == 12
    assert is_two_transitive(symmetric_group(3))
    assert not is_two_transitive(cyclic_group(3))


def test_chain_order_equals_enumeration():
    # the Frobenius group <(0..6), (1 2 4)(3 6 5)> of order 21
    gens = [Permutation.from_cycles(7, [tuple(range(7))]),
            Permutation.from_cycles(7, [(1, 2, 4), (3, 6, 5)])]
    g = PermutationGroup(gens)
    assert g.order() == 21
    assert len(set(g.element_list())) == 21
    s6 = symmetric_group(6)
    assert len(set(s6.element_list())) == s6.order() == 720


def test_transporter_finds_and_refuses():
    g = symmetric_group(5)
    t = transporter((0, 1, 2), (4, 3, 2), g)
    assert t is not None
    assert tuple(t.images[p] for p in (0, 1, 2)) == (4, 3, 2)
    a4 = alternating_group(4)
    # an odd permutation is needed to send (0,1,2,3) to (1,0,2,3)
    assert transporter((0, 1, 2, 3), (1, 0, 2, 3), a4) is None


def test_setwise_and_pointwise_stabilizers():
    g = symmetric_group(5)
    s = setwise_stabilizer([0, 1], g)
    assert s.order() == 2 * 6  # Sym({0,1}) x Sym({2,3,4})
    p = pointwise_stabilizer([0, 1], g)
    assert p.order() == 6
    brute = [x for x in g.elements() if {x.images[0], x.images[1]} == {0, 1}]
    assert len(brute) == s.order()


def test_primitivity():
    assert is_primitive(symmetric_group(4))
    assert not is_primitive(cyclic_group(4))  # blocks {0,2},{1,3}
    d4 = PermutationGroup([Permutation.from_cycles(4, [(0, 1, 2, 3)]),
                           Permutation.from_cycles(4, [(0, 2)])])
    assert not is_primitive(d4)


def test_stabilizer_and_orbits():
    g = alternating_group(5)
    stab = stabilizer_of_point(g, 0)
    assert stab.order() == 12
    orbs = orbits_of(stab.generators, 5)
    assert sorted(len(o) for o in orbs) == [1, 4]


def test_composition_factors():
    assert sorted(composition_factor_orders(symmetric_group(4))) == [
        (2, True), (2, True), (2, True), (3, True)]
    assert (60, False) in composition_factor_orders(alternating_group(5))
