"""Group-family construction unit tests."""

import pytest

from rank1binary import families
from rank1binary.gf import prime_power
from rank1binary.perm import is_primitive, is_two_transitive


def psl2_order(q):
    d = 2 if q % 2 else 1
    return q * (q * q - 1) // d


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 25])
def test_psl2_orders(q):
    g = families.psl2(q)
    assert g.order() == psl2_order(q)
    assert g.degree == q + 1
    assert is_two_transitive(g)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_pgl2_orders(q):
    g = families.pgl2(q)
    assert g.order() == q * (q * q - 1)


def test_extension_orders():
    q = 9
    assert families.psigmal2(q).order() == 2 * psl2_order(q)
    assert families.pgammal2(q).order() == 4 * psl2_order(q)
    assert families.m10().order() == 720
    # the almost simple groups over q = 9 all contain the socle
    names = dict(families.almost_simple_psl2_groups(9))
    assert set(names) >= {"psl2:9", "pgl2:9"}
    for name, group in names.items():
        assert group.order() % psl2_order(9) == 0


def test_suzuki_and_unitary_orders():
    assert families.suzuki(8).action.group.order() == 29120
    assert families.psu3(3).action.group.order() == 6048
    assert families.psu3(4).action.group.order() == 62400


def test_suzuki_natural_degree():
    data = families.suzuki(8)
    assert data.action.degree == 65
    assert data.p2.order() == 64
    assert data.torus.order() == 7


@pytest.mark.parametrize("key,order", [
    ("borel", 78), ("d-minus", 12), ("d-plus", 14), ("a4", 12)])
def test_psl2_13_maximal_orders(key, order):
    g = families.psl2(13)
    m = families.maximal_subgroup_psl2(g, 13, key)
    assert m.order() == order


def test_klein_subgroups_are_klein():
    g = families.psl2(9)
    reps = families.klein_subgroups(g)
    assert reps
    for k in reps:
        els = k.element_list()
        assert len(els) == 4
        assert all((x * x).is_identity() for x in els)


def test_descriptor_roundtrip():
    for text in ("psl2:11/coset:a5", "pgl2:9", "psl2:9/ext:f1/coset:klein",
                 "sz:8/coset:torus-plus", "frob:7:2",
                 "psl2:49/coset:pgl-subfield:7"):
        desc = families.parse_descriptor(text)
        assert desc.text() == text
    with pytest.raises(ValueError):
        families.parse_descriptor("huh:3")
    with pytest.raises(ValueError):
        families.parse_descriptor("frob:7")
    with pytest.raises(ValueError):
        families.parse_descriptor("psl2:7/weird:1")


def test_descriptor_actions():
    a = families.descriptor_action(families.parse_descriptor("psl2:11/coset:a5"))
    assert a.degree == 11 and a.group.order() == 660
    assert is_primitive(a.group)
    b = families.descriptor_action(families.parse_descriptor("sz:8"))
    assert b.degree == 65
    c = families.descriptor_action(families.parse_descriptor("frob:7:2"))
    assert c.degree == 7 and c.group.order() == 21


def test_frobenius_metacyclic_validation():
    a = families.frobenius_metacyclic(13, 3)
    assert a.group.order() == 39
    with pytest.raises(ValueError):
        families.frobenius_metacyclic(7, 3)  # 3^3 != 1 mod 7


def test_zeta_of():
    assert families.zeta_of(families.psl2(13), 13) == 1
    assert families.zeta_of(families.pgl2(13), 13) == 2


def test_prime_power_guard():
    assert prime_power(12) is None
