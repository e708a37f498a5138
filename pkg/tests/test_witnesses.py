"""Witness, closure, and subset-certificate unit tests."""

import pytest
from hypothesis import given, settings, strategies as st

from rank1binary import families, witnesses
from rank1binary.action import natural_action
from rank1binary.perm import Permutation, cyclic_group, symmetric_group


def action_for(text):
    desc = families.parse_descriptor(text)
    return desc, families.descriptor_action(desc)


def test_subtuple_completeness_reflexive():
    _, a = action_for("psl2:7")
    assert witnesses.is_r_subtuple_complete((0, 1, 2), (0, 1, 2), 2, a)


@given(st.lists(st.integers(0, 7), min_size=2, max_size=4))
@settings(max_examples=30, deadline=None)
def test_conjugate_tuples_are_complete(points):
    _, a = action_for("psl2:7")
    g = a.group.generators[0]
    I = tuple(points)
    J = tuple(g.images[p] for p in I)
    for r in range(1, len(I) + 1):
        assert witnesses.is_r_subtuple_complete(I, J, r, a)


def test_verify_witness_rejects_conjugates():
    _, a = action_for("psl2:7")
    g = a.group.generators[0]
    I = (0, 1, 2)
    J = tuple(g.images[p] for p in I)
    with pytest.raises(ValueError):
        witnesses.verify_witness(a, I, J)


def test_two_closure_two_transitive_shortcut():
    _, a = action_for("psl2:7")
    res = witnesses.two_closure(a)
    assert res.decided and not res.is_closed
    assert res.closure.order() == 40320  # Sym(8)
    assert res.sigma is not None and res.sigma not in a.group


def test_two_closure_closed_cases():
    # the metacyclic Frobenius group of order 21 is exactly the
    # automorphism group of its own orbital tournament
    _, a = action_for("frob:7:2")
    res = witnesses.two_closure(a)
    assert res.decided and res.is_closed
    assert res.closure.order() == 21
    # a regular cyclic group is 2-closed
    reg = natural_action(cyclic_group(6))
    res = witnesses.two_closure(reg)
    assert res.decided and res.is_closed


def test_closure_idempotence_small():
    _, a = action_for("psl2:9/coset:s4")
    res = witnesses.two_closure(a)
    assert res.decided and not res.is_closed
    again = witnesses.two_closure(natural_action(res.closure))
    assert again.decided and again.is_closed
    assert again.closure.order() == res.closure.order()


def test_is_strongly_nonbinary_full_length():
    _, a = action_for("psl2:9/coset:s4")
    w = witnesses.is_strongly_nonbinary(a)
    assert w is not None
    assert len(w.I) == a.degree
    assert sorted(w.J) == list(range(a.degree))


def test_snb_exhaustive_agrees_on_tiny_action():
    reg = natural_action(cyclic_group(5))
    assert witnesses.is_strongly_nonbinary(reg) is None
    assert witnesses.strongly_nonbinary_exhaustive(reg) is None


def test_symmetric_group_has_no_witness():
    a = natural_action(symmetric_group(5))
    assert witnesses.exhaustive_witness_search(a, 5) is None


def test_verify_snb_pattern_rejects_group_elements():
    _, a = action_for("psl2:7")
    tau = a.group.generators[0]
    pattern = witnesses.SNBPattern(tau=tau, etas=(Permutation.identity(8),),
                                   gs=(tau,))
    with pytest.raises(ValueError):
        witnesses.verify_snb_pattern(pattern, a)


def test_build_klein_witness():
    desc, a = action_for("psl2:9/ext:f1/coset:klein")
    certs = []
    for k in witnesses._klein_candidates(a):
        cert = witnesses.build_klein_witness(a, k)
        if cert is not None:
            certs.append(cert)
    assert certs
    cert = certs[0]
    assert cert.kind == "strongly-non-binary"
    w = cert.evidence["witness_on_omega"]
    # re-verifiable from scratch
    witnesses.verify_witness(a, w.I, w.J)


def test_beautiful_whole_line():
    desc, a = action_for("psl2:8")
    cert = witnesses.find_beautiful_subset(a, desc=desc)
    assert cert is not None and cert.kind == "beautiful"
    assert len(cert.lam) == a.degree


def test_beautiful_rejects_symmetric_images():
    a = natural_action(symmetric_group(5))
    assert witnesses.find_beautiful_subset(a) is None


def test_frobenius_witnesses():
    for n, kappa in ((7, 2), (7, 4), (13, 3)):
        w = witnesses.frobenius_witness(n, kappa)
        assert w.I[:2] == (0, 1) and w.J[:2] == (0, 1)


def test_binary_up_to_verdicts():
    _, a = action_for("frob:7:2")
    kind, detail = witnesses.binary_up_to(a, 3)
    assert kind == "non-binary"
    reg = natural_action(cyclic_group(5))
    assert witnesses.binary_up_to(reg, 3) == ("binary-up-to", 3)


def test_lift_witness():
    _, a = action_for("psu3:3/coset:torus")
    cert = witnesses.nonbinary_certificate(a)
    assert cert is not None and cert["via"] == "suborbit-lift"
    w = cert["witness"]
    witnesses.verify_witness(a, w.I, w.J)


def test_nonbinary_certificate_none_is_honest():
    # Sym(5) naturally: the certificate pipeline finds nothing
    a = natural_action(symmetric_group(5))
    assert witnesses.nonbinary_certificate(a, max_length=5) is None
