"""Acceptance suite: one test, and hence one pass/fail line, per criterion.

All tolerances are exact integers; no criterion accepts an approximate
match.  The corpus-wide criteria reuse one shared corpus construction.
"""

import pytest

from rank1binary import corpus, families, tables, witnesses
from rank1binary.action import natural_action
from rank1binary.perm import factorial


@pytest.fixture(scope="module")
def full_corpus():
    return corpus.psl2_corpus()


def _psl2_order(q):
    return q * (q * q - 1) // (2 if q % 2 else 1)


def test_criterion_1_group_orders():
    """Constructed group orders match closed formulas; chains match enumeration."""
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 25):
        assert families.psl2(q).order() == _psl2_order(q)
    assert families.suzuki(8).action.group.order() == 29120
    assert families.psu3(3).action.group.order() == 6048
    assert families.psu3(4).action.group.order() == 62400
    small = [families.psl2(q) for q in (4, 5, 7, 8, 9, 11, 13, 16, 25)]
    small += [families.pgl2(q) for q in (5, 7, 9, 11, 13)]
    small += [families.pgammal2(9), families.m10(),
              families.frobenius_metacyclic(7, 2).group,
              families.frobenius_metacyclic(13, 3).group,
              families.psu3(3).action.group]
    for g in small:
        if g.order() <= 10 ** 4:
            assert len(set(g.element_list())) == g.order()


def test_criterion_2_numeric_tables():
    """Three-way fixed-count checks at the required q values, exactly."""
    for q in (11, 13, 17, 19, 25):
        out = tables.verify_table_numeric("T1", q)
        assert out["ok"], "T1 fails at q=%d" % q
    # the quoted closed-form example: q = 13, torus-normalizer row
    out13 = tables.verify_table_numeric("T1", 13)
    d_minus = [r for r in out13["rows"] if r["row"] == "d-minus"]
    assert d_minus and all(
        r["columns"]["involution"]["direct"]["fix"] == 7
        and r["columns"]["klein"]["closed"]["fix"] == 3 for r in d_minus)
    for q in (8, 16):
        assert tables.verify_table_numeric("T2", q)["ok"], "T2 fails at q=%d" % q
    for q in (9, 25):
        out = tables.verify_table_numeric("T3", q)
        assert out["ok"], "T3 fails at q=%d" % q
    # field involutions fix a subline of size q on the split-torus row and
    # nothing on the nonsplit row
    out9 = tables.verify_table_numeric("T3", 9)
    fixes = {r["row"]: r["columns"]["field"]["direct"]["fix"]
             for r in out9["rows"] if "field" in r["columns"]}
    assert fixes["d-minus"] == 9 and fixes["d-plus"] == 0
    out4 = tables.verify_table_numeric("T4", 8)
    assert out4["ok"]
    t4_fixes = sorted(r["columns"]["involution"]["direct"]["fix"]
                      for r in out4["rows"])
    assert t4_fixes == [16, 16, 32]


def test_criterion_3_symbolic_tables():
    """Every row/case of all five tables certifies as an exact identity."""
    for tid in ("T1", "T2", "T3", "T4", "T5"):
        out = tables.verify_table_symbolic(tid)
        bad = [c for c in out["certificates"] if not c["ok"]]
        assert out["ok"], "symbolic failures in %s: %s" % (tid, bad)
        assert out["certificates"], "%s produced no certificates" % tid


def test_criterion_4_theorem_at_desk_scale(full_corpus):
    """Every primitive corpus action certifies non-binary, except the two
    exceptional symmetric-group actions, where exhaustive search finds
    nothing up to full length."""
    fails = []
    exceptional = []
    for entry in full_corpus:
        a = entry.action
        if corpus.is_exceptional(entry):
            exceptional.append(entry.name)
            w = witnesses.exhaustive_witness_search(a, a.degree)
            assert w is None, "unexpected witness for %s" % entry.name
            continue
        cert = witnesses.nonbinary_certificate(a)
        if cert is None:
            fails.append(entry.name)
        elif "witness" in cert:
            w = cert["witness"]
            witnesses.verify_witness(a, w.I, w.J)
    assert not fails, "no certificate for: %s" % fails
    assert len(exceptional) == 2


def test_criterion_5_two_closure_equivalence(full_corpus):
    """Closure-based strong non-binarity agrees with the definition on the
    small actions, and closure is idempotent on every selected action."""
    selected = [e.action for e in full_corpus if e.action.degree <= 60]
    assert len(selected) >= 30
    checked_small = 0
    for a in selected:
        res = witnesses.two_closure(a)
        assert res.decided
        again = witnesses.two_closure(natural_action(res.closure))
        assert again.decided and again.is_closed
        assert again.closure.order() == res.closure.order()
        if a.degree <= 8:
            via_closure = witnesses.is_strongly_nonbinary(a)
            via_definition = witnesses.strongly_nonbinary_exhaustive(a)
            assert (via_closure is None) == (via_definition is None)
            checked_small += 1
    assert checked_small >= 1


def test_criterion_6_suzuki_constructions():
    """K(q) normalizes P2(q); the three torus-normalizer actions of Sz(8)
    carry six-point Klein-pattern certificates; the subfield-orbit
    beautiful machinery yields a size-q0 certificate where applicable."""
    data = families.suzuki(8)
    p2 = data.p2
    for t in data.torus.element_list():
        ti = t.inverse()
        for p in p2.generators:
            assert ti * p * t in p2
    for key in ("dihedral", "torus-plus", "torus-minus"):
        desc = families.parse_descriptor("sz:8/coset:%s" % key)
        a = families.descriptor_action(desc)
        certs = [witnesses.build_klein_witness(a, k)
                 for k in witnesses._klein_candidates(a)]
        good = [c for c in certs if c is not None]
        assert good, "no Klein certificate on sz:8/coset:%s" % key
        assert any(len(c.lam) == 6 and c.evidence["variant"] == "six-point"
                   for c in good)
        for c in good:
            w = c.evidence["witness_on_omega"]
            witnesses.verify_witness(a, w.I, w.J)
    # no admissible Suzuki subfield at q = 8, so the size-q0 orbit
    # machinery is exercised on a subfield coset action instead
    desc = families.parse_descriptor("psl2:49/coset:pgl-subfield:7")
    a = families.descriptor_action(desc)
    cert = witnesses.find_beautiful_subset(a, desc=desc)
    assert cert is not None and len(cert.lam) == 7


def test_criterion_7_beautiful_subsets():
    """The three named beautiful-subset certificates, with exact sizes."""
    desc = families.parse_descriptor("psl2:8")
    a = families.descriptor_action(desc)
    cert = witnesses.find_beautiful_subset(a, desc=desc)
    assert cert is not None and len(cert.lam) == a.degree == 9

    desc = families.parse_descriptor("psl2:16/coset:d-minus")
    a = families.descriptor_action(desc)
    cert = witnesses.find_beautiful_subset(a, desc=desc)
    assert cert is not None and len(cert.lam) == 16

    desc = families.parse_descriptor("psl2:49/coset:pgl-subfield:7")
    a = families.descriptor_action(desc)
    cert = witnesses.find_beautiful_subset(a, desc=desc)
    assert cert is not None and len(cert.lam) == 7
    assert cert.evidence["induced_order"] not in (
        factorial(7), factorial(7) // 2)


def test_criterion_8_metacyclic_and_unitary():
    """Frobenius witnesses, unitary certificates, and the divisibility
    contradiction pattern on the degree-63 action."""
    for n, kappa in ((7, 2), (7, 4), (13, 3)):
        w = witnesses.frobenius_witness(n, kappa)
        a = families.frobenius_metacyclic(n, kappa)
        witnesses.verify_witness(a, w.I, w.J)
    for q in (3, 4):
        for key in ("", "nonisotropic", "frames", "torus"):
            text = "psu3:%d" % q + ("/coset:%s" % key if key else "")
            desc = families.parse_descriptor(text)
            a = families.descriptor_action(desc)
            cert = witnesses.nonbinary_certificate(a, desc=desc)
            assert cert is not None, "no certificate for %s" % text
    desc = families.parse_descriptor("psu3:3/coset:frames")
    a = families.descriptor_action(desc)
    rep = witnesses.suborbit_divisibility_report(a, 16)
    assert a.degree == 63
    assert not rep["d_divides_degree_minus_one"]
    # the contradiction pattern: any suborbit escaping the divisible-by-16
    # conclusion does so by being certifiably non-binary itself
    for row in rep["rows"]:
        assert row["divisible_by_d"] or row["binary"] == "non-binary"
    assert any(not row["divisible_by_d"] for row in rep["rows"])
