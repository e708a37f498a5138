"""Fixed-point table data and verifier unit tests."""

import pytest

from rank1binary import families, tables
from rank1binary.perm import involutions


def test_data_file_shape():
    data = tables.load_table_data()
    assert data["version"] == 1
    for record in data["rows"]:
        assert record["table"] in ("T1", "T2", "T3", "T4", "T5")
        assert len(record["guards"]) == 5
        assert "omega" in record
    # every class-case label used by a record resolves
    for record in data["rows"]:
        for key in ("g_class_case", "k_class_case", "f_class_case"):
            case = record.get(key)
            if case is not None:
                kind = tables._TABLE_KINDS[record["table"]][key[0]]
                tables.class_size_expr(kind, case)


@pytest.mark.parametrize("q,kind,zeta,expected", [
    (13, "inner", None, 91),       # q(q+1)/2 for q = 1 mod 4
    (11, "inner", None, 55),       # q(q-1)/2 for q = 3 mod 4
    (8, "inner", None, 63),        # q^2 - 1 for q even
    (9, "field", 2, 30),           # zeta/2 * sqrt(q)(q+1)
    (11, "klein", 1, 55),          # q(q^2-1)/24 for q = 3 mod 8
    (7, "klein", 1, 7),            # zeta q(q^2-1)/48 for q = -1 mod 8
    (17, "klein", 1, 102),         # zeta q(q^2-1)/48 for q = 1 mod 8
    (8, "suzuki", None, 455),      # (q^2+1)(q-1)
])
def test_involution_class_sizes(q, kind, zeta, expected):
    assert tables.involution_class_size(q, kind=kind, zeta=zeta) == expected


def test_class_size_matches_direct_count():
    for q in (7, 11, 13):
        g = families.psl2(q)
        invs = involutions(g)
        assert len(invs) == tables.involution_class_size(q, kind="inner")


def test_fix_count_formula_exactness():
    assert tables.fix_count_formula(91, 6, 91) == 6
    with pytest.raises(ValueError):
        tables.fix_count_formula(91, 5, 9)
    with pytest.raises(ValueError):
        tables.fix_count_formula(10, 1, 0)


def test_fix_count_direct_forms():
    from rank1binary.action import natural_action
    g = families.psl2(13)
    a = natural_action(g)
    x = next(iter(involutions(g)))
    assert tables.fix_count_direct(a, x) == len(x.fixed_points()) == 2
    k = families.first_klein_subgroup(families.psl2(9))
    a9 = natural_action(families.psl2(9))
    assert tables.fix_count_direct(a9, k) == tables.fix_count_direct(
        a9, k.element_list())


def test_burnside_sanity():
    # sum of |Fix(x)| over a full class = |class| * closed-form fix count
    from rank1binary.action import natural_action
    from rank1binary.perm import conjugacy_class
    g = families.psl2(13)
    a = natural_action(g)
    x = next(iter(involutions(g)))
    cls = conjugacy_class(x, g)
    assert len(cls) == 91
    total = sum(len(y.fixed_points()) for y in cls)
    assert total == 91 * 2


def test_klein_intersection_count():
    g = families.psl2(7)
    h = families.maximal_subgroup_psl2(g, 7, "s4")
    # Sym(4) contains four Klein subgroups, split 1 + 3 over the two
    # G-classes when q = 7
    counts = sorted(tables.klein_intersection_count(h, k, g)
                    for k in families.klein_subgroups(g))
    assert counts == [1, 3]


def test_conditions_language():
    ok = tables.conditions_hold
    assert ok({"parity": "odd", "q_mod": [8, [1]]}, {"q": 17})
    assert not ok({"q_mod": [8, [1]]}, {"q": 19})
    assert ok({"q_prime": True}, {"q": 13})
    assert not ok({"q_prime": True}, {"q": 9})
    assert ok({"q_square": True}, {"q": 49})
    assert ok({"sz": True}, {"q": 8})
    assert not ok({"sz": True}, {"q": 16})
    assert ok({"ree": True}, {"q": 27})
    assert ok({"zeta": 2}, {"q": 9, "zeta": 2})
    assert not ok({"zeta": 2}, {"q": 9, "zeta": 1})


def test_symbolic_spot_checks():
    out = tables.verify_table_symbolic("T5")
    assert out["ok"] and len(out["certificates"]) == 10


def test_numeric_spot_check():
    out = tables.verify_table_numeric("T1", 13)
    assert out["ok"]
    d_minus = [r for r in out["rows"] if r["row"] == "d-minus"]
    assert d_minus
    for r in d_minus:
        assert r["columns"]["involution"]["direct"]["fix"] == 7
        assert r["columns"]["klein"]["closed"]["fix"] == 3


def test_t5_numeric_rejected():
    with pytest.raises(ValueError):
        tables.verify_table_numeric("T5", 27)
