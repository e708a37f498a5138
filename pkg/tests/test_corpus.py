"""Corpus composition unit tests."""

from rank1binary import corpus
from rank1binary.perm import is_primitive


def test_corpus_shape():
    entries = corpus.psl2_corpus()
    names = [e.name for e in entries]
    assert len(entries) == len(set(names)) == 50
    for e in entries:
        a = e.action
        assert a.degree >= 2
        assert is_primitive(a.group)
        assert a.group.is_transitive()
        # faithful: the full source group survives into the image
        assert a.group.order() == e.action.source.order() or a.degree == 1


def test_corpus_contains_known_actions():
    names = {e.name for e in corpus.psl2_corpus()}
    assert "psl2:11/coset:a5" in names
    assert "psl2:13/coset:a4" in names
    assert "pgl2:13/coset:s4" in names
    assert "psl2:9/ext:f1/coset:klein" in names
    # A4 is contained in A5 over q = 11, hence not maximal and not present
    assert "psl2:11/coset:a4" not in names


def test_exceptional_entries():
    entries = corpus.psl2_corpus()
    exceptional = [e for e in entries if corpus.is_exceptional(e)]
    assert len(exceptional) == 2
    got = {(e.q, e.action.degree, e.action.group.order()) for e in exceptional}
    assert got == {(5, 5, 120), (9, 6, 720)}


def test_distinct_classes_same_signature_kept():
    # over q = 13 the torus normalizer and Alt(4) share order 12 and
    # degree 91 but are non-conjugate, so both must be present
    names = {e.name for e in corpus.psl2_corpus(qs=(13,))}
    assert "psl2:13/coset:d-minus" in names
    assert "psl2:13/coset:a4" in names
