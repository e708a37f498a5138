"""Finite-field arithmetic unit tests."""

import pytest
from hypothesis import given, settings, strategies as st

from rank1binary.gf import GF, factorize, is_prime, prime_power


def test_prime_predicates():
    assert is_prime(2) and is_prime(13) and is_prime(97)
    assert not is_prime(1) and not is_prime(91)
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_power(49) == (7, 2)
    assert prime_power(64) == (2, 6)
    assert prime_power(6) is None


@pytest.mark.parametrize("q", [4, 5, 8, 9, 13, 16, 25, 27])
def test_field_axioms(q):
    F = GF.of(q)
    els = F.elements()
    assert len(els) == q
    sample = els[: min(q, 6)]
    for a in sample:
        for b in sample:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in sample:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from([8, 9, 16, 25]), st.integers(0, 24), st.integers(0, 24))
@settings(max_examples=60, deadline=None)
def test_frobenius_is_additive_and_multiplicative(q, i, j):
    F = GF.of(q)
    a, b = F.elements()[i % q], F.elements()[j % q]
    fa, fb = F.frobenius(a), F.frobenius(b)
    assert F.frobenius(F.add(a, b)) == F.add(fa, fb)
    assert F.frobenius(F.mul(a, b)) == F.mul(fa, fb)


def test_generator_order_and_subfields():
    F = GF.of(16)
    assert F.element_order(F.generator) == 15
    sub = F.subfield_elements(4)
    assert len(sub) == 4
    g0 = F.subfield_generator(4)
    assert F.element_order(g0) == 3
    # subfield is closed under the arithmetic
    for a in sub:
        for b in sub:
            assert F.add(a, b) in sub and F.mul(a, b) in sub


def test_trace_to_prime():
    F = GF.of(9)
    values = {F.trace_to_prime(a) for a in F.elements()}
    assert values == {0, 1, 2}
    # trace is additive
    a, b = F.elements()[2], F.elements()[5]
    assert (F.trace_to_prime(F.add(a, b))
            == (F.trace_to_prime(a) + F.trace_to_prime(b)) % 3)
