import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcenter import rootdata
from qcenter.ring import RatFunc, qpow, quantum_factorial
from qcenter.uq import (
    E, F, K, UElement, antipode, coproduct, expand_divided, format_word, parse_word, serre_element,
    serre_plain, split_normal_word, straighten,
)


def counit(word):
    return 0 if any(a.kind != "K" for a in word) else 1


def short_words(rd, length):
    atoms = [E(i) for i in range(rd.rank)] + [F(i) for i in range(rd.rank)] + [K(rd.simple_root(0))]
    for n in range(length + 1):
        yield from itertools.product(atoms, repeat=n)


def test_commutator(A1):
    lhs = straighten(A1, UElement.word(E(0), F(0)) - UElement.word(F(0), E(0)))
    inv = RatFunc(1, qpow(1) - qpow(-1))
    rhs = UElement.word(K((2,)), coeff=inv) + UElement.word(K((-2,)), coeff=-inv)
    assert lhs.terms == rhs.terms


def test_k_commutation(B2):
    # k_gamma e_i = q^{(alpha_i, gamma)} e_i k_gamma
    for i in range(2):
        for gamma in [(1, 0), (0, 1), (2, -1)]:
            lhs = straighten(B2, UElement.word(E(i), K(gamma)))
            e = -B2.form(B2.simple_root(i), gamma)
            assert lhs.terms == {(K(gamma), E(i)): qpow(int(e))}


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_antipode_axiom(label):
    rd = rootdata.build(label)
    for w in short_words(rd, 2):
        total = UElement()
        for (w1, w2), c in coproduct(rd, UElement.word(*w)).items():
            total = total + antipode(rd, UElement.word(*w1)) * UElement.word(*w2).scale(c)
        assert straighten(rd, total).terms == straighten(rd, UElement.one().scale(counit(w))).terms, w


@pytest.mark.parametrize("label", ["A2", "G2"])
def test_antipode_inverse(label):
    rd = rootdata.build(label)
    for w in short_words(rd, 2):
        x = UElement.word(*w)
        assert straighten(rd, antipode(rd, antipode(rd, x), inverse=True)).terms == straighten(rd, x).terms
        assert straighten(rd, antipode(rd, antipode(rd, x, inverse=True))).terms == straighten(rd, x).terms


def test_coassociative(A2):
    for w in short_words(A2, 3):
        left, right = {}, {}
        for (a, b), c in coproduct(A2, UElement.word(*w)).items():
            for (a1, a2), c1 in coproduct(A2, UElement.word(*a)).items():
                key = (a1, a2, b)
                left[key] = left.get(key, 0) + c * c1
            for (b1, b2), c2 in coproduct(A2, UElement.word(*b)).items():
                key = (a, b1, b2)
                right[key] = right.get(key, 0) + c * c2
        assert {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}


def test_straighten_normal_form(G2):
    x = UElement.word(E(0), F(1), K((1, 0)), E(1), F(0))
    s = straighten(G2, x)
    for w in s.terms:
        split_normal_word(w)
    assert straighten(G2, s).terms == s.terms


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_serre_forms_agree(label):
    rd = rootdata.build(label)
    for i, j in [(0, 1), (1, 0)]:
        m = 1 - rd.cartan[i][j]
        divided = expand_divided(rd, serre_element(rd, i, j)).scale(quantum_factorial(m, rd.d[i]))
        assert divided.terms == serre_plain(rd, i, j).terms


def test_parse_word_forms():
    assert parse_word("F1 K[2,0] E1^(2)", 2) == (F(0), K((2, 0)), E(0, 2))
    assert parse_word("E2^3", 2) == (E(1), E(1), E(1))
    assert parse_word("1", 2) == ()
    with pytest.raises(ValueError):
        parse_word("E3", 2)
    with pytest.raises(ValueError):
        parse_word("X1", 2)


atom = st.one_of(
    st.builds(E, st.integers(0, 1), st.integers(1, 3)),
    st.builds(F, st.integers(0, 1), st.integers(1, 3)),
    st.builds(lambda a, b: K((a, b)), st.integers(-3, 3), st.integers(-3, 3)),
)


@settings(max_examples=60)
@given(st.lists(atom, max_size=5))
def test_word_roundtrip(atoms):
    assert parse_word(format_word(tuple(atoms)), 2) == tuple(atoms)


def test_fractional_exponent_rejected(A1):
    from qcenter.drinfeld import tau

    # (w, w) = 1/2 in A1, so tau(k_w, k_w) would need q^(1/2)
    with pytest.raises(ValueError):
        tau(A1, UElement.word(K((1,))), UElement.word(K((1,))))
