"""The Drinfeld pairing tau, the form kappa and the embedding j.

tau is evaluated on free words by splitting one atom at a time.  Inner
values are Laurent polynomials computed with tau(e_i, f_i) replaced by 1;
the true value is recovered by multiplying with c_i = -1/(q_i - q_i^-1)
once per matched pair, and by 1/[n]! for divided atoms.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .ring import ONE, LaurentPoly, RatFunc, qpow
from .rootdata import RootDatum
from .uq import (
    E, F, K, UElement, _as_elem, _int_exp, _w, antipode, expand_divided,
    serre_element, split_normal_word, straighten, word_grading,
)


def _check_side(word, side):
    bad = "F" if side == "plus" else "E"
    for a in word:
        if a.kind == bad:
            raise ValueError(f"atom {a} is not allowed on the {side} side")


def _total_weight(rd, word):
    """Weight of the group-like part: K atoms plus alpha_i for each e_i."""
    tot = [Fraction(0)] * rd.rank
    for a in word:
        if a.kind == "K":
            for t, x in enumerate(a.weight):
                tot[t] += x
        elif a.kind == "E":
            for t, x in enumerate(rd.simple_root(a.index)):
                tot[t] += x
    return tuple(tot)


def _k_weight(rd, word):
    tot = [Fraction(0)] * rd.rank
    for a in word:
        if a.kind == "K":
            for t, x in enumerate(a.weight):
                tot[t] += x
    return tuple(tot)


def _qf(rd, lam, mu, sign=1) -> LaurentPoly:
    return qpow(_int_exp(sign * rd.form(lam, mu)))


def _graded_match(rd, x, y):
    return word_grading(rd, x) == tuple(-g for g in word_grading(rd, y))


@lru_cache(maxsize=200000)
def _tau_y(rd, x, y) -> LaurentPoly:
    """Split y from the left."""
    if not y:
        return ONE if all(a.kind != "E" for a in x) else LaurentPoly()
    y1, rest = y[0], y[1:]
    if y1.kind == "K":
        return _qf(rd, _total_weight(rd, x), y1.weight, -1) * _tau_y(rd, x, rest)
    total = LaurentPoly()
    for p, a in enumerate(x):
        if a.kind == "E" and a.index == y1.index:
            inner = _tau_y(rd, x[:p] + x[p + 1:], rest)
            if inner:
                total = total + _qf(rd, _total_weight(rd, x[:p]), rd.simple_root(a.index)) * inner
    return total


@lru_cache(maxsize=200000)
def _tau_x(rd, x, y) -> LaurentPoly:
    """Split x from the right."""
    if not x:
        return ONE if all(a.kind != "F" for a in y) else LaurentPoly()
    x2, x1 = x[-1], x[:-1]
    if x2.kind == "K":
        return _qf(rd, x2.weight, _k_weight(rd, y), -1) * _tau_x(rd, x1, y)
    total = LaurentPoly()
    al = rd.simple_root(x2.index)
    minus_al = K(tuple(-c for c in al))
    for p, b in enumerate(y):
        if b.kind == "F" and b.index == x2.index:
            inner = _tau_x(rd, x1, y[:p] + (minus_al,) + y[p + 1:])
            if inner:
                total = total + _qf(rd, al, _k_weight(rd, y[:p]), -1) * inner
    return total


def _pair_scale(rd, x):
    c = RatFunc(1)
    for a in x:
        if a.kind == "E":
            di = rd.d[a.index]
            c = c * RatFunc(-1, qpow(di) - qpow(-di))
    return c


def tau(rd: RootDatum, x, y, order: str = "y"):
    """Drinfeld pairing tau(x, y) for x on the plus side and y on the minus side.

    ``order`` picks which argument the recursion splits ("y" or "x"); both
    must agree.
    """
    rec = _tau_y if order == "y" else _tau_x
    X = expand_divided(rd, x)
    Y = expand_divided(rd, y)
    total = RatFunc(0)
    for xw, cx in X.terms.items():
        _check_side(xw, "plus")
        for yw, cy in Y.terms.items():
            _check_side(yw, "minus")
            if not _graded_match(rd, xw, yw):
                continue
            inner = rec(rd, xw, yw)
            if inner:
                total = total + cx * cy * _pair_scale(rd, xw) * inner
    return total


# -- words by grading --------------------------------------------------------

def words_of_grading(rd: RootDatum, gamma, side: str = "plus"):
    """All plain words in e (plus) or f (minus) letters of Q+-grading gamma."""
    gen = E if side == "plus" else F
    gamma = tuple(gamma)
    out = []

    def rec(rem, acc):
        if not any(rem):
            out.append(tuple(acc))
            return
        for i in range(rd.rank):
            if rem[i] > 0:
                acc.append(gen(i))
                rec(tuple(r - (t == i) for t, r in enumerate(rem)), acc)
                acc.pop()

    rec(gamma, [])
    return out


def pairing_matrix(rd: RootDatum, gamma):
    """tau on plain e-words x plain f-words of grading gamma."""
    rows = words_of_grading(rd, gamma, "plus")
    cols = words_of_grading(rd, gamma, "minus")
    return rows, cols, [[tau(rd, UElement.word(*r), UElement.word(*c)) for c in cols] for r in rows]


def serre_certificate(rd: RootDatum, i: int, j: int, side: str = "plus", gamma=None) -> bool:
    """tau(a S_ij b, m) == 0 for all padding words a, b and opposite words m.

    ``gamma`` is the total Q+-grading; it defaults to the bare Serre grading.
    """
    if i == j:
        raise ValueError("Serre certificate needs i != j")
    s = serre_element(rd, i, j, side)
    sg = [0] * rd.rank
    sg[i] += 1 - rd.cartan[i][j]
    sg[j] += 1
    gamma = tuple(sg) if gamma is None else tuple(gamma)
    pad = tuple(g - h for g, h in zip(gamma, sg))
    if any(p < 0 for p in pad):
        raise ValueError("probe grading must contain the Serre grading")
    opp = "minus" if side == "plus" else "plus"
    probes = words_of_grading(rd, gamma, opp)
    # every split of the padding into a left and a right word
    for left_g in itertools.product(*[range(p + 1) for p in pad]):
        right_g = tuple(p - l for p, l in zip(pad, left_g))
        for a in words_of_grading(rd, left_g, side):
            for b in words_of_grading(rd, right_g, side):
                elem = UElement.word(*a) * s * UElement.word(*b)
                for m in probes:
                    mm = UElement.word(*m)
                    val = tau(rd, elem, mm) if side == "plus" else tau(rd, mm, elem)
                    if val != 0:
                        return False
    return True


def serre_gradings(rd: RootDatum, i: int, j: int, max_height: int):
    """Gradings containing the (i, j) Serre grading with total height <= max_height."""
    base = [0] * rd.rank
    base[i] += 1 - rd.cartan[i][j]
    base[j] += 1
    spare = max_height - sum(base)
    out = []
    for pad in itertools.product(range(max(spare, -1) + 1), repeat=rd.rank):
        if sum(pad) <= spare:
            out.append(tuple(b + p for b, p in zip(base, pad)))
    return out


def serre_suite(rd: RootDatum, max_height: int, sides=("plus", "minus")):
    """Yield (i, j, side, gamma, ok) for every padded Serre certificate up to max_height."""
    for i in range(rd.rank):
        for j in range(rd.rank):
            if i == j:
                continue
            for gamma in serre_gradings(rd, i, j, max_height):
                for side in sides:
                    yield i, j, side, gamma, serre_certificate(rd, i, j, side, gamma)


def integrality_check(rd: RootDatum, gamma) -> bool:
    """Both integral restrictions land in Z[q, q^-1] at grading gamma.

    The De Concini-Kac side uses (q_i - q_i^-1) e_i; the Lusztig side uses
    divided-power words.
    """
    for lusztig_side in ("minus", "plus"):
        dck_side = "plus" if lusztig_side == "minus" else "minus"
        for w in words_of_grading(rd, gamma, dck_side):
            c = LaurentPoly(1)
            for a in w:
                di = rd.d[a.index]
                c = c * (qpow(di) - qpow(-di))
            dck = UElement.word(*w, coeff=c)
            for lw in divided_words(rd, gamma, lusztig_side):
                lel = UElement.word(*lw)
                val = tau(rd, dck, lel) if dck_side == "plus" else tau(rd, lel, dck)
                if not val.is_laurent():
                    return False
    return True


def divided_words(rd: RootDatum, gamma, side: str):
    """Words of divided-power atoms (no two adjacent atoms with the same index)."""
    gen = E if side == "plus" else F
    out = []

    def rec(rem, acc, last):
        if not any(rem):
            out.append(tuple(acc))
            return
        for i in range(rd.rank):
            if i == last:
                continue
            for n in range(1, rem[i] + 1):
                acc.append(gen(i, n))
                rec(tuple(r - n * (t == i) for t, r in enumerate(rem)), acc, i)
                acc.pop()

    rec(tuple(gamma), [], None)
    return out


# -- kappa and j -------------------------------------------------------------

def _s2(rd, y):
    return antipode(rd, antipode(rd, y))


def _triangular_parts(rd, word, side):
    """Split a normal-ordered word into (y, middle K weight, x).

    y is returned as an element of S(U(n-)): the F-part followed by K of its
    weight, the remaining Cartan weight is the middle part.
    """
    fs, kw, es = split_normal_word(word)
    beta = [0] * rd.rank
    for a in fs:
        for t, c in enumerate(rd.simple_root(a.index)):
            beta[t] -= c * a.power
    # F-word * K(-beta_weight) has grading weight; F-word = (F-word K(g)) K(-g)
    g = tuple(-b for b in beta)  # positive weight of the F part
    kw = kw if kw is not None else tuple(0 for _ in range(rd.rank))
    y = fs + ((K(g),) if any(g) else ())
    mid = _w(Fraction(k) - Fraction(x) for k, x in zip(kw, g))
    return y, mid, es


def kappa_words(rd: RootDatum, y, h, x, y2, lam2, x2):
    """kappa(y h x, y2 k_{2 lam} x2) on factorised data.

    ``h`` and ``lam2`` (= 2 lam) are weights; y, x, y2, x2 are words or
    elements.
    """
    lam = tuple(Fraction(c) / 2 for c in lam2)
    if any(Fraction(c).denominator != 1 for c in lam):
        raise ValueError("the middle Cartan factor of u must be k_{2 lam} with lam in P")
    chi = qpow(_int_exp(-rd.form(lam, h)))
    a = tau(rd, _as_elem(x), _as_elem(y2))
    if a == 0:
        return RatFunc(0)
    b = tau(rd, _as_elem(x2), _s2(rd, _as_elem(y)))
    return a * b * chi


def kappa(rd: RootDatum, v, u):
    """kappa(v, u) for arbitrary elements, straightened to triangular form."""
    total = RatFunc(0)
    V = straighten(rd, v)
    U = straighten(rd, u)
    for vw, cv in V.terms.items():
        y, h, x = _triangular_parts(rd, vw, "L")
        for uw, cu in U.terms.items():
            y2, lam2, x2 = _triangular_parts(rd, uw, "e")
            val = kappa_words(rd, UElement.word(*y), h, x, UElement.word(*y2), lam2, x2)
            if val != 0:
                total = total + cv * cu * val
    return total


def jmath_eval(rd: RootDatum, u, probes):
    """[<j(u), v> for v in probes] = [kappa(v, u) ...]."""
    return [kappa(rd, v, u) for v in probes]


def ad_transport_check(rd: RootDatum, z, v, u) -> bool:
    """kappa(ad(z) v, u) == kappa(v, ad(S z) u)."""
    from .uq import adjoint

    lhs = kappa(rd, adjoint(rd, z, v), u)
    rhs = kappa(rd, v, adjoint(rd, antipode(rd, z), u))
    return lhs == rhs


__all__ = [
    "tau", "words_of_grading", "divided_words", "pairing_matrix", "serre_certificate",
    "serre_gradings", "serre_suite",
    "integrality_check", "kappa", "kappa_words", "jmath_eval", "ad_transport_check",
]
