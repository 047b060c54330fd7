"""Words and linear combinations in the quantized enveloping algebra.

Atoms are ``K(weight)``, ``E(i, n)`` and ``F(i, n)``; ``n > 1`` marks a
divided power.  Weights are in fundamental-weight coordinates and
``k_i = K(alpha_i)``.  Conventions::

    k_g e_i = q^{(alpha_i, g)} e_i k_g      k_g f_i = q^{-(alpha_i, g)} f_i k_g
    e_i f_j - f_j e_i = delta_ij (k_i - k_i^-1) / (q_i - q_i^-1)
    De = e (x) 1 + k_i (x) e        Df = f (x) k_i^-1 + 1 (x) f
    S(e) = -k_i^-1 e   S(f) = -f k_i   S(k) = k^-1

Elements are dicts from words (tuples of atoms) to scalars; words are
free, so two different words may represent the same algebra element.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .ring import RatFunc, qpow, quantum_binomial, quantum_factorial
from .rootdata import RootDatum, format_weight


class Atom(NamedTuple):
    kind: str          # "K", "E" or "F"
    index: int = -1
    power: int = 1
    weight: tuple = ()

    def __str__(self):
        if self.kind == "K":
            return f"K[{format_weight(self.weight)}]"
        s = f"{self.kind}{self.index + 1}"
        return s + (f"^({self.power})" if self.power != 1 else "")


def _w(weight):
    out = []
    for x in weight:
        x = Fraction(x)
        out.append(int(x) if x.denominator == 1 else x)
    return tuple(out)


def K(weight) -> Atom:
    return Atom("K", -1, 1, _w(weight))


def E(i: int, n: int = 1) -> Atom:
    if n < 1:
        raise ValueError("divided power needs n >= 1")
    return Atom("E", i, n)


def F(i: int, n: int = 1) -> Atom:
    if n < 1:
        raise ValueError("divided power needs n >= 1")
    return Atom("F", i, n)


def word_grading(rd: RootDatum, word) -> tuple:
    """Q-grading in simple-root coordinates (E positive, F negative)."""
    g = [0] * rd.rank
    for a in word:
        if a.kind == "E":
            g[a.index] += a.power
        elif a.kind == "F":
            g[a.index] -= a.power
    return tuple(g)


def word_side(word) -> str:
    kinds = {a.kind for a in word}
    if "E" in kinds and "F" in kinds:
        return "mixed"
    if "F" in kinds:
        return "minus"
    return "plus"


def _add_w(a, b):
    return _w(x + y for x, y in zip(a, b))


def _neg_w(a):
    return _w(-x for x in a)


def _int_exp(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"fractional q-exponent {x}: fractional powers of q are not supported")
    return int(x)


class UElement:
    """Finite linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if c != 0:
                s = self.terms.get(w, 0) + c
                if s != 0:
                    self.terms[w] = s
                else:
                    self.terms.pop(w, None)

    @classmethod
    def word(cls, *atoms, coeff=1):
        return cls({tuple(atoms): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in _as_elem(other).terms.items():
            out[w] = out.get(w, 0) + c
        return UElement({w: c for w, c in out.items() if c != 0})

    __radd__ = __add__

    def __neg__(self):
        return UElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_elem(other))

    def scale(self, c):
        return UElement({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UElement):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return UElement(out)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self):
        return not self.terms

    def __iter__(self):
        return iter(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: [str(a) for a in t[0]]):
            body = " ".join(str(a) for a in w) or "1"
            parts.append(body if c == 1 else f"({c})*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def _as_elem(x) -> UElement:
    if isinstance(x, UElement):
        return x
    if isinstance(x, Atom):
        return UElement.word(x)
    if isinstance(x, tuple):
        return UElement({x: 1})
    return UElement({(): x})


# -- plain expansion ---------------------------------------------------------

def expand_divided(rd: RootDatum, elem) -> UElement:
    """Replace X^(n) by X^n / [n]_{q_i}!."""
    out = {}
    for w, c in _as_elem(elem).terms.items():
        new = []
        for a in w:
            if a.kind != "K" and a.power > 1:
                c = c * RatFunc(1, quantum_factorial(a.power, rd.d[a.index]))
                new.extend([Atom(a.kind, a.index, 1)] * a.power)
            else:
                new.append(a)
        t = tuple(new)
        out[t] = out.get(t, 0) + c
    return UElement(out)


# -- Hopf structure ----------------------------------------------------------

def _alpha(rd, i):
    return _w(rd.simple_root(i))


def coproduct(rd: RootDatum, elem) -> dict:
    """Delta on plain words: returns {(w1, w2): coeff}."""
    out = {}
    for w, c in expand_divided(rd, elem).terms.items():
        partial = {((), ()): c}
        for a in w:
            if a.kind == "K":
                opts = [((a,), (a,))]
            elif a.kind == "E":
                opts = [((a,), ()), ((K(_alpha(rd, a.index)),), (a,))]
            else:
                opts = [((a,), (K(_neg_w(_alpha(rd, a.index))),)), ((), (a,))]
            nxt = {}
            for (l, r), v in partial.items():
                for dl, dr in opts:
                    key = (l + dl, r + dr)
                    nxt[key] = nxt.get(key, 0) + v
            partial = nxt
        for key, v in partial.items():
            out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def _antipode_atom(rd, a, inverse=False) -> UElement:
    if a.kind == "K":
        return UElement.word(K(_neg_w(a.weight)))
    al = _alpha(rd, a.index)
    if a.kind == "E":
        if inverse:
            return UElement.word(a, K(_neg_w(al)), coeff=-1)
        return UElement.word(K(_neg_w(al)), a, coeff=-1)
    if inverse:
        return UElement.word(K(al), a, coeff=-1)
    return UElement.word(a, K(al), coeff=-1)


def antipode(rd: RootDatum, elem, inverse: bool = False) -> UElement:
    """S (or S^-1), an algebra anti-automorphism."""
    out = UElement()
    for w, c in expand_divided(rd, elem).terms.items():
        acc = UElement.one().scale(c)
        for a in reversed(w):
            acc = acc * _antipode_atom(rd, a, inverse)
        out = out + acc
    return out


def adjoint(rd: RootDatum, z, v) -> UElement:
    """ad(z)(v) = sum z_(1) v S(z_(2))."""
    v = _as_elem(v)
    out = UElement()
    for (w1, w2), c in coproduct(rd, z).items():
        out = out + (UElement.word(*w1, coeff=c) * v * antipode(rd, UElement.word(*w2)))
    return out


# -- straightening -----------------------------------------------------------

_ORDER = {"F": 0, "K": 1, "E": 2}


def straighten(rd: RootDatum, elem) -> UElement:
    """Rewrite into words F...F K E...E (one merged K, identity K dropped).

    The F and E parts keep their letter order; no Serre reduction is done.
    """
    pending = dict(expand_divided(rd, elem).terms)
    done = {}
    while pending:
        w, c = pending.popitem()
        if c == 0:
            continue
        pos = None
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if _ORDER[a.kind] > _ORDER[b.kind] or (a.kind == "K" and b.kind == "K"):
                pos = p
                break
        if pos is None:
            w = tuple(a for a in w if not (a.kind == "K" and not any(a.weight)))
            done[w] = done.get(w, 0) + c
            continue
        a, b = w[pos], w[pos + 1]
        pre, post = w[:pos], w[pos + 2:]
        repl = []
        if a.kind == "K" and b.kind == "K":
            s = _add_w(a.weight, b.weight)
            repl.append(((K(s),) if any(s) else (), 1))
        elif a.kind == "E" and b.kind == "K":
            e = -rd.form(_alpha(rd, a.index), b.weight)
            repl.append(((b, a), qpow(_int_exp(e))))
        elif a.kind == "K" and b.kind == "F":
            e = -rd.form(_alpha(rd, b.index), a.weight)
            repl.append(((b, a), qpow(_int_exp(e))))
        else:  # E then F
            repl.append(((b, a), 1))
            if a.index == b.index:
                i = a.index
                di = rd.d[i]
                inv = RatFunc(1, qpow(di) - qpow(-di))
                al = _alpha(rd, i)
                repl.append(((K(al),), inv))
                repl.append(((K(_neg_w(al)),), -inv))
        for mid, f in repl:
            nw = pre + mid + post
            pending[nw] = pending.get(nw, 0) + c * f
    return UElement({w: c for w, c in done.items() if c != 0})


def split_normal_word(word):
    """Split a straightened word into (F-part, K weight or None, E-part)."""
    fs = tuple(a for a in word if a.kind == "F")
    es = tuple(a for a in word if a.kind == "E")
    ks = [a for a in word if a.kind == "K"]
    if len(ks) > 1 or word != fs + tuple(ks) + es:
        raise ValueError(f"word {' '.join(map(str, word))} is not in F K E order")
    return fs, (ks[0].weight if ks else None), es


# -- Serre elements ----------------------------------------------------------

def serre_element(rd: RootDatum, i: int, j: int, side: str = "plus") -> UElement:
    """sum_n (-1)^n X_i^(1-a_ij-n) X_j X_i^(n) with X = e (plus) or f (minus)."""
    if i == j:
        raise ValueError("Serre relation needs i != j")
    m = 1 - rd.cartan[i][j]
    gen = E if side == "plus" else F
    terms = {}
    for n in range(m + 1):
        w = []
        if m - n:
            w.append(gen(i, m - n))
        w.append(gen(j))
        if n:
            w.append(gen(i, n))
        terms[tuple(w)] = (-1) ** n
    return UElement(terms)


def serre_plain(rd: RootDatum, i: int, j: int, side: str = "plus") -> UElement:
    """Same relation with quantum binomials and plain powers."""
    m = 1 - rd.cartan[i][j]
    gen = E if side == "plus" else F
    terms = {}
    for n in range(m + 1):
        w = (gen(i),) * (m - n) + (gen(j),) + (gen(i),) * n
        terms[w] = (-1) ** n * quantum_binomial(m, n, rd.d[i])
    return UElement(terms)


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(K)\[([^\]]*)\]|([EF])(\d+)(?:\^\s*(\(?)\s*(\d+)\s*\)?)?)")


def parse_word(text: str, rank: int) -> tuple:
    """Parse tokens like ``F1 K[2,0] E1^(2)``; indices are 1-based.

    ``X^(n)`` is a divided power, ``X^n`` a plain power.
    """
    from .rootdata import parse_weight

    text = text.strip()
    if text in ("", "1"):
        return ()
    atoms = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            atoms.append(K(parse_weight(m.group(2), rank)))
            continue
        i = int(m.group(4)) - 1
        if not 0 <= i < rank:
            raise ValueError(f"generator index {i + 1} out of range 1..{rank}")
        gen = E if m.group(3) == "E" else F
        n = int(m.group(6)) if m.group(6) else 1
        if m.group(5):
            atoms.append(gen(i, n))
        else:
            atoms.extend([gen(i)] * n)
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tuple(atoms)


def format_word(word) -> str:
    return " ".join(str(a) for a in word) or "1"


__all__ = [
    "Atom", "K", "E", "F", "UElement", "word_grading", "word_side", "expand_divided",
    "coproduct", "antipode", "adjoint", "straighten", "split_normal_word",
    "serre_element", "serre_plain", "parse_word", "format_word",
]
