"""The group algebra R[P] = O_R(H) with the twisted Weyl actions.

A :class:`PChar` is a finitely supported map from weights to scalars.  In
the ``"e"`` reading a term is ``c e(lam)``; in the ``"chi"`` reading it is
``c chi_lam``.  The two readings are matched by ``e(2 lam) <-> chi_{-lam}``.
Scalars may be ints, :class:`LaurentPoly`, :class:`RatFunc` or
:class:`CycScalar`; q-powers are inserted as Laurent monomials.
"""
from __future__ import annotations

import json

from .ring import LaurentPoly, RatFunc, parse_laurent, qpow
from .rootdata import RootDatum, WeylElement, format_weight, parse_weight


def _integral(x, what="exponent"):
    if getattr(x, "denominator", 1) != 1:
        raise ValueError(f"non-integral {what} {x}")
    return int(x)


class PChar:
    __slots__ = ("terms", "basis")

    def __init__(self, terms=None, basis: str = "e"):
        if basis not in ("e", "chi"):
            raise ValueError("basis must be 'e' or 'chi'")
        self.basis = basis
        self.terms = {}
        for lam, c in (terms or {}).items():
            if c != 0:
                self.terms[tuple(lam)] = c

    @classmethod
    def monomial(cls, lam, basis="e", coeff=1):
        return cls({tuple(lam): coeff}, basis)

    def _check(self, other):
        if not isinstance(other, PChar):
            raise TypeError("expected PChar")
        if other.basis != self.basis:
            raise ValueError("cannot mix e- and chi-readings; convert first")

    def __add__(self, other):
        if other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return PChar(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return PChar({k: -v for k, v in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PChar({k: c * v for k, v in self.terms.items()}, self.basis)

    def __mul__(self, other):
        if not isinstance(other, PChar):
            return self.scale(other)
        self._check(other)
        out = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                lam = tuple(a + b for a, b in zip(l1, l2))
                out[lam] = out.get(lam, 0) + c1 * c2
        return PChar(out, self.basis)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, PChar) or other.basis != self.basis:
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms)))

    def support(self):
        return sorted(self.terms)

    def coeff(self, lam):
        return self.terms.get(tuple(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"PChar({format_pchar(self)!r})"

    __str__ = lambda self: format_pchar(self)  # noqa: E731


def e_to_chi(f: PChar) -> PChar:
    """Transport R[2P] -> O_R(H) along e(2 lam) -> chi_{-lam}."""
    if f.basis != "e":
        raise ValueError("expected e-reading")
    out = {}
    for lam, c in f.terms.items():
        if any(x % 2 for x in lam):
            raise ValueError(f"e({format_weight(lam)}) is not in R[2P]")
        out[tuple(-(x // 2) for x in lam)] = c
    return PChar(out, "chi")


def chi_to_e(f: PChar) -> PChar:
    if f.basis != "chi":
        raise ValueError("expected chi-reading")
    return PChar({tuple(-2 * x for x in lam): c for lam, c in f.terms.items()}, "e")


def act_circ(rd: RootDatum, w: WeylElement, f: PChar) -> PChar:
    """w o e(lam) = q^{(w lam - lam, rho)} e(w lam)."""
    if f.basis != "e":
        raise ValueError("act_circ acts on the e-reading")
    out = {}
    for lam, c in f.terms.items():
        wl = w(lam)
        k = rd.form(tuple(a - b for a, b in zip(wl, lam)), rd.rho)
        out[wl] = out.get(wl, 0) + qpow(_integral(k)) * c
    return PChar(out, "e")


def act_bullet(rd: RootDatum, w: WeylElement, f: PChar) -> PChar:
    """w . chi_lam = q^{-2(w lam - lam, rho)} chi_{w lam}."""
    if f.basis != "chi":
        raise ValueError("act_bullet acts on the chi-reading")
    out = {}
    for lam, c in f.terms.items():
        wl = w(lam)
        k = -2 * rd.form(tuple(a - b for a, b in zip(wl, lam)), rd.rho)
        out[wl] = out.get(wl, 0) + qpow(_integral(k)) * c
    return PChar(out, "chi")


def is_bullet_invariant(rd: RootDatum, f: PChar) -> bool:
    if f.basis != "chi":
        f = e_to_chi(f)
    return all(act_bullet(rd, rd.element((i,)), f) == f for i in range(rd.rank))


def is_circ_invariant(rd: RootDatum, f: PChar) -> bool:
    return all(act_circ(rd, rd.element((i,)), f) == f for i in range(rd.rank))


def c_basis(rd: RootDatum, lam, mult=None) -> PChar:
    """c(lam) = sum_mu q^{-2(rho, mu)} dim Delta(lam)_mu chi_mu.

    ``mult`` maps weights to multiplicities (a dict or a WeightMultTable);
    by default the Freudenthal table is used.
    """
    lam = tuple(lam)
    if not rd.is_dominant(lam):
        raise ValueError(f"c(lam) needs dominant lam, got {format_weight(lam)}")
    if mult is None:
        from .repchar import freudenthal

        mult = freudenthal(rd, lam)
    items = mult.mults.items() if hasattr(mult, "mults") else mult.items()
    out = {}
    for mu, m in items:
        k = -2 * rd.form(rd.rho, mu)
        out[tuple(mu)] = qpow(_integral(k)) * m
    return PChar(out, "chi")


# -- torus points ------------------------------------------------------------

class TorusPoint:
    """A point of H(R): values on chi_{w_i} for the fundamental weights."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(values)

    @classmethod
    def identity(cls, rank):
        return cls([LaurentPoly(1)] * rank)

    @classmethod
    def t_two_rho(cls, rd: RootDatum, sign: int = 1):
        """t_{+-2rho}: chi_lam -> q^{+-2(lam, rho)}."""
        return cls([qpow(_integral(sign * 2 * rd.form(w, rd.rho))) for w in rd.fundamental_weights])

    def __call__(self, lam):
        """<chi_lam, t>."""
        out = 1
        for v, c in zip(self.values, lam):
            c = _integral(c, "weight coordinate")
            if c > 0:
                out = out * (v ** c)
            elif c < 0:
                if isinstance(v, LaurentPoly) and not v.is_unit():
                    out = out * (RatFunc(LaurentPoly(1), v) ** (-c))
                else:
                    out = out * (v ** c)
        return out

    def __mul__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint([a * b for a, b in zip(self.values, other.values)])

    def __pow__(self, n: int) -> "TorusPoint":
        return TorusPoint([v ** n for v in self.values])

    def __eq__(self, other):
        return isinstance(other, TorusPoint) and all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash(tuple(str(v) for v in self.values))

    def __repr__(self):
        return "TorusPoint(" + ", ".join(str(v) for v in self.values) + ")"


def weyl_act_torus(rd: RootDatum, w: WeylElement, t: TorusPoint) -> TorusPoint:
    """Plain action (w t)(chi_lam) = t(chi_{w^-1 lam})."""
    winv = w.inverse()
    return TorusPoint([t(winv(fw)) for fw in rd.fundamental_weights])


def act_bullet_torus(rd: RootDatum, w: WeylElement, t: TorusPoint) -> TorusPoint:
    """w . t = w(t t_{-2rho}) t_{2rho}."""
    shifted = t * TorusPoint.t_two_rho(rd, -1)
    return weyl_act_torus(rd, w, shifted) * TorusPoint.t_two_rho(rd, 1)


def evaluate(f: PChar, t: TorusPoint):
    """<f, t> for f in the chi-reading."""
    if f.basis != "chi":
        raise ValueError("evaluation pairs the chi-reading with H(R)")
    items = sorted(f.terms.items())
    if not all(isinstance(v, LaurentPoly) for v in t.values) or \
            not all(isinstance(c, (int, LaurentPoly)) for _, c in items):
        total = 0
        for lam, c in items:
            total = total + c * t(lam)
        return total
    # one common denominator instead of reducing a fraction at every step
    low = [0] * len(t.values)
    for lam, _ in items:
        for i, (v, k) in enumerate(zip(t.values, lam)):
            k = _integral(k, "weight coordinate")
            if k < 0 and not v.is_unit():
                low[i] = min(low[i], k)
    den = LaurentPoly(1)
    for v, m in zip(t.values, low):
        den = den * v ** (-m)
    num = LaurentPoly(0)
    for lam, c in items:
        term = LaurentPoly._coerce(c)
        for v, k, m in zip(t.values, lam, low):
            k = int(k)
            term = term * (v ** (k - m) if not v.is_unit() else v ** k)
        num = num + term
    if not any(low):
        return num
    return RatFunc(num, den)


# -- text / json -------------------------------------------------------------

def _fmt_coeff(c) -> str:
    s = str(c)
    if isinstance(c, int) or (isinstance(c, LaurentPoly) and len(c.coeffs) <= 1 and "*" not in s):
        return s
    return f"({s})"


def format_pchar(f: PChar) -> str:
    """Text form like ``q^-1*chi[1] + q*chi[-1]``."""
    if not f.terms:
        return "0"
    head = "chi" if f.basis == "chi" else "e"
    parts = []
    for lam, c in sorted(f.terms.items(), reverse=True):
        parts.append(f"{_fmt_coeff(c)}*{head}[{format_weight(lam)}]")
    return " + ".join(parts)


def pchar_to_json(f: PChar) -> dict:
    return {
        "basis": f.basis,
        "terms": [{"weight": list(lam), "coeff": str(c)} for lam, c in sorted(f.terms.items(), reverse=True)],
    }


def pchar_from_json(data) -> PChar:
    if isinstance(data, str):
        data = json.loads(data)
    terms = {}
    for t in data["terms"]:
        terms[tuple(t["weight"])] = parse_laurent(t["coeff"])
    return PChar(terms, data["basis"])


def parse_pchar(text: str, basis: str | None = None) -> PChar:
    """Inverse of :func:`format_pchar` for Laurent coefficients."""
    import re

    out = {}
    found_basis = basis
    for m in re.finditer(r"(?:\(([^()]*)\)|([^\s+*()]+(?:\^-?\d+)?))?\*?(chi|e)\[([^\]]*)\]", text):
        coeff_txt = m.group(1) if m.group(1) is not None else (m.group(2) or "1")
        found_basis = "chi" if m.group(3) == "chi" else "e"
        lam = parse_weight(m.group(4))
        out[lam] = out.get(lam, 0) + parse_laurent(coeff_txt)
    return PChar(out, found_basis or "e")


__all__ = [
    "PChar", "TorusPoint", "act_circ", "act_bullet", "act_bullet_torus", "weyl_act_torus",
    "c_basis", "is_bullet_invariant", "is_circ_invariant", "evaluate", "e_to_chi", "chi_to_e",
    "format_pchar", "pchar_to_json", "pchar_from_json", "parse_pchar",
]
