"""Characters of Weyl modules.

Kostant's partition function, Freudenthal multiplicities, the Weyl
dimension formula, Brauer-Klimyk tensor products and the signed Euler
operator ``mu -> (-1)^l(w) ch(w.mu)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .charring import PChar
from .rootdata import RootDatum, format_weight, weyl_orbit


def kostant_partition(rd: RootDatum, gamma) -> int:
    """Number of ways to write ``gamma`` (simple-root coordinates) as a sum of positive roots."""
    gamma = tuple(int(x) for x in gamma)
    if any(x < 0 for x in gamma):
        return 0
    return _kostant(rd.label, tuple(rd.positive_roots), gamma)


@lru_cache(maxsize=None)
def _kostant(label, roots, gamma):
    # count multisets: peel the roots in a fixed order
    return _kp_rec(roots, len(roots), gamma)


@lru_cache(maxsize=None)
def _kp_rec(roots, n, gamma):
    if not any(gamma):
        return 1
    if n == 0:
        return 0
    beta = roots[n - 1]
    total = 0
    cur = gamma
    while all(x >= 0 for x in cur):
        total += _kp_rec(roots, n - 1, cur)
        cur = tuple(a - b for a, b in zip(cur, beta))
    return total


@dataclass
class WeightMultTable:
    lam: tuple
    mults: dict = field(default_factory=dict)

    def __getitem__(self, mu):
        return self.mults.get(tuple(mu), 0)

    def dim(self) -> int:
        return sum(self.mults.values())

    def character(self) -> PChar:
        return PChar(dict(self.mults), "e")

    def to_csv(self) -> str:
        rows = ["weight,multiplicity"]
        for mu, m in sorted(self.mults.items(), reverse=True):
            rows.append(f"\"{format_weight(mu)}\",{m}")
        return "\n".join(rows) + "\n"


def _require_dominant(rd, lam):
    lam = tuple(lam)
    if not rd.is_dominant(lam):
        raise ValueError(f"weight {format_weight(lam)} is not dominant")
    return lam


def freudenthal(rd: RootDatum, lam) -> WeightMultTable:
    lam = _require_dominant(rd, lam)
    return WeightMultTable(lam, dict(_freudenthal(rd, lam)))


@lru_cache(maxsize=256)
def _freudenthal(rd: RootDatum, lam):
    pos = rd.positive_root_weights
    rho = rd.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    norm_lr = rd.form(lr, lr)
    # dominant weights below lam, processed by increasing depth
    levels = [[lam]]
    seen = {lam}
    while levels[-1]:
        nxt = []
        for mu in levels[-1]:
            for i in range(rd.rank):
                nu = tuple(a - b for a, b in zip(mu, rd.simple_root(i)))
                if nu not in seen and _in_hull(rd, lam, nu):
                    seen.add(nu)
                    nxt.append(nu)
        levels.append(nxt)
    mults = {lam: 1}

    def mult(mu):
        return mults.get(rd.to_dominant(mu)[0], 0)

    for level in levels[1:]:
        for mu in level:
            if not rd.is_dominant(mu):
                continue
            mr = tuple(a + b for a, b in zip(mu, rho))
            den = norm_lr - rd.form(mr, mr)
            if den == 0:
                continue
            s = Fraction(0)
            for beta in pos:
                k = 1
                while True:
                    nu = tuple(a + k * b for a, b in zip(mu, beta))
                    if not _in_hull(rd, lam, nu):
                        break
                    m = mult(nu)
                    if m:
                        s += m * rd.form(nu, beta)
                    k += 1
            val = 2 * s / den
            if val.denominator != 1:
                raise ArithmeticError("Freudenthal recursion produced a non-integer")
            if val:
                mults[mu] = int(val)
    out = {}
    for mu, m in mults.items():
        for nu in weyl_orbit(rd, mu):
            out[nu] = m
    return tuple(sorted(out.items()))


def _in_hull(rd, lam, nu) -> bool:
    """nu lies in the weight set of Delta(lam): its dominant conjugate is in lam - Q+."""
    d, _ = rd.to_dominant(nu)
    diff = tuple(a - b for a, b in zip(lam, d))
    if not rd.in_root_lattice(diff):
        return False
    return all(c >= 0 for c in rd.weight_to_root(diff))


def weyl_dim(rd: RootDatum, lam) -> int:
    lam = tuple(lam)
    lr = tuple(a + b for a, b in zip(lam, rd.rho))
    num = Fraction(1)
    for beta in rd.positive_root_weights:
        num *= rd.form(lr, beta) / rd.form(rd.rho, beta)
    if num.denominator != 1:
        raise ArithmeticError("Weyl dimension is not an integer")
    return int(num)


@dataclass(frozen=True)
class FormalChar:
    """A Z-combination of characters ch(nabla(lam)), keyed by dominant weight."""

    coeffs: tuple = ()

    @classmethod
    def of(cls, mapping):
        return cls(tuple(sorted((tuple(k), v) for k, v in mapping.items() if v)))

    def as_dict(self):
        return dict(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs:
            out[k] = out.get(k, 0) + v
        return FormalChar.of(out)

    def __neg__(self):
        return FormalChar(tuple((k, -v) for k, v in self.coeffs))

    def __rmul__(self, n: int):
        return FormalChar.of({k: n * v for k, v in self.coeffs})

    def is_zero(self):
        return not self.coeffs

    def character(self, rd: RootDatum) -> PChar:
        total = PChar({}, "e")
        for lam, c in self.coeffs:
            total = total + freudenthal(rd, lam).character().scale(c)
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*ch[{format_weight(k)}]" for k, c in self.coeffs)


ZERO_CHAR = FormalChar()


def dot_to_dominant(rd: RootDatum, mu):
    """Return ``(w, nu)`` with ``nu = w.mu`` dominant, or ``None`` when mu+rho is singular."""
    mu = tuple(mu)
    mr = tuple(a + b for a, b in zip(mu, rd.rho))
    for beta in rd.positive_roots:
        if rd.pair_root_coroot(mr, beta) == 0:
            return None
    dom, word = rd.to_dominant(mr)
    return rd.element(word), tuple(a - b for a, b in zip(dom, rd.rho))


def weyl_euler(rd: RootDatum, mu) -> FormalChar:
    res = dot_to_dominant(rd, mu)
    if res is None:
        return ZERO_CHAR
    w, nu = res
    return FormalChar.of({nu: w.sign()})


def tensor_decompose(rd: RootDatum, lam, mu) -> dict:
    """Brauer-Klimyk over the smaller factor's weights."""
    lam = _require_dominant(rd, lam)
    mu = _require_dominant(rd, mu)
    if weyl_dim(rd, lam) < weyl_dim(rd, mu):
        lam, mu = mu, lam
    out = {}
    for nu, m in freudenthal(rd, mu).mults.items():
        fc = weyl_euler(rd, tuple(a + b for a, b in zip(lam, nu)))
        for k, c in fc.coeffs:
            out[k] = out.get(k, 0) + m * c
    return {k: v for k, v in sorted(out.items()) if v}
