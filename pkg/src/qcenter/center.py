"""Central characters, regularity and the root-of-unity level conditions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .charring import PChar, TorusPoint, act_bullet_torus, evaluate, is_bullet_invariant, weyl_act_torus
from .ring import CycScalar, LaurentPoly, RatFunc
from .rootdata import RootDatum, fundamental_group_order, lattice_index


class NotInvariantError(ValueError):
    """xi_har was handed a function outside the invariant subring."""


def xi_har(rd: RootDatum, t: TorusPoint, f: PChar):
    """Harish-Chandra character: evaluate a W.-invariant function at t."""
    if f.basis != "chi":
        raise ValueError("xi_har expects the chi-reading")
    if not is_bullet_invariant(rd, f):
        raise NotInvariantError("xi_har is only defined on W.-invariant functions")
    return evaluate(f, t)


def bullet_orbit(rd: RootDatum, t: TorusPoint) -> list:
    orbit = []
    for w in rd.weyl_elements():
        p = act_bullet_torus(rd, w, t)
        if not any(p == o for o in orbit):
            orbit.append(p)
    return orbit


def is_regular(rd: RootDatum, t: TorusPoint) -> bool:
    return len(bullet_orbit(rd, t)) == rd.weyl_order()


# -- level conditions --------------------------------------------------------

def prime_power_base(n: int):
    """Return p when n = p^k with k >= 1, else None."""
    if n < 2:
        return None
    p = next(d for d in itertools.count(2) if n % d == 0)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


@dataclass
class LevelReport:
    type: str
    ell: int
    a1: bool
    a2: bool
    a3: bool
    a4: bool | None
    a5: bool
    reasons: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.a1 and self.a2 and self.a3 and self.a5 and self.a4 is not False

    def to_json(self) -> dict:
        return {
            "type": self.type, "ell": self.ell,
            "a1": self.a1, "a2": self.a2, "a3": self.a3, "a4": self.a4, "a5": self.a5,
            "verdict": "accept" if self.verdict else "reject",
            "reasons": list(self.reasons),
        }


def check_level(rd: RootDatum, ell: int, h0: TorusPoint | None = None) -> LevelReport:
    if ell < 2:
        raise ValueError("level must be at least 2")
    a1 = ell % 2 == 1
    a2 = gcd(ell, fundamental_group_order(rd)) == 1
    a3 = not (rd.kind == "G" and ell % 3 == 0)
    a4 = None
    if h0 is not None:
        idx = q0_index(rd, h0)
        a4 = idx != 0 and gcd(ell, idx) == 1
    a5 = prime_power_base(ell) is not None
    reasons = [name for name, ok in (("a1", a1), ("a2", a2), ("a3", a3), ("a4", a4), ("a5", a5)) if ok is False]
    return LevelReport(rd.label, ell, a1, a2, a3, a4, a5, reasons)


# -- h0 data -----------------------------------------------------------------

def _is_one(v) -> bool:
    return v == 1


def scalar_order(v):
    """Multiplicative order of a torus coordinate, None if infinite."""
    if isinstance(v, CycScalar):
        return v.order()
    if isinstance(v, (int, LaurentPoly, RatFunc)):
        if v == 1:
            return 1
        if v == -1:
            return 2
        return None
    raise TypeError(f"unsupported scalar {type(v).__name__}")


def point_order(h0: TorusPoint):
    m = 1
    for v in h0.values:
        o = scalar_order(v)
        if o is None:
            return None
        m = m * o // gcd(m, o)
    return m


def delta0(rd: RootDatum, h0: TorusPoint) -> list:
    """Roots alpha (both signs, simple-root coordinates) with h0(chi_alpha) = 1."""
    if point_order(h0) is None:
        raise ValueError("h0 must have finite order")
    out = []
    for beta in rd.positive_roots:
        if _is_one(h0(rd.root_to_weight(beta))):
            out.append(tuple(beta))
            out.append(tuple(-c for c in beta))
    return out


def q0_index(rd: RootDatum, h0: TorusPoint) -> int:
    """|Q/Q0|, 0 when Q0 has smaller rank."""
    roots = [b for b in delta0(rd, h0) if any(c > 0 for c in b)]
    return lattice_index(rd, roots)


def _rank(rows) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for r in range(len(a)):
            if r != rk and a[r][c] != 0:
                f = a[r][c] / a[rk][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def is_exceptional(rd: RootDatum, h0: TorusPoint) -> bool:
    roots = delta0(rd, h0)
    return bool(roots) and _rank(roots) == rd.rank


def compatibility_witness(rd: RootDatum, t: TorusPoint, ell: int, h0: TorusPoint):
    """Return a Weyl element w with t^ell = w h0, or None."""
    target = t ** ell
    for w in rd.weyl_elements():
        if weyl_act_torus(rd, w, h0) == target:
            return w
    return None


def pair_compatible(rd: RootDatum, t: TorusPoint, ell: int, h0: TorusPoint) -> bool:
    return compatibility_witness(rd, t, ell, h0) is not None


def brute_force_index(rd: RootDatum, generators, box: int | None = None) -> int:
    """|Z^n / L| by counting cosets of lattice points in a box (small rank only)."""
    gens = [list(g) for g in generators]
    idx = lattice_index(rd, gens)
    if idx == 0:
        return 0
    box = box or idx
    n = rd.rank
    basis = _lattice_basis(gens, n)
    reps = []
    for pt in itertools.product(range(box), repeat=n):
        if not any(_in_lattice(basis, [a - b for a, b in zip(pt, r)]) for r in reps):
            reps.append(pt)
    return len(reps)


def _lattice_basis(gens, n):
    # integer row reduction (Hermite-style) to a basis
    a = [list(g) for g in gens if any(g)]
    basis = []
    col = 0
    while a and col < n:
        a = [r for r in a if any(r)]
        nz = [r for r in a if r[col] != 0]
        if not nz:
            col += 1
            continue
        while len([r for r in a if r[col] != 0]) > 1:
            nz = sorted([r for r in a if r[col] != 0], key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                f = r[col] // p[col]
                for k in range(n):
                    r[k] -= f * p[k]
        p = next(r for r in a if r[col] != 0)
        basis.append(p)
        a = [r for r in a if r is not p]
        col += 1
    return basis


def _in_lattice(basis, v) -> bool:
    v = list(v)
    for b in basis:
        col = next(k for k, x in enumerate(b) if x != 0)
        if v[col] % b[col]:
            return False
        f = v[col] // b[col]
        v = [x - f * y for x, y in zip(v, b)]
    return not any(v)


@dataclass
class CentralCharData:
    """Toral data (t, h0, ell) with the derived subsystem and index."""

    rd: RootDatum
    t: TorusPoint
    h0: TorusPoint
    ell: int
    delta0: list = field(default_factory=list)
    index: int = 0
    order: int | None = None

    @classmethod
    def make(cls, rd, t, h0, ell):
        d0 = delta0(rd, h0)
        return cls(rd, t, h0, ell, d0, q0_index(rd, h0), point_order(h0))

    def compatible(self) -> bool:
        return pair_compatible(self.rd, self.t, self.ell, self.h0)

    def exceptional(self) -> bool:
        return is_exceptional(self.rd, self.h0)

    def coefficient_level(self):
        """l*m for the ring Z[zeta_{lm}], with m the order of h0 (needs gcd(m, l) = 1)."""
        if self.order is None or gcd(self.order, self.ell) != 1:
            return None
        return self.ell * self.order
