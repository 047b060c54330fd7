"""Weight combinatorics of induction and the truncated main identity.

Throughout, the cutoff ``N`` bounds the principal height
``<mu, 2 rho_check> = sum over positive roots beta of <mu, beta_check>``,
which is an integer on the whole weight lattice and equals twice the usual
root height on Q.  In type A1 it is just the fundamental coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .repchar import FormalChar, freudenthal, kostant_partition, weyl_euler
from .rootdata import RootDatum, format_weight
from .verma import TruncationError


def principal_height(rd: RootDatum, mu) -> int:
    h = sum(rd.pair_root_coroot(mu, beta) for beta in rd.positive_roots)
    if getattr(h, "denominator", 1) != 1:
        raise ValueError("principal height is integral on P")
    return int(h)


@dataclass
class GradedDims:
    """Weight -> dimension, known exactly at every weight of principal height <= cutoff.

    ``cutoff=None`` means the table is exact everywhere (finite support).
    """

    dims: dict = field(default_factory=dict)
    cutoff: int | None = None

    def __getitem__(self, mu):
        return self.dims.get(tuple(mu), 0)

    def known(self, rd, mu) -> bool:
        return self.cutoff is None or principal_height(rd, mu) <= self.cutoff

    def __add__(self, other: "GradedDims") -> "GradedDims":
        out = dict(self.dims)
        for k, v in other.dims.items():
            out[k] = out.get(k, 0) + v
        cut = [c for c in (self.cutoff, other.cutoff) if c is not None]
        return GradedDims({k: v for k, v in out.items() if v}, min(cut) if cut else None)

    @classmethod
    def delta(cls, mu):
        return cls({tuple(mu): 1})


@dataclass
class EulerChar:
    char: FormalChar
    cutoff: int | None
    complete: frozenset = frozenset()


def ind_bh_weight_dims(rd: RootDatum, M: GradedDims, xi, N: int | None = None) -> int:
    """sum over gamma in Q+ of P(gamma) M(xi - gamma)."""
    xi = tuple(xi)
    if not M.known(rd, xi):
        raise TruncationError(f"M is only known up to height {M.cutoff}; weight {format_weight(xi)} is above it")
    total = 0
    for mu, m in M.dims.items():
        if not m:
            continue
        diff = tuple(a - b for a, b in zip(xi, mu))
        if not rd.in_root_lattice(diff):
            continue
        gamma = rd.weight_to_root(diff)
        if any(c < 0 for c in gamma):
            continue
        if N is not None and principal_height(rd, diff) > N:
            continue
        total += kostant_partition(rd, gamma) * m
    return total


def adjoint_bminus_char(rd: RootDatum, N: int) -> GradedDims:
    """mu -> P(mu) on Q+ up to principal height N."""
    out = {}
    simple_h = [principal_height(rd, rd.simple_root(i)) for i in range(rd.rank)]
    bounds = [N // h for h in simple_h]

    def rec(i, coords, height):
        if i == rd.rank:
            mu = rd.root_to_weight(coords)
            out[tuple(mu)] = kostant_partition(rd, coords)
            return
        for c in range(bounds[i] + 1):
            if height + c * simple_h[i] > N:
                break
            rec(i + 1, coords + (c,), height + c * simple_h[i])

    rec(0, (), 0)
    return GradedDims({k: v for k, v in out.items() if v}, N)


def _dot_orbit(rd, lam):
    return {w.dot(lam) for w in rd.weyl_elements()}


def euler_rind(rd: RootDatum, hchar: GradedDims, N: int | None = None) -> EulerChar:
    """sum_mu hchar(mu) weyl_euler(mu) with completeness bookkeeping."""
    cut = hchar.cutoff if N is None else (N if hchar.cutoff is None else min(N, hchar.cutoff))
    acc = FormalChar()
    for mu, m in sorted(hchar.dims.items()):
        if cut is not None and principal_height(rd, mu) > cut:
            continue
        if m:
            acc = acc + m * weyl_euler(rd, mu)
    complete = set()
    for lam, _ in acc.coeffs:
        if cut is None or all(principal_height(rd, nu) <= cut for nu in _dot_orbit(rd, lam)):
            complete.add(lam)
    return EulerChar(acc, cut, frozenset(complete))


def dominant_in_root_lattice(rd: RootDatum, N: int):
    """Dominant weights in Q with principal height <= N."""
    out = []
    bound = N
    fund_h = [principal_height(rd, w) for w in rd.fundamental_weights]

    def rec(i, coords, height):
        if i == rd.rank:
            if rd.in_root_lattice(coords):
                out.append(tuple(coords))
            return
        c = 0
        while height + c * fund_h[i] <= bound:
            rec(i + 1, coords + (c,), height + c * fund_h[i])
            c += 1

    rec(0, (), 0)
    return sorted(out)


@dataclass
class MainIdentityReport:
    type: str
    cutoff: int
    lhs: dict
    rhs: dict
    complete: list
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def rows(self):
        for lam in self.complete:
            a, b = self.lhs.get(lam, 0), self.rhs.get(lam, 0)
            yield lam, a, b, a == b


def verify_main_identity_truncated(rd: RootDatum, N: int) -> MainIdentityReport:
    """Compare sum m0(lam) ch(lam) with the Euler characteristic of the adjoint B- character."""
    rhs_e = euler_rind(rd, adjoint_bminus_char(rd, N), N)
    rhs = rhs_e.char.as_dict()
    lhs = {}
    for lam in dominant_in_root_lattice(rd, N):
        m0 = freudenthal(rd, lam)[tuple(0 for _ in range(rd.rank))]
        if m0:
            lhs[lam] = m0
    # a weight is complete when its whole dot-orbit lies under the cutoff
    complete = sorted(lam for lam in set(lhs) | set(rhs)
                      if all(principal_height(rd, nu) <= N for nu in _dot_orbit(rd, lam)))
    mismatches = [lam for lam in complete if lhs.get(lam, 0) != rhs.get(lam, 0)]
    return MainIdentityReport(rd.label, N, lhs, rhs, complete, mismatches)
