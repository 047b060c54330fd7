"""Deterministic invariant suite behind ``qcenter selftest``.

Each check returns ``(name, ok, detail)``; the detail string never contains
timings so that two runs with the same seed print identical reports.
"""
from __future__ import annotations

import random

from . import rootdata
from .center import check_level, is_regular, xi_har
from .charring import (
    PChar, TorusPoint, act_bullet, act_bullet_torus, act_circ, c_basis, chi_to_e, e_to_chi,
    is_bullet_invariant,
)
from .drinfeld import serre_certificate, tau
from .induction import verify_main_identity_truncated
from .repchar import freudenthal, tensor_decompose, weyl_dim
from .ring import Q, cyclotomic
from .springer import partitions, springer_total_cohomology_dim
from .uq import E, F, K, UElement
from .verma import build_weyl_module, check_relations, verify_theta


def random_word(rng: random.Random, rd, side: str, length: int):
    """Random plus- or minus-side word with K atoms in Q."""
    gen = E if side == "plus" else F
    atoms = []
    for _ in range(length):
        if rng.random() < 0.3:
            coeffs = [rng.randint(-1, 1) for _ in range(rd.rank)]
            atoms.append(K(rd.root_to_weight(coeffs)))
        else:
            atoms.append(gen(rng.randrange(rd.rank)))
    return tuple(atoms)


def matched_pair(rng: random.Random, rd, length: int):
    """A plus word and a shuffled minus word of the same grading."""
    x = random_word(rng, rd, "plus", length)
    letters = [F(a.index) for a in x if a.kind == "E"]
    rng.shuffle(letters)
    y = []
    for a in letters:
        if rng.random() < 0.3:
            coeffs = [rng.randint(-1, 1) for _ in range(rd.rank)]
            y.append(K(rd.root_to_weight(coeffs)))
        y.append(a)
    return x, tuple(y)


def _check(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported by name
        return name, False, f"error: {type(exc).__name__}: {exc}"
    return name, bool(ok), detail


def run(seed: int = 0):
    rng = random.Random(seed)
    results = []

    def pairing_order():
        n = 0
        for label in ("A2", "B2", "G2"):
            rd = rootdata.build(label)
            for _ in range(40):
                x, y = matched_pair(rng, rd, rng.randint(1, 4))
                X, Y = UElement.word(*x), UElement.word(*y)
                if tau(rd, X, Y, "y") != tau(rd, X, Y, "x"):
                    return False, f"{label}: orders differ"
                n += 1
        return True, f"{n} random pairs"

    def serre():
        n = 0
        for label in ("A2", "B2", "G2"):
            rd = rootdata.build(label)
            for i in range(2):
                for j in range(2):
                    if i != j:
                        for side in ("plus", "minus"):
                            if not serre_certificate(rd, i, j, side):
                                return False, f"{label} ({i + 1},{j + 1}) {side}"
                            n += 1
        return True, f"{n} bare certificates"

    def modules():
        n = 0
        for label, lams in (("A1", [(0,), (1,), (3,)]), ("A2", [(1, 0), (1, 1)]), ("B2", [(1, 0), (0, 1), (1, 1)])):
            rd = rootdata.build(label)
            for lam in lams:
                mod = build_weyl_module(rd, lam)
                if mod.dims() != freudenthal(rd, lam).mults or mod.dim() != weyl_dim(rd, lam):
                    return False, f"{label} {lam}: dimensions"
                if not all(check_relations(mod).values()):
                    return False, f"{label} {lam}: relations"
                n += 1
        return True, f"{n} modules"

    def theta():
        rd = rootdata.build("A2")
        probes = [UElement.word(K(rd.simple_root(0))), UElement.word(K(rd.simple_root(1)))]
        return verify_theta(rd, (1, 0), probes) and verify_theta(rd, (1, 1), probes), "A2 (1,0), (1,1)"

    def twisted():
        for label in ("A1", "A2", "B2"):
            rd = rootdata.build(label)
            ws = rd.weyl_elements()
            for _ in range(10):
                lam = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
                f = PChar.monomial(tuple(2 * x for x in lam), "e", Q ** rng.randint(-2, 2))
                w1, w2 = rng.choice(ws), rng.choice(ws)
                if act_circ(rd, w1 * w2, f) != act_circ(rd, w1, act_circ(rd, w2, f)):
                    return False, f"{label}: circ group law"
                if e_to_chi(act_circ(rd, w1, f)) != act_bullet(rd, w1, e_to_chi(f)):
                    return False, f"{label}: intertwiner"
            for lam in [(1,) * rd.rank, (2,) + (0,) * (rd.rank - 1)]:
                c = c_basis(rd, lam)
                if not is_bullet_invariant(rd, c):
                    return False, f"{label}: c({lam}) not invariant"
                t = TorusPoint([1 + Q ** (k + 1) for k in range(rd.rank)])
                base = xi_har(rd, t, c)
                for w in ws:
                    if xi_har(rd, act_bullet_torus(rd, w, t), c) != base:
                        return False, f"{label}: xi not constant on orbit"
        a1 = rootdata.build("A1")
        if is_regular(a1, TorusPoint([Q])) or not is_regular(a1, TorusPoint([Q ** 3])):
            return False, "A1 regularity"
        return True, "A1, A2, B2"

    def main_identity():
        r1 = verify_main_identity_truncated(rootdata.build("A1"), 8)
        r2 = verify_main_identity_truncated(rootdata.build("A2"), 6)
        rho = (1, 1)
        ok = r1.ok and r2.ok and r2.lhs.get(rho) == 2 and r2.rhs.get(rho) == 2
        return ok, f"A1 N=8: {len(r1.complete)} weights, A2 N=6: {len(r2.complete)} weights"

    def levels():
        table = {("G2", 9): "a3", ("A2", 9): "a2", ("A1", 25): None, ("A1", 15): "a5"}
        for (label, ell), reason in table.items():
            rep = check_level(rootdata.build(label), ell)
            if reason is None and not rep.verdict:
                return False, f"{label} {ell}"
            if reason is not None and (rep.verdict or reason not in rep.reasons):
                return False, f"{label} {ell}"
        for pk, p in ((4, 2), (8, 2), (9, 3), (25, 5), (27, 3)):
            if cyclotomic(pk)(1) != p:
                return False, f"Phi_{pk}(1)"
        return True, "decision table and cyclotomic values"

    def springer():
        from math import factorial

        for n in range(1, 9):
            if springer_total_cohomology_dim((n,)) != 1 or springer_total_cohomology_dim((1,) * n) != factorial(n):
                return False, f"n={n}"
        for n in range(1, 7):
            ps = partitions(n)
            for a in ps:
                for b in ps:
                    if a.dominates(b) and springer_total_cohomology_dim(a) > springer_total_cohomology_dim(b):
                        return False, f"{a} vs {b}"
        return springer_total_cohomology_dim((2, 1)) == 3, "n <= 8"

    def tensor():
        rd = rootdata.build("A2")
        for _ in range(5):
            lam = tuple(rng.randint(0, 2) for _ in range(2))
            mu = tuple(rng.randint(0, 2) for _ in range(2))
            dec = tensor_decompose(rd, lam, mu)
            if sum(c * weyl_dim(rd, nu) for nu, c in dec.items()) != weyl_dim(rd, lam) * weyl_dim(rd, mu):
                return False, f"{lam} x {mu}"
        return True, "5 random A2 pairs"

    checks = [
        ("tau recursion order", pairing_order),
        ("serre certificates", serre),
        ("weyl modules", modules),
        ("quantum trace", theta),
        ("twisted actions", twisted),
        ("main identity shadow", main_identity),
        ("level conditions", levels),
        ("springer dimensions", springer),
        ("tensor products", tensor),
    ]
    for name, fn in checks:
        results.append(_check(name, fn))
    return results


def report(seed: int = 0) -> tuple[str, bool]:
    results = run(seed)
    lines = [f"selftest seed={seed}"]
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    ok = all(r[1] for r in results)
    lines.append(f"{sum(r[1] for r in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", ok


__all__ = ["run", "report", "random_word", "matched_pair", "chi_to_e"]
