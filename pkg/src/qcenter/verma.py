"""Weyl modules at generic q built from lowering words.

The module is grown one depth at a time.  At weight ``nu`` the spanning
candidates are ``f_i b`` for basis vectors ``b`` one step up; their Gram
matrix under the contravariant form (``<f_i x, y> = <x, e_i y>``,
``<v, v> = 1``) is computed from the e and f matrices already built, and a
greedy leftmost independent subset is kept.  Dividing by the radical of the
form is what cuts the Verma module down to the Weyl module.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .ring import LaurentPoly, RatFunc, qpow, quantum_factorial, quantum_int
from .rootdata import RootDatum, format_weight
from .uq import E, F, UElement, _as_elem, _int_exp, expand_divided, serre_element


class TruncationError(RuntimeError):
    """Raised when the depth cap stops the construction early."""


@dataclass
class LoweringWord:
    indices: tuple
    weight: tuple

    def __str__(self):
        return " ".join(f"f{i + 1}" for i in self.indices) + " v" if self.indices else "v"


@dataclass
class WeightSpace:
    weight: tuple
    basis: list
    gram: list


@dataclass
class WeylModuleRealization:
    rd: RootDatum
    lam: tuple
    spaces: dict = field(default_factory=dict)
    E: dict = field(default_factory=dict)  # (i, nu) -> matrix nu -> nu + alpha_i
    F: dict = field(default_factory=dict)  # (i, nu) -> matrix nu -> nu - alpha_i

    def dim(self, nu=None) -> int:
        if nu is None:
            return sum(len(s.basis) for s in self.spaces.values())
        s = self.spaces.get(tuple(nu))
        return len(s.basis) if s else 0

    def dims(self) -> dict:
        return {nu: len(s.basis) for nu, s in self.spaces.items()}

    def weights(self):
        return sorted(self.spaces, key=lambda nu: (-sum(self.rd.weight_to_root(tuple(a - b for a, b in zip(self.lam, nu)))), nu))

    def gram_det(self, nu):
        return linalg.det(self.spaces[tuple(nu)].gram)

    # -- operator matrices ------------------------------------------------
    def _shift(self, nu, i, sign):
        return tuple(a + sign * b for a, b in zip(nu, self.rd.simple_root(i)))

    def e_matrix(self, i, nu):
        nu = tuple(nu)
        up = self._shift(nu, i, 1)
        m = self.E.get((i, nu))
        if m is None:
            return linalg.zeros(self.dim(up), self.dim(nu))
        return m

    def f_matrix(self, i, nu):
        nu = tuple(nu)
        down = self._shift(nu, i, -1)
        m = self.F.get((i, nu))
        if m is None:
            return linalg.zeros(self.dim(down), self.dim(nu))
        return m

    def k_eigen(self, gamma, nu):
        """k_gamma acts on the nu-space by q^{(nu, gamma)}."""
        return qpow(_int_exp(self.rd.form(nu, gamma)))

    def apply_word(self, word, nu):
        """Matrix of a word (rightmost atom acts first) from nu; returns (target, matrix)."""
        n = self.dim(nu)
        cur = tuple(nu)
        mat = linalg.identity(n)
        for a in reversed(word):
            if a.kind == "K":
                s = self.k_eigen(a.weight, cur)
                mat = linalg.mat_scale(mat, s)
                continue
            for _ in range(a.power):
                if a.kind == "E":
                    op = self.e_matrix(a.index, cur)
                    nxt = self._shift(cur, a.index, 1)
                else:
                    op = self.f_matrix(a.index, cur)
                    nxt = self._shift(cur, a.index, -1)
                cur = nxt
                if not self.dim(cur) or not mat or not mat[0]:
                    mat = linalg.zeros(self.dim(cur), n)
                else:
                    mat = linalg.mat_mul(op, mat)
            if a.power > 1:
                mat = linalg.mat_scale(mat, RatFunc(1, quantum_factorial(a.power, self.rd.d[a.index])))
        return cur, mat

    def apply(self, elem, nu):
        """Matrix of a linear combination; all words must share a grading."""
        total = None
        target = None
        for w, c in _as_elem(elem).terms.items():
            tgt, m = self.apply_word(w, nu)
            m = linalg.mat_scale(m, c)
            if total is None:
                total, target = m, tgt
            else:
                if tgt != target:
                    raise ValueError("element is not homogeneous")
                total = linalg.mat_add(total, m)
        return target, total


def build_weyl_module(rd: RootDatum, lam, depth_cap: int | None = None) -> WeylModuleRealization:
    lam = tuple(lam)
    if not rd.is_dominant(lam):
        raise ValueError(f"weight {format_weight(lam)} is not dominant")
    mod = WeylModuleRealization(rd, lam)
    mod.spaces[lam] = WeightSpace(lam, [LoweringWord((), lam)], [[LaurentPoly(1)]])
    level = [lam]
    depth = 0
    while level:
        # weights one step down
        targets = {}
        for mu in level:
            for i in range(rd.rank):
                nu = mod._shift(mu, i, -1)
                targets.setdefault(nu, None)
        nxt = []
        for nu in sorted(targets, reverse=True):
            if _build_space(mod, nu):
                nxt.append(nu)
        if nxt and depth_cap is not None and depth >= depth_cap:
            raise TruncationError(
                f"depth cap {depth_cap} reached with nonzero weight spaces remaining; "
                f"need at least the height of lam - w0 lam")
        depth += 1
        level = nxt
    return mod


def _pair_into(mod, i, j, nu, bprime_idx):
    """Coordinates of e_i f_j b' in the (nu + alpha_i)-space, b' in the (nu + alpha_j)-space."""
    rd = mod.rd
    mu = mod._shift(nu, j, 1)           # weight of b'
    up = mod._shift(nu, i, 1)           # weight of e_i f_j b'
    n_up = mod.dim(up)
    vec = [0] * n_up
    if n_up == 0:
        return vec
    # f_j e_i b'
    top = mod._shift(mu, i, 1)
    if mod.dim(top):
        ei = mod.e_matrix(i, mu)
        col = [ei[r][bprime_idx] for r in range(len(ei))]
        fj = mod.f_matrix(j, top)
        for r in range(n_up):
            s = 0
            for k, x in enumerate(col):
                if x != 0 and fj[r][k] != 0:
                    s = s + fj[r][k] * x
            vec[r] = s
    if i == j:
        vec[bprime_idx] = vec[bprime_idx] + quantum_int(_int_exp(rd.pair_coroot(mu, i)), rd.d[i])
    return vec


def _build_space(mod, nu) -> bool:
    rd = mod.rd
    cands = []   # (i, index of b in the (nu + alpha_i)-space)
    for i in range(rd.rank):
        up = mod._shift(nu, i, 1)
        for b in range(mod.dim(up)):
            cands.append((i, b))
    if not cands:
        return False
    n = len(cands)
    gram = [[0] * n for _ in range(n)]
    cache = {}
    for s, (i, b) in enumerate(cands):
        up_i = mod._shift(nu, i, 1)
        g_up = mod.spaces[up_i].gram
        for t, (j, bp) in enumerate(cands):
            key = (i, j, bp)
            if key not in cache:
                cache[key] = _pair_into(mod, i, j, nu, bp)
            vec = cache[key]
            val = 0
            for k, x in enumerate(vec):
                if x != 0 and g_up[b][k] != 0:
                    val = val + g_up[b][k] * x
            gram[s][t] = _laurent(val)
    rr = linalg.RowReducer(n)
    chosen = [s for s in range(n) if rr.add(gram[s])]
    if not chosen:
        return False
    g = [[gram[s][t] for t in chosen] for s in chosen]
    basis = []
    for s in chosen:
        i, b = cands[s]
        up = mod._shift(nu, i, 1)
        basis.append(LoweringWord((i,) + mod.spaces[up].basis[b].indices, nu))
    mod.spaces[nu] = WeightSpace(nu, basis, g)
    # f_i: (nu + alpha_i) -> nu, columns in the chosen basis
    for i in range(rd.rank):
        up = mod._shift(nu, i, 1)
        d_up = mod.dim(up)
        if not d_up:
            continue
        cols = [cands.index((i, b)) for b in range(d_up)]
        rhs = [[gram[s][c] for c in cols] for s in chosen]
        mod.F[(i, up)] = linalg.solve(g, rhs)
    # e_i: nu -> nu + alpha_i, through e_i f_j b' for each basis vector f_j b'
    for i in range(rd.rank):
        up = mod._shift(nu, i, 1)
        d_up = mod.dim(up)
        if not d_up:
            continue
        mat = [[0] * len(chosen) for _ in range(d_up)]
        for c, s in enumerate(chosen):
            j, bp = cands[s]
            vec = _pair_into(mod, i, j, nu, bp)
            for r in range(d_up):
                mat[r][c] = vec[r]
        mod.E[(i, nu)] = mat
    return True


def _laurent(x):
    if isinstance(x, RatFunc):
        if not x.is_laurent():
            raise ArithmeticError(f"Gram entry {x} is not a Laurent polynomial")
        return x.num
    if isinstance(x, int):
        return LaurentPoly(x)
    return x


# -- relation checks ---------------------------------------------------------

def check_relations(mod: WeylModuleRealization) -> dict:
    """Exact checks of the defining relations; returns name -> bool."""
    rd = mod.rd
    out = {"k_commutation": True, "ef_commutator": True, "serre_plus": True,
           "serre_minus": True, "contravariance": True, "gram_symmetric": True}
    for nu, sp in mod.spaces.items():
        n = len(sp.basis)
        g = sp.gram
        if not linalg.mat_eq(g, linalg.transpose(g, n)):
            out["gram_symmetric"] = False
        for i in range(rd.rank):
            # k_gamma e_i = q^{(alpha_i, gamma)} e_i k_gamma on nu, for gamma = each alpha_j
            up = mod._shift(nu, i, 1)
            for j in range(rd.rank):
                gam = rd.simple_root(j)
                lhs = mod.k_eigen(gam, up)
                rhs = qpow(_int_exp(rd.form(rd.simple_root(i), gam))) * mod.k_eigen(gam, nu)
                if mod.dim(up) and lhs != rhs:
                    out["k_commutation"] = False
            for j in range(rd.rank):
                a = mod.apply(UElement.word(E(i), F(j)), nu)[1]
                b = mod.apply(UElement.word(F(j), E(i)), nu)[1]
                diff = linalg.mat_sub(a, b)
                expect = linalg.zeros(len(diff), n)
                if i == j:
                    s = quantum_int(_int_exp(rd.pair_coroot(nu, i)), rd.d[i])
                    expect = linalg.mat_scale(linalg.identity(n), s)
                if len(diff) != len(expect) or not linalg.mat_eq(diff, expect):
                    out["ef_commutator"] = False
            # contravariance: G_nu F_i = (G_up E_i)^T on the pair (up, nu)
            d_up = mod.dim(up)
            if d_up:
                lhs = linalg.mat_mul(g, mod.f_matrix(i, up))
                rhs = linalg.transpose(linalg.mat_mul(mod.spaces[up].gram, mod.e_matrix(i, nu)), n)
                if not linalg.mat_eq(lhs, rhs):
                    out["contravariance"] = False
        for i in range(rd.rank):
            for j in range(rd.rank):
                if i == j:
                    continue
                for side, key in (("plus", "serre_plus"), ("minus", "serre_minus")):
                    tgt, m = mod.apply(serre_element(rd, i, j, side), nu)
                    if not linalg.is_zero(m):
                        out[key] = False
    return out


# -- traces ------------------------------------------------------------------

def trace_against(mod: WeylModuleRealization, u) -> RatFunc:
    """Trace of u k_{-2 rho} on the module."""
    rd = mod.rd
    u = expand_divided(rd, u)
    total = RatFunc(0)
    for nu in mod.spaces:
        tgt, m = mod.apply(u, nu) if u.terms else (tuple(nu), [])
        if not u.terms or tgt != tuple(nu):
            continue
        tr = 0
        for r in range(len(m)):
            tr = tr + m[r][r]
        if tr != 0:
            total = total + tr * qpow(_int_exp(-2 * rd.form(nu, rd.rho)))
    return total


def theta_pairing(rd: RootDatum, c, probe) -> RatFunc:
    """<c, u> for c in the chi-reading and u a combination of Cartan monomials."""
    rhs = RatFunc(0)
    for w, coeff in _as_elem(probe).terms.items():
        if any(a.kind != "K" for a in w):
            raise ValueError("theta probes must be Cartan monomials")
        gamma = [0] * rd.rank
        for a in w:
            gamma = [x + y for x, y in zip(gamma, a.weight)]
        for nu, cv in c.terms.items():
            rhs = rhs + coeff * cv * qpow(_int_exp(rd.form(nu, gamma)))
    return rhs


def verify_theta(rd: RootDatum, lam, probes, mod: WeylModuleRealization | None = None) -> bool:
    """trace_against(k_mu) equals <c(lam), k_mu> for every probe."""
    from .charring import c_basis

    if mod is None:
        mod = build_weyl_module(rd, lam)
    c = c_basis(rd, lam)
    return all(trace_against(mod, p) == theta_pairing(rd, c, p) for p in probes)


def dims_csv(mod: WeylModuleRealization) -> str:
    rows = ["weight,dim,gram_det"]
    for nu in mod.weights():
        rows.append(f"\"{format_weight(nu)}\",{mod.dim(nu)},{mod.gram_det(nu)}")
    return "\n".join(rows) + "\n"
