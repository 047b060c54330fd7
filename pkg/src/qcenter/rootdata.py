"""Finite root systems of types A-G.

Weights are tuples of integers in the fundamental-weight basis; roots in
the simple-root basis are converted through the Cartan matrix.  The
invariant form is normalised so that short roots have squared length 2.
"""
from __future__ import annotations

import itertools

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod

Weight = tuple  # coordinates in the fundamental-weight basis


class RootDataError(ValueError):
    pass


def _dynkin(kind: str, n: int):
    """Return (d, edges) with d_i = (a_i, a_i)/2 and edges {(i, j): (a_i, a_j)}."""
    edges = {}

    def link(i, j, v):
        edges[(i, j)] = v
        edges[(j, i)] = v

    if kind == "A" and n >= 1:
        d = [1] * n
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif kind == "B" and n >= 2:
        d = [2] * (n - 1) + [1]
        for i in range(n - 1):
            link(i, i + 1, -2)
    elif kind == "C" and n >= 2:
        d = [1] * (n - 1) + [2]
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 2, n - 1, -2)
    elif kind == "D" and n >= 3:
        d = [1] * n
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif kind == "E" and n in (6, 7, 8):
        d = [1] * n
        # Bourbaki labels 1-3-4-5-6-7-8 with 2 attached to 4 (0-based here)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif kind == "F" and n == 4:
        d = [2, 2, 1, 1]
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif kind == "G" and n == 2:
        d = [1, 3]
        link(0, 1, -3)
    else:
        raise RootDataError(f"unknown finite type {kind}{n}")
    return d, edges


_CLASS_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def parse_type(label: str):
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
    if not m:
        raise RootDataError(f"bad type label {label!r}")
    return m.group(1).upper(), int(m.group(2))


@dataclass(frozen=True, eq=False)
class RootDatum:
    kind: str
    rank: int
    cartan: tuple  # a_ij = (alpha_j, alpha_i^vee)
    d: tuple
    sym: tuple  # (alpha_i, alpha_j)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    def __repr__(self):
        return f"RootDatum({self.label})"

    # -- lattices -----------------------------------------------------------
    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (column i of the Cartan matrix)."""
        return tuple(self.cartan[k][i] for k in range(self.rank))

    @cached_property
    def simple_roots(self) -> tuple:
        return tuple(self.simple_root(i) for i in range(self.rank))

    @cached_property
    def fundamental_weights(self) -> tuple:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _inv_cartan(self):
        return _mat_inverse([[Fraction(x) for x in row] for row in self.cartan])

    @cached_property
    def weight_form(self):
        """Gram matrix (w_i, w_j) = d_i (A^-1)_{ij}."""
        inv = self._inv_cartan
        return tuple(tuple(self.d[i] * inv[i][j] for j in range(self.rank)) for i in range(self.rank))

    def form(self, lam, mu) -> Fraction:
        """(lam, mu) for weights given in fundamental-weight coordinates (rational allowed)."""
        g = self.weight_form
        total = Fraction(0)
        for i, a in enumerate(lam):
            if a:
                row = g[i]
                for j, b in enumerate(mu):
                    if b:
                        total += a * row[j] * b
        return total

    def pair_coroot(self, lam, i: int):
        """(lam, alpha_i^vee), i.e. the i-th coordinate."""
        return lam[i]

    def root_to_weight(self, c) -> Weight:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        out = []
        for k in range(self.rank):
            out.append(_clean(sum(self.cartan[k][j] * c[j] for j in range(self.rank))))
        return tuple(out)

    def weight_to_root(self, lam) -> tuple:
        """Simple-root coordinates of a weight (Fractions)."""
        inv = self._inv_cartan
        return tuple(_clean(sum(inv[j][k] * lam[k] for k in range(self.rank))) for j in range(self.rank))

    def in_root_lattice(self, lam) -> bool:
        return all(getattr(c, "denominator", 1) == 1 for c in self.weight_to_root(lam))

    def height(self, lam):
        return _clean(sum(self.weight_to_root(lam)))

    def is_dominant(self, lam) -> bool:
        return all(c >= 0 for c in lam)

    def coroot(self, i: int) -> Weight:
        """alpha_i^vee as an element of h* (fundamental-weight coordinates, rational)."""
        return tuple(_clean(Fraction(x, self.d[i])) for x in self.simple_root(i))

    # -- roots --------------------------------------------------------------
    @cached_property
    def positive_roots(self) -> tuple:
        """Positive roots in simple-root coordinates, sorted by height."""
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            lam = self.root_to_weight(beta)
            for i in range(n):
                c = lam[i]
                if c == 0:
                    continue
                new = list(beta)
                new[i] -= c
                new = tuple(new)
                if all(x >= 0 for x in new) and new not in seen:
                    seen.add(new)
                    queue.append(new)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    @cached_property
    def positive_root_weights(self) -> tuple:
        return tuple(self.root_to_weight(r) for r in self.positive_roots)

    def root_d(self, beta) -> int:
        """(beta, beta)/2 for a root in simple-root coordinates."""
        lam = self.root_to_weight(beta)
        return int(self.form(lam, lam) / 2)

    def pair_root_coroot(self, lam, beta) -> Fraction:
        """(lam, beta^vee) for a root beta in simple-root coordinates."""
        total = sum(Fraction(beta[j] * self.d[j]) * lam[j] for j in range(self.rank))
        return _clean(total / self.root_d(beta))

    @cached_property
    def rho(self) -> Weight:
        return tuple([1] * self.rank)

    @cached_property
    def highest_root(self):
        return self.positive_roots[-1]

    # -- Weyl group ---------------------------------------------------------
    def reflect(self, lam, i: int):
        """s_i(lam) = lam - (lam, alpha_i^vee) alpha_i."""
        c = lam[i]
        if c == 0:
            return tuple(lam)
        col = [self.cartan[k][i] for k in range(self.rank)]
        return tuple(_clean(lam[k] - c * col[k]) for k in range(self.rank))

    def act(self, word, lam):
        """Apply s_{w1} s_{w2} ... s_{wk} to lam (rightmost first)."""
        for i in reversed(word):
            lam = self.reflect(lam, i)
        return tuple(lam)

    def dot(self, word, lam):
        """Dot action w.lam = w(lam + rho) - rho."""
        shifted = tuple(a + 1 for a in lam)
        return tuple(_clean(a - 1) for a in self.act(word, shifted))

    def to_dominant(self, lam):
        """Return ``(dominant, word)`` with ``act(word, lam) == dominant``."""
        lam = tuple(lam)
        word = []
        while True:
            for i, c in enumerate(lam):
                if c < 0:
                    lam = self.reflect(lam, i)
                    word.append(i)
                    break
            else:
                return lam, tuple(reversed(word))

    def element(self, word) -> "WeylElement":
        return WeylElement.from_word(self, word)

    def weyl_elements(self) -> list:
        """All elements of W, with shortest words, in BFS (length) order."""
        key = "weyl_elements"
        if key not in self._cache:
            if self.weyl_order() > 100000:
                raise RootDataError(f"|W| = {self.weyl_order()} too large to enumerate")
            rho = self.rho
            seen = {rho: ()}
            queue = deque([rho])
            order = [()]
            while queue:
                v = queue.popleft()
                w = seen[v]
                for i in range(self.rank):
                    if v[i] > 0:  # length increases
                        nv = self.reflect(v, i)
                        if nv not in seen:
                            seen[nv] = (i,) + w
                            order.append((i,) + w)
                            queue.append(nv)
            self._cache[key] = [WeylElement(self, word) for word in order]
        return self._cache[key]

    def weyl_order(self) -> int:
        """|W| via the product formula |W| = prod (1 + ht)-style degrees."""
        degrees = _weyl_degrees(self.kind, self.rank)
        return prod(degrees)

    def longest_element(self) -> "WeylElement":
        neg_rho = tuple(-x for x in self.rho)
        _, word = self.to_dominant(neg_rho)
        return WeylElement(self, tuple(reversed(word)))


def _weyl_degrees(kind, n):
    if kind == "A":
        return list(range(2, n + 2))
    if kind in "BC":
        return list(range(2, 2 * n + 1, 2))
    if kind == "D":
        return list(range(2, 2 * n - 1, 2)) + [n]
    return {
        ("E", 6): [2, 5, 6, 8, 9, 12],
        ("E", 7): [2, 6, 8, 10, 12, 14, 18],
        ("E", 8): [2, 8, 12, 14, 18, 20, 24, 30],
        ("F", 4): [2, 6, 8, 12],
        ("G", 2): [2, 6],
    }[(kind, n)]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Weyl group element kept as a reduced word; equality via the image of rho."""

    rd: RootDatum
    word: tuple

    @classmethod
    def from_word(cls, rd, word):
        image = rd.act(tuple(word), rd.rho)
        return cls.from_rho_image(rd, image)

    @classmethod
    def from_rho_image(cls, rd, image):
        _, word = rd.to_dominant(image)
        # act(word, image) == rho, so the element is word^{-1}
        return cls(rd, tuple(reversed(word)))

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def rho_image(self):
        return self.rd.act(self.word, self.rd.rho)

    def __call__(self, lam):
        return self.rd.act(self.word, lam)

    def dot(self, lam):
        return self.rd.dot(self.word, lam)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement.from_word(self.rd, self.word + other.word)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rd, tuple(reversed(self.word)))

    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __eq__(self, other):
        return isinstance(other, WeylElement) and other.rd is self.rd and other.rho_image == self.rho_image

    def __hash__(self):
        return hash(self.rho_image)

    def __repr__(self):
        w = "".join(f"s{i + 1}" for i in self.word) or "id"
        return f"<{w}>"


_REGISTRY: dict = {}


def build(kind: str, rank: int | None = None) -> RootDatum:
    """Root datum for a finite type, e.g. ``build("B", 2)`` or ``build("G2")``."""
    if rank is None:
        kind, rank = parse_type(kind)
    kind = kind.upper()
    key = (kind, rank)
    if key in _REGISTRY:
        return _REGISTRY[key]
    d, edges = _dynkin(kind, rank)
    sym = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        sym[i][i] = 2 * d[i]
    for (i, j), v in edges.items():
        sym[i][j] = v
    cartan = [[sym[i][j] // d[i] for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(rank):
            if sym[i][j] % d[i]:
                raise RootDataError("inconsistent Dynkin data")
    rd = RootDatum(kind, rank, tuple(map(tuple, cartan)), tuple(d), tuple(map(tuple, sym)))
    if len(rd.positive_roots) != _CLASS_COUNT[kind](rank):
        raise RootDataError(f"root count mismatch for {rd.label}")
    _REGISTRY[key] = rd
    return rd


def fundamental_group_order(rd: RootDatum) -> int:
    """|P/Q| as the product of the elementary divisors of the Cartan matrix."""
    return prod(elementary_divisors([list(r) for r in rd.cartan]))


def lattice_index(rd: RootDatum, generators) -> int:
    """Index of the sublattice of Q spanned by roots (simple-root coordinates); 0 if infinite."""
    rows = [list(g) for g in generators]
    if not rows:
        return 0
    divs = elementary_divisors(rows)
    if len(divs) < rd.rank:
        return 0
    return prod(divs)


def weyl_orbit(rd: RootDatum, lam) -> set:
    lam = tuple(lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        v = queue.popleft()
        for i in range(rd.rank):
            nv = rd.reflect(v, i)
            if nv not in seen:
                seen.add(nv)
                queue.append(nv)
    return seen


def root_lattice_ball(rd: RootDatum, radius: int) -> list:
    """Weights sum c_i alpha_i of Q with sum |c_i| <= radius."""
    out = []
    for c in itertools.product(range(-radius, radius + 1), repeat=rd.rank):
        if sum(abs(x) for x in c) <= radius:
            out.append(rd.root_to_weight(c))
    return out


def parse_weight(text: str, rank: int | None = None) -> Weight:
    parts = [p for p in re.split(r"[,\s]+", text.strip().strip("()[]")) if p]
    try:
        w = tuple(_clean(Fraction(p)) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad weight literal {text!r}") from exc
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {text!r} needs {rank} coordinates")
    return w


def format_weight(lam) -> str:
    return ",".join(str(x) for x in lam)


# -- small exact linear algebra ------------------------------------------------

def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _mat_inverse(m):
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def elementary_divisors(rows) -> list:
    """Nonzero elementary divisors of an integer matrix (Smith normal form)."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    m, n = len(a), len(a[0])
    divs = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if not done:
                nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                      if a[i][j] and (i == t or j == t)]
                _, pi, pj = min(nz)
                a[t], a[pi] = a[pi], a[t]
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                continue
            # divisibility condition
            bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]]
            if bad:
                i, _ = bad[0]
                a[t] = [x + y for x, y in zip(a[t], a[i])]
                done = False
        divs.append(abs(a[t][t]))
        t += 1
    return divs
