"""Small dense matrices over Z[q, q^-1] and Q(q)."""
from __future__ import annotations

from .ring import LaurentPoly, RatFunc, laurent_gcd


def zeros(r: int, c: int):
    return [[0] * c for _ in range(r)]


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def shape(m):
    return len(m), (len(m[0]) if m else 0)


def mat_mul(a, b, inner: int | None = None):
    """Product; ``inner`` gives the shared size when one factor is empty."""
    r = len(a)
    c = len(b[0]) if b else 0
    n = len(b) if inner is None else inner
    out = [[0] * c for _ in range(r)]
    for i in range(r):
        ai = a[i]
        for k in range(n):
            x = ai[k]
            if x == 0:
                continue
            bk = b[k]
            row = out[i]
            for j in range(c):
                y = bk[j]
                if y != 0:
                    row[j] = row[j] + x * y
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[s * x for x in row] for row in a]


def transpose(a, rows: int | None = None):
    if not a:
        return [[] for _ in range(rows or 0)]
    return [list(col) for col in zip(*a)]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)) and len(a) == len(b)


def _to_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    if isinstance(x, RatFunc):
        return x.to_laurent()
    raise TypeError(f"expected Laurent entry, got {type(x).__name__}")


class RowReducer:
    """Incremental fraction-free elimination over Z[q, q^-1].

    ``add(row)`` returns True and keeps the row when it is independent of
    the rows kept so far.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots = []  # (col, reduced row)

    def reduce(self, row):
        r = [_to_laurent(x) for x in row]
        for col, prow in self.pivots:
            c = r[col]
            if c:
                p = prow[col]
                r = [p * x - c * y for x, y in zip(r, prow)]
                g = None
                for x in r:
                    if x:
                        g = x if g is None else laurent_gcd(g, x)
                if g is not None and not g.is_unit():
                    r = [x.exact_div(g) if x else x for x in r]
        return r

    def add(self, row) -> bool:
        r = self.reduce(row)
        for col, x in enumerate(r):
            if x:
                self.pivots.append((col, r))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(m) -> int:
    if not m:
        return 0
    rr = RowReducer(len(m[0]))
    for row in m:
        rr.add(row)
    return rr.rank


def det(m):
    """Determinant by Gaussian elimination over Q(q)."""
    n = len(m)
    if n == 0:
        return 1
    a = [[RatFunc._coerce(x) if not isinstance(x, RatFunc) else x for x in row] for row in m]
    sign = 1
    result = RatFunc(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return RatFunc(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        result = result * p
        inv = p.inverse()
        for r in range(c + 1, n):
            f = a[r][c]
            if f != 0:
                f = f * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return result if sign == 1 else -result


def solve(a, b):
    """Solve a x = b over Q(q) for square nonsingular a; b is a matrix."""
    n = len(a)
    m = len(b[0]) if b else 0
    aug = [[RatFunc._coerce(x) if not isinstance(x, RatFunc) else x for x in a[i]]
           + [RatFunc._coerce(x) if not isinstance(x, RatFunc) else x for x in b[i]] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c:
                f = aug[r][c]
                if f != 0:
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [[_simplify(x) for x in row[n:n + m]] for row in aug]


def _simplify(x):
    if isinstance(x, RatFunc) and x.is_laurent():
        return x.num
    return x
