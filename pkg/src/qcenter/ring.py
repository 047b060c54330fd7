"""Exact coefficient rings: Laurent polynomials Z[q, q^-1], the field Q(q),
and cyclotomic quotients Z[q]/(Phi_l).

Everything here is exact integer arithmetic; values are immutable.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import gcd


class LaurentPoly:
    """Sparse Laurent polynomial in ``q`` with integer coefficients.

    Stored as a map ``exponent -> coefficient`` with no zero entries.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            self._c = {int(k): int(v) for k, v in dict(coeffs).items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({k: c} if c else {})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls._raw({1: 1})

    # -- inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_unit(self) -> bool:
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def constant(self):
        """Return the integer value if this is a constant, else None."""
        if not self._c:
            return 0
        if len(self._c) == 1 and 0 in self._c:
            return self._c[0]
        return None

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = gcd(g, v)
        return g

    def __call__(self, x):
        """Evaluate at an integer/Fraction ``x`` (must be invertible if negative exponents)."""
        total = 0
        for k, v in self._c.items():
            total += v * x**k
        return total

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return LaurentPoly._raw({})
        c = {}
        for k1, v1 in self._c.items():
            for k2, v2 in o._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ZeroDivisionError(f"{self} is not a unit of Z[q,q^-1]")
            (k, v), = self._c.items()
            return LaurentPoly._raw({-k * (-n): v ** (-n)})
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        return self ** -1

    def __truediv__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return RatFunc(LaurentPoly(other), self)
        return NotImplemented

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly; raises ArithmeticError if ``other`` does not divide."""
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        a, sa = _to_poly(self)
        b, sb = _to_poly(o)
        quo, rem = _poly_divmod(a, b)
        if any(rem):
            raise ArithmeticError(f"{o} does not divide {self}")
        return _from_poly(quo, sa - sb)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (RatFunc, CycScalar)):
                return other == self
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text ---------------------------------------------------------------
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
Q = LaurentPoly.q()


def qpow(k) -> LaurentPoly:
    """q**k for an integral ``k`` (int or integral Fraction)."""
    if getattr(k, "denominator", 1) != 1:
        raise ValueError(f"non-integral q-exponent {k}")
    return LaurentPoly._raw({int(k): 1})


# -- dense polynomial helpers (lists of ints, index = degree) -----------------

def _to_poly(p: LaurentPoly):
    lo = p.min_exp()
    hi = p.max_exp()
    out = [0] * (hi - lo + 1)
    for k, v in p._c.items():
        out[k - lo] = v
    return out, lo


def _from_poly(a, shift=0) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: v for i, v in enumerate(a) if v})


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    """Exact division in Z[q]; the remainder is nonzero when ``b`` does not divide ``a``.

    If ``b`` divides ``a`` over Z then every quotient coefficient is an
    integer, so a non-integral step already proves non-divisibility.
    """
    b = _trim(list(b))
    db = len(b) - 1
    lead = b[-1]
    a = _trim(list(a))
    quo = [0] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        c, r = divmod(a[-1], lead)
        if r:
            return quo, a
        quo[shift] = c
        for i, bv in enumerate(b):
            a[i + shift] -= c * bv
        a.pop()
        _trim(a)
    return quo, a


def _prem(a, b):
    """Pseudo-remainder of integer polynomials."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lead for x in a]
        for i, bv in enumerate(b):
            a[i + shift] -= c * bv
        a.pop()
        _trim(a)
    return a


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def _primitive(a):
    g = _content(a)
    if g == 0:
        return a
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _poly_gcd(a, b):
    a = _trim(list(a))
    b = _trim(list(b))
    if not a:
        return _primitive(b) if b else []
    if not b:
        return _primitive(a)
    c = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return [c * x for x in _primitive(a)]


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor up to units, normalised to min exponent 0 and
    positive leading coefficient."""
    if a.is_zero():
        return _normalise_unit(b)
    if b.is_zero():
        return _normalise_unit(a)
    pa, _ = _to_poly(a)
    pb, _ = _to_poly(b)
    return _from_poly(_poly_gcd(pa, pb))


def _normalise_unit(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    p = p.shift(-p.min_exp())
    if p._c[p.max_exp()] < 0:
        p = -p
    return p


class RatFunc:
    """Element of Q(q) as a reduced quotient of Laurent polynomials.

    Canonical form: numerator and denominator coprime, the denominator has
    lowest exponent 0 and a positive lowest-degree coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = LaurentPoly._coerce(num) if not isinstance(num, LaurentPoly) else num
        den = LaurentPoly._coerce(den) if not isinstance(den, LaurentPoly) else den
        if num is None or den is None:
            raise TypeError("RatFunc needs LaurentPoly/int parts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if not den.is_monomial():
            g = laurent_gcd(num, den)
            if not g.is_monomial() or g._c.get(0, 0) != 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
        else:
            (k, v), = den._c.items()
            g = gcd(num.content(), v)
            if g != 1:
                num = LaurentPoly._raw({e: c // g for e, c in num._c.items()})
                den = LaurentPoly._raw({k: v // g})
        shift = den.min_exp()
        if shift:
            num, den = num.shift(-shift), den.shift(-shift)
        if den._c[0] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc._raw(LaurentPoly(other), ONE)
        if isinstance(other, LaurentPoly):
            return RatFunc._raw(other, ONE)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        """True when the value lies in Z[q, q^-1]."""
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatFunc()
        if self.den == ONE and o.den == ONE:
            return RatFunc._raw(self.num * o.num, ONE)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial Phi_n(q), via (q^n - 1) / prod_{d|n, d<n} Phi_d."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


class CycScalar:
    """Element of Z[q]/(Phi_l(q)), i.e. Z[zeta_l] with zeta_l the class of q."""

    __slots__ = ("residue", "level")

    def __init__(self, value, level: int):
        if level < 1:
            raise ValueError("level must be positive")
        self.level = level
        if isinstance(value, CycScalar):
            if value.level != level:
                raise ValueError("level mismatch")
            self.residue = value.residue
            return
        if isinstance(value, int):
            value = LaurentPoly(value)
        if not isinstance(value, LaurentPoly):
            raise TypeError(f"cannot reduce {type(value).__name__} modulo Phi_{level}")
        self.residue = _reduce_cyclotomic(value, level)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.level != self.level:
                raise ValueError("level mismatch")
            return other
        if isinstance(other, (int, LaurentPoly)):
            return CycScalar(other, self.level)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.residue + o.residue, self.level)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(-self.residue, self.level)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.residue * o.residue, self.level)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycScalar(1, self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def order(self):
        """Multiplicative order if this is a root of unity, else None.

        Roots of unity in Q(zeta_l) have order dividing lcm(2, l).
        """
        bound = self.level if self.level % 2 == 0 else 2 * self.level
        one = CycScalar(1, self.level)
        for m in range(1, bound + 1):
            if bound % m == 0 and self ** m == one:
                return m
        return None

    def inverse(self) -> "CycScalar":
        m = self.order()
        if m is None:
            raise ZeroDivisionError(f"{self} is not a root of unity; inverse unsupported")
        return self ** (m - 1)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def at_one(self) -> int:
        """Specialise q -> 1, landing in Z/(Phi_l(1))."""
        m = cyclotomic(self.level)(1)
        v = self.residue(1)
        return v % m if m != 1 else 0

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self):
        return hash((self.residue, self.level))

    def is_zero(self):
        return self.residue.is_zero()

    def __bool__(self):
        return not self.residue.is_zero()

    def __str__(self):
        return f"[{self.residue}]_{self.level}"

    def __repr__(self):
        return f"CycScalar({self.residue!s}, {self.level})"


def _reduce_cyclotomic(p: LaurentPoly, level: int) -> LaurentPoly:
    if p.is_zero():
        return p
    folded = {}
    for k, v in p._c.items():
        e = k % level
        folded[e] = folded.get(e, 0) + v
    a = [0] * level
    for k, v in folded.items():
        a[k] = v
    phi, _ = _to_poly(cyclotomic(level))
    d = len(phi) - 1
    _trim(a)
    while len(a) - 1 >= d and a:
        c = a[-1]
        shift = len(a) - 1 - d
        for i, pv in enumerate(phi):
            a[i + shift] -= c * pv
        a.pop()
        _trim(a)
    return _from_poly(a)


# -- quantum numbers ----------------------------------------------------------

@lru_cache(maxsize=None)
def quantum_int(n: int, d: int = 1) -> LaurentPoly:
    """[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})."""
    if d < 1:
        raise ValueError("d must be positive")
    if n < 0:
        return -quantum_int(-n, d)
    return LaurentPoly._raw({d * (n - 1 - 2 * s): 1 for s in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    out = ONE
    for m in range(1, n + 1):
        out = out * quantum_int(m, d)
    return out


def quantum_binomial(n: int, k: int, d: int = 1) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    return quantum_factorial(n, d).exact_div(quantum_factorial(k, d) * quantum_factorial(n - k, d))


# -- text form ----------------------------------------------------------------

def _mono(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "q"
    return f"q^{k}"


def format_laurent(p: LaurentPoly) -> str:
    """Render as a sum of ``c*q^k`` terms, highest exponent first."""
    if p.is_zero():
        return "0"
    parts = []
    for k, v in sorted(p._c.items(), reverse=True):
        m = _mono(k)
        a = abs(v)
        if not m:
            body = str(a)
        elif a == 1:
            body = m
        else:
            body = f"{a}*{m}"
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(q(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?$")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the output of :func:`format_laurent` (and light variations)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial literal")
    # split on +/- that are not exponent signs
    terms = []
    buf = ""
    for i, ch in enumerate(s):
        if ch in "+-" and buf and not buf.endswith("^") and not buf.endswith("^("):
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    out = {}
    for t in terms:
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        m = _TERM.match(t)
        if not t or not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad polynomial term {t!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            exp = int(m.group(3)) if m.group(3) else 1
        else:
            exp = 0
        out[exp] = out.get(exp, 0) + sign * coeff
    return LaurentPoly(out)


def parse_scalar(text: str, level: int | None = None):
    """Parse a scalar literal: a Laurent polynomial, or ``(num)/(den)``.

    With ``level`` the value is reduced into Z[q]/(Phi_level).
    """
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        val = RatFunc(parse_laurent(num.strip().strip("()")), parse_laurent(den.strip().strip("()")))
        if level is not None:
            if not val.den.is_unit():
                raise ValueError("cyclotomic scalars need a unit denominator")
            return CycScalar(val.num * val.den.inverse(), level)
        return val
    p = parse_laurent(s)
    if level is not None:
        return CycScalar(p, level)
    return p
