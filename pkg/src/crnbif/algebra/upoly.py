"""Dense univariate polynomials over Q with Sturm-based real-root isolation.

Coefficients are stored low degree first and trailing zeros are stripped,
so the zero polynomial is the empty tuple.  Evaluation is generic: any
value supporting ``+`` and ``*`` with Fractions works (this is how the
quadratic-field numbers of :mod:`crnbif.algebra.qfield` are plugged in).
"""
from fractions import Fraction

from .scalar import sign, dyadic_between


def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class UPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _strip(Fraction(x) for x in coeffs)

    @classmethod
    def _raw(cls, cs):
        p = cls.__new__(cls)
        p.c = _strip(cs)
        return p

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    # -- basic structure --------------------------------------------------
    def deg(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def lc(self):
        return self.c[-1] if self.c else Fraction(0)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly.const(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"UPoly({[str(x) for x in self.c]})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(f"({a})*{mono}" if mono else f"({a})")
        return " + ".join(parts)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(o):
        return o if isinstance(o, UPoly) else UPoly.const(o)

    def __add__(self, o):
        o = self._coerce(o)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-v for v in self.c])

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, UPoly):
            o = Fraction(o)
            return UPoly._raw([v * o for v in self.c])
        if not self.c or not o.c:
            return UPoly._raw(())
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return UPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, d):
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [Fraction(0)] * max(len(r) - len(d.c) + 1, 0)
        inv = 1 / d.lc()
        dd = len(d.c) - 1
        for k in range(len(r) - 1, dd - 1, -1):
            coef = r[k] * inv
            if coef:
                q[k - dd] = coef
                for j, b in enumerate(d.c):
                    r[k - dd + j] -= coef * b
        return UPoly._raw(q), UPoly._raw(r[:dd] if dd else [])

    def __mod__(self, d):
        return self.divmod(d)[1]

    def __floordiv__(self, d):
        return self.divmod(d)[0]

    def monic(self):
        if not self.c:
            return self
        return self * (1 / self.lc())

    def deriv(self):
        return UPoly._raw([i * a for i, a in enumerate(self.c)][1:])

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def compose(self, q):
        acc = UPoly()
        for a in reversed(self.c):
            acc = acc * q + a
        return acc

    def content_normal(self):
        """Scale to integer coefficients with positive content 1 (sign of lc kept)."""
        if not self.c:
            return self
        from math import gcd, lcm
        den = 1
        for a in self.c:
            den = lcm(den, a.denominator)
        ints = [int(a * den) for a in self.c]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return UPoly([Fraction(v, g) for v in ints])

    def sign_at(self, x):
        return sign(self(x))


def gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree(p):
    """Square-free part of p (monic)."""
    if p.deg() <= 0:
        return p.monic()
    g = gcd(p, p.deriv())
    return (p // g).monic()


def sturm_sequence(p):
    seq = [p, p.deriv()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        seq.append(-r)
    seq.pop()
    return seq


def _sign_changes(vals):
    s = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))


def _var_at(seq, x):
    return _sign_changes([q(x) for q in seq])


def _var_at_inf(seq, positive=True):
    vals = []
    for q in seq:
        lc = q.lc()
        if not positive and q.deg() % 2 == 1:
            lc = -lc
        vals.append(lc)
    return _sign_changes(vals)


def count_roots(p, lo, hi, seq=None):
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    ``hi=None`` stands for +infinity and ``lo=None`` for -infinity.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    seq = seq or sturm_sequence(p)
    vlo = _var_at_inf(seq, False) if lo is None else _var_at(seq, lo)
    vhi = _var_at_inf(seq, True) if hi is None else _var_at(seq, hi)
    return vlo - vhi


def root_bound(p):
    """A power of two strictly larger than |r| for every root r (Cauchy)."""
    lc = abs(p.lc())
    m = max((abs(a) / lc for a in p.c[:-1]), default=Fraction(0))
    b = 1 + m
    k = Fraction(1)
    while k <= b:
        k *= 2
    return k


class RootInterval:
    """Isolating interval for a real root of a square-free polynomial.

    Either ``lo == hi`` (an exact rational root) or the root is the unique
    root of ``poly`` in the open interval (lo, hi) with nonzero endpoint values.
    """
    __slots__ = ("poly", "lo", "hi", "_seq")

    def __init__(self, poly, lo, hi, seq=None):
        self.poly, self.lo, self.hi = poly, Fraction(lo), Fraction(hi)
        self._seq = seq

    @property
    def exact(self):
        return self.lo == self.hi

    def refine(self, width=None, steps=None):
        """Bisect until the interval is narrower than ``width`` (or for ``steps`` steps)."""
        n = 0
        while not self.exact:
            if width is not None and self.hi - self.lo < width:
                break
            if steps is not None and n >= steps:
                break
            mid = (self.lo + self.hi) / 2
            vm = self.poly(mid)
            if vm == 0:
                self.lo = self.hi = mid
                break
            if sign(self.poly(self.lo)) * sign(vm) < 0:
                self.hi = mid
            else:
                self.lo = mid
            n += 1
        return self

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __float__(self):
        self.refine(width=Fraction(1, 1 << 60))
        return float(self.midpoint())

    def __repr__(self):
        return f"RootInterval([{self.lo}, {self.hi}])"


def isolate_real_roots(p, lo=None, hi=None):
    """Isolate the distinct real roots of ``p`` in the open interval (lo, hi).

    Returns a sorted list of :class:`RootInterval`; each interval is either a
    single rational point or an open interval with dyadic-refined rational
    endpoints containing exactly one root.  ``None`` bounds mean infinity.
    """
    if not isinstance(p, UPoly):
        raise TypeError("isolate_real_roots expects a UPoly")
    if p.is_zero():
        raise ValueError("cannot isolate the roots of the zero polynomial")
    if p.deg() == 0:
        return []
    sf = squarefree(p)
    seq = sturm_sequence(sf)
    B = root_bound(sf)
    a = -B if lo is None else max(Fraction(lo), -B)
    b = B if hi is None else min(Fraction(hi), B)
    if a >= b:
        return []
    out = []

    def roots_open(x, y):
        # roots in open (x, y) = roots in (x, y] minus [root at y]
        n = count_roots(sf, x, y, seq)
        return n - (1 if sf(y) == 0 else 0)

    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        n = roots_open(x, y)
        if n == 0:
            continue
        if n == 1 and sf(x) != 0 and sf(y) != 0:
            out.append(RootInterval(sf, x, y, seq))
            continue
        m = dyadic_between(x, y) if (y - x) > 1 else (x + y) / 2
        if sf(m) == 0:
            out.append(RootInterval(sf, m, m, seq))
        stack.append((x, m))
        stack.append((m, y))
    out.sort(key=lambda r: r.lo)
    return out


def sign_at_root(f, root):
    """Exact sign of f at the algebraic number described by ``root``."""
    if f.is_zero():
        return 0
    if root.exact:
        return sign(f(root.lo))
    g = gcd(f, root.poly)
    if g.deg() >= 1:
        # the root is shared iff g has a root inside the isolating interval
        sg = squarefree(g)
        if count_roots(sg, root.lo, root.hi) - (1 if sg(root.hi) == 0 else 0) > 0:
            return 0
    fs = sturm_sequence(squarefree(f))
    fsf = fs[0]
    while True:
        n = count_roots(fsf, root.lo, root.hi, fs)
        if fsf(root.hi) == 0:
            n -= 1
        if n == 0 and fsf(root.lo) != 0:
            return sign(f(root.midpoint()))
        root.refine(steps=1)
        if root.exact:
            return sign(f(root.lo))


def resultant(f, g):
    """Resultant of two univariate polynomials (Euclidean algorithm)."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.deg(), g.deg()
    if n == 0:
        return g.lc() ** m
    if m == 0:
        return f.lc() ** n
    r = f % g
    if r.is_zero():
        return Fraction(0)
    s = -1 if (m * n) % 2 else 1
    return s * g.lc() ** (m - r.deg()) * resultant(g, r)


def interpolate(xs, ys):
    """Lagrange interpolation through the points (xs[i], ys[i])."""
    out = UPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = UPoly.const(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term = term * UPoly((-xj, 1)) * (1 / Fraction(xi - xj))
        out = out + term
    return out
