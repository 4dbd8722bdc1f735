"""Arithmetic in a real quadratic field Q(sqrt(d)).

Needed because the fold/double-zero parameter is a root of a quadratic,
so Bogdanov-Takens data live in Q(sqrt(disc)).  Elements are ``a + b*sqrt(d)``
with rational a, b and a fixed positive non-square rational d.  Signs are
decided exactly (compare a^2 with b^2 d).
"""
from fractions import Fraction
from math import isqrt


def _is_square(q):
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(q):
    q = Fraction(q)
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


class QSqrt:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a, self.b, self.d = Fraction(a), Fraction(b), Fraction(d)
        if self.d <= 0:
            raise ValueError("only real quadratic fields are supported")

    def _lift(self, o):
        if isinstance(o, QSqrt):
            if o.d != self.d:
                raise ValueError("mixing different quadratic fields")
            return o
        return QSqrt(o, 0, self.d)

    def __add__(self, o):
        o = self._lift(o)
        return QSqrt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt(-self.a, -self.b, self.d)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return QSqrt(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conj(self):
        return QSqrt(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, o):
        o = self._lift(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return self * o.conj() * (1 / n)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, k):
        out = QSqrt(1, 0, self.d)
        base = self
        if k < 0:
            base, k = 1 / base, -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self):
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0:
            return sb
        if sb == 0 or sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else (-sa if diff < 0 else 0)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.b == 0 and self.a == o
        if isinstance(o, QSqrt):
            return self.a == o.a and self.b == o.b and self.d == o.d
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __gt__(self, o):
        return (self - o).sign() > 0

    def __le__(self, o):
        return (self - o).sign() <= 0

    def __ge__(self, o):
        return (self - o).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def to_mp(self, mp):
        return mp.mpf(self.a.numerator) / self.a.denominator + \
            mp.mpf(self.b.numerator) / self.b.denominator * mp.sqrt(mp.mpf(self.d.numerator) / self.d.denominator)

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b), "d": str(self.d)}


def exact_sign(x):
    if isinstance(x, QSqrt):
        return x.sign()
    return (x > 0) - (x < 0)


def quadratic_roots(c0, c1, c2):
    """Real roots of c2 t^2 + c1 t + c0 (c2 != 0) in increasing order.

    Rational roots come back as Fractions, irrational ones as QSqrt.
    """
    c0, c1, c2 = Fraction(c0), Fraction(c1), Fraction(c2)
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    if disc == 0:
        return [-c1 / (2 * c2)]
    if _is_square(disc):
        s = rational_sqrt(disc)
        r = sorted([(-c1 - s) / (2 * c2), (-c1 + s) / (2 * c2)])
        return r
    lo = QSqrt(-c1 / (2 * c2), -1 / (2 * c2), disc)
    hi = QSqrt(-c1 / (2 * c2), 1 / (2 * c2), disc)
    return sorted([lo, hi], key=float)
