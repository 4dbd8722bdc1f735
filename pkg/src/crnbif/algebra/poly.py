"""Sparse multivariate polynomials with exact rational coefficients.

An :class:`ExactPoly` carries an ordered tuple of indeterminate names and a
dict from exponent tuples to nonzero Fractions.  Binary operations between
polynomials over different name tuples first merge the tuples (names of the
left operand first), so callers rarely have to think about alignment.
"""
from fractions import Fraction

from .upoly import UPoly


class ExactPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError("exponent length does not match the indeterminates")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c, vars=()):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        e = tuple(1 if v == name else 0 for v in vars)
        if sum(e) != 1:
            raise ValueError(f"{name} not among {vars}")
        return cls(vars, {e: 1})

    @classmethod
    def gens(cls, *names):
        return tuple(cls.var(n, names) for n in names)

    @classmethod
    def from_upoly(cls, p, name):
        return cls((name,), {(i,): c for i, c in enumerate(p.c)})

    # -- alignment ----------------------------------------------------------
    def with_vars(self, vars):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for v in self.vars:
            if v not in vars:
                if any(e[self.vars.index(v)] for e in self.terms):
                    raise ValueError(f"indeterminate {v} is used but not in {vars}")
                idx.append(None)
            else:
                idx.append(vars.index(v))
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for k, i in enumerate(idx):
                if i is not None:
                    ne[i] = e[k]
            out[tuple(ne)] = c
        return ExactPoly(vars, out)

    def _align(self, other):
        if not isinstance(other, ExactPoly):
            other = ExactPoly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(vars), other.with_vars(vars)

    # -- predicates / inspection -------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def used_vars(self):
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def degree(self, var=None):
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coeffs(self, var):
        """Coefficients of powers of ``var`` as polynomials in the other names."""
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = [dict() for _ in range(self.degree(var) + 1)]
        for e, c in self.terms.items():
            out[e[i]][e[:i] + e[i + 1:]] = c
        return [ExactPoly(rest, d) for d in out]

    def constant(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient_signs(self):
        return {1 if c > 0 else -1 for c in self.terms.values()}

    def __eq__(self, other):
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return ExactPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, ExactPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExactPoly):
            other = Fraction(other)
            return ExactPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        a, b = self._align(other)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ExactPoly(a.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, k):
        out = ExactPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff(self, var):
        if var not in self.vars:
            return ExactPoly(self.vars, {})
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return ExactPoly(self.vars, out)

    # -- evaluation ---------------------------------------------------------
    def subs(self, values):
        """Substitute scalars or polynomials for some indeterminates.

        The result keeps the remaining names (plus any names introduced by
        substituted polynomials).
        """
        keep = [v for v in self.vars if v not in values]
        out = ExactPoly(keep, {})
        powcache = {}
        for e, c in self.terms.items():
            term = ExactPoly(keep, {tuple(e[self.vars.index(v)] for v in keep): c})
            for v, k in zip(self.vars, e):
                if k and v in values:
                    key = (v, k)
                    if key not in powcache:
                        val = values[v]
                        powcache[key] = val ** k if isinstance(val, ExactPoly) else ExactPoly.const(Fraction(val) ** k, ())
                    term = term * powcache[key]
            out = out + term
        return out

    def eval(self, point):
        """Evaluate at a full point (dict name -> value); values may be any ring elements."""
        acc = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(self.vars, e):
                if k:
                    t = t * (point[v] ** k)
            acc = acc + t
        return acc

    def to_upoly(self, var=None):
        used = self.used_vars()
        if var is None:
            if len(used) > 1:
                raise ValueError("polynomial is not univariate")
            var = used[0] if used else (self.vars[0] if self.vars else "t")
        elif any(u != var for u in used):
            raise ValueError(f"polynomial involves names other than {var}")
        if not self.terms:
            return UPoly()
        i = self.vars.index(var) if var in self.vars else None
        d = self.degree(var)
        cs = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            cs[e[i] if i is not None else 0] += c
        return UPoly(cs)

    def __repr__(self):
        return f"ExactPoly({self.vars}, {str(self)})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            cs = str(c)
            if mono and c in (1, -1):
                parts.append(mono if c == 1 else "-" + mono)
            else:
                parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts).replace("+ -", "- ")


def _det_poly(M):
    """Determinant of a small square matrix of ExactPoly by Laplace expansion with memo."""
    n = len(M)
    memo = {}

    def rec(row, cols):
        if row == n:
            return ExactPoly.const(1, M[0][0].vars)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = ExactPoly(M[0][0].vars, {})
        sgn = 1
        for k, c in enumerate(cols):
            entry = M[row][c]
            if entry:
                sub = rec(row + 1, cols[:k] + cols[k + 1:])
                if sub:
                    acc = acc + entry * sub * sgn
            sgn = -sgn
        memo[key] = acc
        return acc

    return rec(0, tuple(range(n)))


def resultant(f, g, var):
    """Sylvester resultant of f and g with respect to ``var``."""
    f, g = f._align(g)
    if var not in f.vars:
        raise ValueError(f"{var} does not occur")
    fc, gc = f.coeffs(var), g.coeffs(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        return ExactPoly(tuple(v for v in f.vars if v != var), {})
    rest = fc[0].vars
    zero = ExactPoly(rest, {})
    size = m + n
    if size == 0:
        return ExactPoly.const(1, rest)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return _det_poly(rows)


def eliminate(system, drop):
    """Eliminate ``drop`` from a polynomial system by a resultant.

    The eliminant is the resultant of the first two members that have
    positive degree in ``drop``.  It vanishes at the projection of every
    common zero of those two polynomials.
    """
    with_var = [p for p in system if drop in p.vars and p.degree(drop) > 0]
    if not with_var:
        raise ValueError(f"{drop} does not occur in the system")
    if len(with_var) == 1:
        raise ValueError("need two polynomials involving the dropped indeterminate")
    return resultant(with_var[0], with_var[1], drop)


def monomials_positive(p):
    """True when every coefficient is positive (p > 0 on the open orthant unless p == 0)."""
    return bool(p.terms) and all(c > 0 for c in p.terms.values())


__all__ = ["ExactPoly", "resultant", "eliminate", "monomials_positive"]
