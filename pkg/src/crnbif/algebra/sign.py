"""The sign-decision ladder.

``decide_sign`` answers "what signs does p take on an open box (optionally
cut down by strict polynomial side-constraints)?" using, in order:

1. a coefficient-sign certificate after mapping the box onto the positive
   orthant (a Moebius substitution per bounded variable);
2. a search for a witness pair on a dyadic grid refined level by level;
3. exact cell decomposition with Sturm root isolation, for one effective
   variable (any side-constraints) or two (no side-constraints);
4. Unresolved.

Every Mixed verdict carries two exact dyadic witnesses which are checked
again before returning.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .poly import ExactPoly
from .upoly import UPoly, isolate_real_roots, sign_at_root, root_bound
from .scalar import dyadic_between, sign as _sign

ALL_POSITIVE = "AllPositive"
ALL_NEGATIVE = "AllNegative"
IDENTICALLY_ZERO = "IdenticallyZero"
MIXED = "Mixed"
UNRESOLVED = "Unresolved"


@dataclass
class SignDecision:
    verdict: str
    witnesses: tuple = ()
    certificate: str = None
    trail: list = field(default_factory=list)
    note: str = ""

    @property
    def signs(self):
        """The set of strict signs attained, as characters."""
        return {ALL_POSITIVE: {"+"}, ALL_NEGATIVE: {"-"}, MIXED: {"+", "-"},
                IDENTICALLY_ZERO: {"0"}}.get(self.verdict, set())

    def to_json(self):
        return {
            "verdict": self.verdict,
            "certificate": self.certificate,
            "witnesses": [{k: str(v) for k, v in w.items()} for w in self.witnesses],
            "trail": list(self.trail),
        }


class Domain:
    """An open box; ``bounds[name] = (lo, hi)`` with ``hi=None`` for +infinity."""

    def __init__(self, bounds, constraints=()):
        self.bounds = {}
        for v, (lo, hi) in bounds.items():
            lo = Fraction(lo)
            hi = None if hi is None else Fraction(hi)
            if hi is not None and not lo < hi:
                raise ValueError(f"empty domain for {v}")
            self.bounds[v] = (lo, hi)
        # each constraint is (poly, sense) meaning sense * poly > 0
        self.constraints = [(c if isinstance(c, ExactPoly) else c[0], 1 if isinstance(c, ExactPoly) else c[1])
                            for c in constraints]

    @classmethod
    def orthant(cls, names, constraints=()):
        return cls({n: (0, None) for n in names}, constraints)

    def contains(self, pt):
        for v, (lo, hi) in self.bounds.items():
            x = pt[v]
            if not x > lo or (hi is not None and not x < hi):
                return False
        return all(s * _eval(c, pt) > 0 for c, s in self.constraints)


def _eval(p, pt):
    return p.eval({v: pt[v] for v in p.vars if v in pt}) if p.vars else p.constant()


def _full(p, pt):
    # evaluate with zeros for names the point does not mention (they are unused)
    return p.eval({v: pt.get(v, Fraction(0)) for v in p.vars})


def _as_poly(p, var="t"):
    return ExactPoly.from_upoly(p, var) if isinstance(p, UPoly) else p


# ---------------------------------------------------------------- rung 1 ---
def orthant_transform(p, bounds):
    """Rewrite p so that the box becomes the open positive orthant.

    Unbounded ``(lo, inf)`` uses v = lo + s; bounded ``(lo, hi)`` uses
    v = (lo + hi s)/(1 + s) and clears (1 + s)^deg.  Positive factors only,
    so signs on the box equal signs of the result on the orthant.
    """
    q = p
    for v, (lo, hi) in bounds.items():
        if v not in q.vars or q.degree(v) <= 0:
            continue
        s = ExactPoly.var(v, q.vars)
        if hi is None:
            q = q.subs({v: s + lo}).with_vars(q.vars)
        else:
            d = q.degree(v)
            acc = ExactPoly(q.vars, {})
            for k, ck in enumerate(q.coeffs(v)):
                if ck.is_zero():
                    continue
                ck = ck.with_vars(q.vars) if v in q.vars else ck
                term = ck * ((s * hi + lo) ** k) * ((s + 1) ** (d - k))
                acc = acc + term
            q = acc.with_vars(q.vars)
    return q


def _coefficient_rung(p, dom):
    q = orthant_transform(p, dom.bounds)
    signs = q.coefficient_signs()
    if signs == {1}:
        return ALL_POSITIVE
    if signs == {-1}:
        return ALL_NEGATIVE
    return None


# ---------------------------------------------------------------- rung 2 ---
def _grid_values(lo, hi, level):
    if hi is not None:
        step = (hi - lo) / (1 << level)
        vals = [lo + step * j for j in range(1, 1 << level)]
        # keep dyadic witnesses when the box itself is dyadic
        return vals
    den = 1 << ((level + 1) // 2)
    return [lo + Fraction(j, den) for j in range(1, (1 << level) + 1)]


def _grid_rung(p, dom, names, depth, budget):
    pos = neg = None
    seen = set()
    evals = 0
    for level in range(1, depth + 1):
        axes = [_grid_values(*dom.bounds[v], level) for v in names]
        total = 1
        for a in axes:
            total *= len(a)
        if evals + total > budget:
            break
        for combo in product(*axes):
            if combo in seen:
                continue
            seen.add(combo)
            evals += 1
            pt = dict(zip(names, combo))
            if not all(s * _full(c, pt) > 0 for c, s in dom.constraints):
                continue
            val = _full(p, pt)
            if val > 0 and pos is None:
                pos = pt
            elif val < 0 and neg is None:
                neg = pt
            if pos is not None and neg is not None:
                return pos, neg, level
    return pos, neg, None


# ---------------------------------------------------------------- rung 3 ---
def _interval_cells(roots, lo, hi):
    """Sample points (dyadic) of the open cells cut out of (lo, hi) by sorted roots."""
    def clear():
        # every isolating interval must sit strictly between its neighbours
        prev = lo
        for k, r in enumerate(roots):
            nxt = roots[k + 1].lo if k + 1 < len(roots) else hi
            if not r.exact and ((prev is not None and r.lo <= prev) or (nxt is not None and r.hi >= nxt)):
                return r
            prev = r.hi
        return None

    while True:
        bad = clear()
        if bad is None:
            break
        bad.refine(steps=1)
    edges = [lo] + [x for r in roots for x in (r.lo, r.hi)] + [hi]
    pts = []
    for a, b in zip(edges[0::2], edges[1::2]):
        if a is None:
            a = b - 1 if b is not None else Fraction(-1)
        if b is None:
            b = a + 1
        if a < b:
            pts.append(dyadic_between(a, b))
    return pts


def _univariate(p, var, dom):
    lo, hi = dom.bounds.get(var, (None, None))
    up = p.to_upoly(var)
    cons = [(c.to_upoly(var) if c.used_vars() else UPoly.const(c.constant()), s) for c, s in dom.constraints]
    crit = UPoly.const(1)
    for c, _ in cons:
        if not c.is_zero():
            crit = crit * c
    crit = crit * up
    roots = isolate_real_roots(crit, lo, hi) if crit.deg() > 0 else []
    # separate intervals from each other
    samples = _interval_cells(roots, lo, hi)
    pos = neg = None
    feasible_any = False
    for x in samples:
        if all(s * c(x) > 0 for c, s in cons):
            feasible_any = True
            v = up(x)
            if v > 0 and pos is None:
                pos = {var: x}
            if v < 0 and neg is None:
                neg = {var: x}
    zero_inside = False
    for r in isolate_real_roots(up, lo, hi) if up.deg() > 0 else []:
        if all(s * sign_at_root(c, r) > 0 for c, s in cons):
            zero_inside = True
    return pos, neg, feasible_any, zero_inside


def _bivariate(p, xv, yv, dom):
    from .poly import resultant
    xlo, xhi = dom.bounds[xv]
    ylo, yhi = dom.bounds[yv]
    py = p.diff(yv)
    crit_polys = []
    if p.degree(yv) >= 1:
        if py.degree(yv) >= 1:
            crit_polys.append(resultant(p, py, yv))
        crit_polys.append(p.coeffs(yv)[-1])
    for yb in (ylo, yhi):
        if yb is not None:
            crit_polys.append(p.subs({yv: yb}))
    crit = UPoly.const(1)
    for c in crit_polys:
        if c.used_vars():
            crit = crit * c.to_upoly(xv)
        elif c.constant() == 0:
            return None
    roots = isolate_real_roots(crit, xlo, xhi) if crit.deg() > 0 else []
    pos = neg = None
    zero_inside = False
    for x0 in _interval_cells(roots, xlo, xhi):
        fib = p.subs({xv: x0})
        sub = Domain({yv: (ylo, yhi)})
        if not fib.used_vars():
            v = fib.constant()
            pt = {xv: x0, yv: dyadic_between(ylo, ylo + 1 if yhi is None else yhi)}
            if v > 0 and pos is None:
                pos = pt
            if v < 0 and neg is None:
                neg = pt
            zero_inside |= v == 0
            continue
        a, b, _, z = _univariate(fib, yv, sub)
        zero_inside |= z
        if a and pos is None:
            pos = {xv: x0, **a}
        if b and neg is None:
            neg = {xv: x0, **b}
    irrational_fibres = any(not r.exact for r in roots)
    return pos, neg, zero_inside, irrational_fibres


# ---------------------------------------------------------------- driver ---
def decide_sign(p, domain, depth=12, budget=4096):
    """Decide the sign behaviour of ``p`` on ``domain`` (see module docstring)."""
    p = _as_poly(p)
    used = set(p.used_vars())
    for c, _ in domain.constraints:
        used |= set(c.used_vars())
    missing = used - set(domain.bounds)
    if missing:
        raise ValueError(f"indeterminates {sorted(missing)} have no domain")
    names = sorted(used, key=lambda v: list(domain.bounds).index(v))
    trail = []

    if p.is_zero():
        return SignDecision(IDENTICALLY_ZERO, (), "identically-zero", ["zero-polynomial"])

    # rung 1
    if not domain.constraints:
        v = _coefficient_rung(p, domain)
        trail.append("coefficient-sign")
        if v is not None:
            return SignDecision(v, (), "coefficient-sign", trail)

    # rung 2
    trail.append("witness-grid")
    if names:
        pos, neg, level = _grid_rung(p, domain, names, depth, budget)
    else:
        val = p.constant()
        pos = {} if val > 0 else None
        neg = {} if val < 0 else None
    if pos is not None and neg is not None:
        return _checked(p, domain, pos, neg, "witness-pair", trail)

    # rung 3
    trail.append("root-isolation")
    if not names:
        if domain.constraints and not all(s * c.constant() > 0 for c, s in domain.constraints):
            raise ValueError("empty domain")
        val = p.constant()
        return SignDecision(ALL_POSITIVE if val > 0 else ALL_NEGATIVE, (), "root-isolation", trail)
    if len(names) == 1:
        a, b, feasible, zero_inside = _univariate(p, names[0], domain)
        if not feasible:
            raise ValueError("empty domain")
        if a and b:
            return _checked(p, domain, a, b, "root-isolation", trail)
        if zero_inside:
            return SignDecision(UNRESOLVED, tuple(w for w in (a, b) if w), None, trail,
                                "polynomial touches zero without changing sign")
        return SignDecision(ALL_POSITIVE if a else ALL_NEGATIVE, (a or b,), "root-isolation", trail)
    if len(names) == 2 and not domain.constraints:
        res = _bivariate(p, names[0], names[1], domain)
        if res is not None:
            a, b, zero_inside, irr = res
            if a and b:
                return _checked(p, domain, a, b, "root-isolation", trail)
            if not zero_inside and not irr and (a or b):
                return SignDecision(ALL_POSITIVE if a else ALL_NEGATIVE, (a or b,), "root-isolation", trail)
    trail.append("unresolved")
    return SignDecision(UNRESOLVED, tuple(w for w in (pos, neg) if w), None, trail)


def _checked(p, domain, pos, neg, cert, trail):
    # independent re-evaluation of both witnesses before reporting Mixed
    for pt, want in ((pos, 1), (neg, -1)):
        if not domain.contains({**{v: dyadic_between(*_finite(b)) for v, b in domain.bounds.items()}, **pt}):
            raise AssertionError("witness outside the domain")
        if _sign(_full(p, pt)) != want:
            raise AssertionError("witness does not have the claimed sign")
    return SignDecision(MIXED, (pos, neg), cert, trail)


def _finite(b):
    lo, hi = b
    return (lo, lo + 2) if hi is None else (lo, hi)


__all__ = ["SignDecision", "Domain", "decide_sign", "orthant_transform", "ALL_POSITIVE", "ALL_NEGATIVE",
           "IDENTICALLY_ZERO", "MIXED", "UNRESOLVED", "root_bound"]
