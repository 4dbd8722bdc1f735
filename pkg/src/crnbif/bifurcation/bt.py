"""Bogdanov-Takens points and their normal-form coefficients.

A double zero eigenvalue needs det J = tr J = 0 with J != 0.  On the
equilibrium set this means Q(alpha*) = 0 and p(alpha*)/x + q(alpha*)/y = 0,
so alpha* is one of the (at most two) roots of Q in (0, 1) and, when
p q < 0 there, the ratio y/x = -q/p is forced.  Scaling (x, y) jointly or
rescaling the rate constants only rescales time, so the whole BT variety is
a finite union of such orbits and every quantity below is decided exactly
at alpha* in its quadratic field.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.qfield import QSqrt, exact_sign
from ..algebra.matrix import rank_generic
from .fold import poly_roots_in_unit, ev
from .planar import planar_data

NONE = "None"
SUPERCRITICAL = "Supercritical"
SUBCRITICAL = "Subcritical"
VERTICAL = "Vertical"
DEGENERATE = "Degenerate"


def _js(v):
    return v.to_json() if isinstance(v, QSqrt) else str(v)


@dataclass
class BTNormalForm:
    a20: object
    b20: object
    b11: object
    bt1: bool
    bt2: bool
    sigma: int = None

    def to_json(self):
        return {"a20": _js(self.a20), "b20": _js(self.b20), "b11": _js(self.b11),
                "bt1": self.bt1, "bt2": self.bt2, "sigma": self.sigma}


@dataclass
class BTPoint:
    alpha: object
    x: object
    y: object
    kappa: list
    J: list

    def to_json(self):
        return {"alpha": _js(self.alpha), "x": _js(self.x), "y": _js(self.y),
                "kappa": [_js(k) for k in self.kappa]}


@dataclass
class BTVerdict:
    verdict: str
    sigma: int = None
    normal_forms: list = field(default_factory=list)
    transversal: bool = None
    witness: BTPoint = None
    trail: list = field(default_factory=list)

    @property
    def feasible(self):
        return self.verdict != NONE

    def to_json(self):
        nf = self.normal_forms[0] if self.normal_forms else None
        return {"verdict": self.verdict, "sigma": self.sigma,
                "a20": None if nf is None else _js(nf.a20),
                "b20": None if nf is None else _js(nf.b20),
                "b11": None if nf is None else _js(nf.b11),
                "transversal": self.transversal,
                "witness": None if self.witness is None else self.witness.to_json()}


def _pow(v, k):
    if k == 0:
        return Fraction(1)
    return v ** k


def _monomial(point, a):
    return _pow(point[0], a[0]) * _pow(point[1], a[1])


def bt_point_search(net, data=None):
    """Exact double-zero witnesses, one per admissible root alpha* of Q."""
    d = data or planar_data(net)
    if d.Q.is_zero():
        return []
    out = []
    for r in poly_roots_in_unit(d.Q):
        pv, qv = ev(d.p, r), ev(d.q, r)
        if exact_sign(pv) * exact_sign(qv) >= 0:
            # p = q = 0 gives J = 0 direction-free nilpotency only; same signs forbid tr = 0
            continue
        x, y = Fraction(1), -qv / pv
        hv = [ev(hj, r) for hj in d.h]
        kappa = [hj / _monomial((x, y), a) for hj, a in zip(hv, d.A)]
        J = jacobian_at(d.G, d.A, kappa, (x, y))
        assert all(exact_sign(v) == 0 for v in (J[0][0] + J[1][1], J[0][0] * J[1][1] - J[0][1] * J[1][0]))
        assert any(exact_sign(v) != 0 for row in J for v in row)
        out.append(BTPoint(r, x, y, kappa, J))
    return out


def jacobian_at(G, A, kappa, pt):
    m = len(kappa)
    J = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]
    for i in range(2):
        for k in range(2):
            acc = Fraction(0)
            for j in range(m):
                if G[i][j] and A[j][k]:
                    e = list(A[j])
                    e[k] -= 1
                    acc = acc + kappa[j] * (G[i][j] * A[j][k]) * _monomial(pt, e)
            J[i][k] = acc
    return J


def _bilinear(G, A, kappa, pt, u, v):
    """Second derivative of the mass-action field at ``pt`` applied to (u, v)."""
    out = []
    for i in range(2):
        acc = Fraction(0)
        for j in range(len(kappa)):
            if not G[i][j]:
                continue
            a = A[j]
            s = Fraction(0)
            for k in range(2):
                for l in range(2):
                    c = a[k] * a[l] - (a[k] if k == l else 0)
                    if c and u[k] != 0 and v[l] != 0:
                        e = list(a)
                        e[k] -= 1
                        e[l] -= 1
                        s = s + c * u[k] * v[l] * _monomial(pt, e)
            acc = acc + G[i][j] * kappa[j] * s
        out.append(acc)
    return out


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def bt_normal_form(net, point, data=None):
    """a20, b20, b11 in the Jordan basis J q0 = 0, J q1 = q0."""
    d = data or planar_data(net)
    J = point.J
    a, b, c = J[0][0], J[0][1], J[1][0]
    if all(exact_sign(v) == 0 for row in J for v in row):
        raise ValueError("J vanishes at the witness: geometric multiplicity two")
    one, zero = Fraction(1), Fraction(0)
    if exact_sign(b) != 0:
        q0, q1 = (b, -a), (zero, one)
    else:
        q0, q1 = (zero, one), (one / c, zero)
    # rows of the inverse of P = [q0 q1]
    det = q0[0] * q1[1] - q1[0] * q0[1]
    p0 = (q1[1] / det, -q1[0] / det)
    p1 = (-q0[1] / det, q0[0] / det)
    B00 = _bilinear(d.G, d.A, point.kappa, (point.x, point.y), q0, q0)
    B01 = _bilinear(d.G, d.A, point.kappa, (point.x, point.y), q0, q1)
    a20, b20, b11 = _dot(p0, B00), _dot(p1, B00), _dot(p1, B01)
    bt1 = exact_sign(a20 + b11) != 0
    bt2 = exact_sign(b20) != 0
    sigma = exact_sign(a20 + b11) * exact_sign(b20) if bt1 and bt2 else None
    return BTNormalForm(a20, b20, b11, bt1, bt2, sigma)


def bt_transversality(net, point, data=None):
    """Rank of d(f1, f2, tr J, det J)/d(x, y, kappa) at the witness (full rank is 4)."""
    d = data or planar_data(net)
    G, A, kap, pt = d.G, d.A, point.kappa, (point.x, point.y)
    m = len(kap)
    J = point.J

    def mono_d(a, shifts):
        # coefficient * monomial of d/dx_shifts x^a
        e = list(a)
        c = 1
        for s in shifts:
            c *= e[s]
            e[s] -= 1
        return (c * _monomial(pt, e)) if c else Fraction(0)

    # derivative of J[i][k] in direction var (0,1 for x,y; 2+j for kappa_j)
    def dJ(i, k, var):
        acc = Fraction(0)
        if var >= 2:
            j = var - 2
            return G[i][j] * mono_d(A[j], (k,)) if G[i][j] else acc
        for j in range(m):
            if G[i][j]:
                acc = acc + G[i][j] * kap[j] * mono_d(A[j], (k, var))
        return acc

    def df(i, var):
        if var >= 2:
            j = var - 2
            return G[i][j] * _monomial(pt, A[j])
        return J[i][var]

    rows = [[], [], [], []]
    for var in range(2 + m):
        d00, d01, d10, d11 = dJ(0, 0, var), dJ(0, 1, var), dJ(1, 0, var), dJ(1, 1, var)
        rows[0].append(df(0, var))
        rows[1].append(df(1, var))
        rows[2].append(d00 + d11)
        rows[3].append(d00 * J[1][1] + J[0][0] * d11 - d01 * J[1][0] - J[0][1] * d10)
    return rank_generic(rows) == 4


def bt_analysis(net, data=None):
    d = data or planar_data(net)
    trail = ["quadratic-field-roots"]
    pts = bt_point_search(net, d)
    if not pts:
        return BTVerdict(NONE, trail=trail)
    trail.append("jordan-basis")
    nfs = [bt_normal_form(net, pt, d) for pt in pts]
    if all(not nf.bt1 for nf in nfs):
        return BTVerdict(VERTICAL, None, nfs, None, pts[0], trail)
    sigmas = {nf.sigma for nf in nfs if nf.sigma is not None}
    if len(sigmas) != 1 or any(nf.sigma is None for nf in nfs):
        return BTVerdict(DEGENERATE, None, nfs, None, pts[0], trail)
    s = sigmas.pop()
    trail.append("transversality-rank")
    tr = all(bt_transversality(net, pt, d) for pt in pts)
    return BTVerdict(SUPERCRITICAL if s < 0 else SUBCRITICAL, s, nfs, tr, pts[0], trail)


__all__ = ["BTNormalForm", "BTPoint", "BTVerdict", "bt_point_search", "bt_normal_form", "bt_transversality",
           "bt_analysis", "jacobian_at", "NONE", "SUPERCRITICAL", "SUBCRITICAL", "VERTICAL", "DEGENERATE"]
