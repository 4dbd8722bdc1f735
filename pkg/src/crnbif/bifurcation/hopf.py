"""Andronov-Hopf feasibility and the focal-value classification.

A positive equilibrium with tr J = 0 < det J exists exactly when some alpha in
(0, 1) has Q(alpha) > 0 together with either p q < 0 (then x : y is fixed by
the trace) or p = q = 0 (then x : y is free).  The two situations give the
one-parameter families used for the focal values:

* interval pieces: u' = D Gamma (h(alpha) ∘ u^A) with D = sgn(p) diag(-q, p);
* point pieces at a rational alpha* with p = q = 0: D = diag(s, 1), s > 0.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.upoly import UPoly, isolate_real_roots, sign_at_root, gcd as ugcd, squarefree
from ..algebra.scalar import sign
from .focal import lyapunov_quantities, field_data
from .planar import planar_data, decompose

SUPERCRITICAL = "Supercritical"
SUBCRITICAL = "Subcritical"
VERTICAL = "Vertical"
MIXED = "Mixed"
BAUTIN = "Bautin"
NONE = "None"
UNRESOLVED = "Unresolved"

_CH = {1: "+", -1: "-", 0: "0"}


@dataclass
class HopfPiece:
    kind: str                 # "interval" or "point"
    alpha: object = None      # rational alpha* for point pieces
    cells: list = field(default_factory=list)   # rational samples of the Hopf cells (interval pieces)


@dataclass
class HopfVerdict:
    verdict: str
    L1_signs: frozenset = frozenset()
    L2_sign: str = None
    L3_sign: str = None
    witness: dict = None
    pieces: list = field(default_factory=list)
    trail: list = field(default_factory=list)

    @property
    def feasible(self):
        return self.verdict != NONE

    def to_json(self):
        return {"verdict": self.verdict, "L1_sign": "".join(sorted(self.L1_signs)) or None,
                "L2_sign": self.L2_sign, "L3_sign": self.L3_sign,
                "witness": None if self.witness is None else {k: str(v) for k, v in self.witness.items()}}


def hopf_pieces(d):
    """Interval and point pieces of the Hopf region in alpha."""
    pieces = []
    Q, p, q = d.Q, d.p, d.q
    if Q.is_zero():
        return pieces
    if not p.is_zero() and not q.is_zero():
        roots, cells = decompose([Q, p, q])
        hcells = [c.sample for c in cells
                  if Q(c.sample) > 0 and p(c.sample) * q(c.sample) < 0]
        if hcells:
            pieces.append(HopfPiece("interval", cells=hcells))
    if p.is_zero() and q.is_zero():
        raise NotImplementedError("trace identically zero in alpha")
    g = ugcd(p, q) if not (p.is_zero() or q.is_zero()) else (q if p.is_zero() else p)
    if g.deg() == 1:
        # p and q are affine, so a common root is rational
        a = -g.c[0] / g.c[1]
        if 0 < a < 1 and Q(a) > 0:
            pieces.append(HopfPiece("point", alpha=a))
    return pieces


def hopf_witness(d, piece):
    """Exact (alpha, x, y) with tr J = 0 and det J > 0."""
    if piece.kind == "point":
        return {"alpha": piece.alpha, "x": Fraction(1), "y": Fraction(1)}
    a = piece.cells[0]
    pv, qv = d.p(a), d.q(a)
    s = 1 if pv > 0 else -1
    return {"alpha": a, "x": 1 / (-qv * s), "y": 1 / (pv * s)}


def focal_polys(d, piece, maxk):
    """(P_1..P_maxk, variable domain) for one piece; sign(L_k) = orientation * sign(P_k)."""
    if piece.kind == "interval":
        D = [-d.q, d.p]
        J, B = field_data(d.G, d.A, d.h, D)
    else:
        hv = [UPoly.const(hj(piece.alpha)) for hj in d.h]
        D = [UPoly.x(), UPoly.const(1)]
        J, B = field_data(d.G, d.A, hv, D)
    P, delta = lyapunov_quantities(J, B, maxk)
    return P


def focal_values_at(net, kappa, point, maxk=3):
    """Focal polynomials evaluated at one exact Hopf point of a quadratic network.

    ``point`` must be an equilibrium with tr J = 0 and det J > 0.  Returns
    rationals whose signs agree with L_1..L_maxk up to one common positive
    factor; all of them vanish at a center.
    """
    from ..crn_model import mass_action_rhs, rhs_names
    if not net.is_quadratic() or net.n != 2:
        raise ValueError("needs a planar quadratic network")
    xs, ks = rhs_names(net)
    f = [fi.subs(dict(zip(ks, [Fraction(k) for k in kappa]))) for fi in mass_action_rhs(net)]
    at = dict(zip(xs, [Fraction(v) for v in point]))
    if any(fi.subs(at).constant() != 0 for fi in f):
        raise ValueError("point is not an equilibrium")
    J = [[UPoly.const(f[i].diff(xs[k]).subs(at).constant()) for k in range(2)] for i in range(2)]
    if not (J[0][0] + J[1][1]).is_zero() or (J[0][0] * J[1][1] - J[0][1] * J[1][0]).c[0] <= 0:
        raise ValueError("point is not a Hopf point")

    def second(i, a, b):
        return f[i].diff(xs[a]).diff(xs[b]).subs(at).constant()
    B = [(UPoly.const(second(i, 0, 0) / 2), UPoly.const(second(i, 0, 1)), UPoly.const(second(i, 1, 1) / 2))
         for i in range(2)]
    P, _ = lyapunov_quantities(J, B, maxk)
    return [p.c[0] if p.c else Fraction(0) for p in P]


def hopf_analysis(net, data=None, classify=True):
    d = data or planar_data(net)
    trail = []
    if not any(s == (1, 1) for s in net.sources):
        return HopfVerdict(NONE, trail=["no-mixed-source"])
    if not any((s, r) in (((2, 0), (1, 0)), ((0, 2), (0, 1))) for s, r in zip(net.sources, net.rays)):
        return HopfVerdict(NONE, trail=["no-autocatalytic-square"])
    pieces = hopf_pieces(d)
    trail.append("root-isolation")
    if not pieces:
        return HopfVerdict(NONE, trail=trail)
    witness = hopf_witness(d, pieces[0])
    if not classify:
        return HopfVerdict("Feasible", witness=witness, pieces=pieces, trail=trail)
    return classify_focal(d, pieces, witness, trail)


def _region(d, piece):
    """Predicate on the piece's parameter: orientation sign inside the Hopf region, else 0."""
    if piece.kind == "point":
        return lambda s: 1 if _gt0(s) else 0
    Q, p, q = d.Q, d.p, d.q

    def pred(x):
        if isinstance(x, Fraction):
            vq, vp, vqq = sign(Q(x)), sign(p(x)), sign(q(x))
        else:
            vq, vp, vqq = sign_at_root(Q, x), sign_at_root(p, x), sign_at_root(q, x)
        return vp if (vq > 0 and vp * vqq < 0) else 0
    return pred


def _gt0(x):
    return (x > 0) if isinstance(x, Fraction) else (x.lo >= 0 and (x.lo > 0 or x.hi > 0))


def _decomp_args(d, piece):
    if piece.kind == "point":
        return [], Fraction(0), None
    return [d.Q, d.p, d.q], Fraction(0), Fraction(1)


def _piece_signs(d, piece, P):
    polys, lo, hi = _decomp_args(d, piece)
    pred = _region(d, piece)
    if P.is_zero():
        return {0}, []
    roots, cells = decompose(polys + [P], lo, hi)
    S = set()
    for c in cells:
        o = pred(c.sample)
        if o:
            S.add(sign(P(c.sample)) * o)
    zeros = []
    for r in roots:
        if sign_at_root(P, r) == 0:
            o = pred(r)
            if o:
                zeros.append((r, o))
    return S, zeros


def classify_focal(d, pieces, witness, trail):
    maxk = 1
    P_by_piece = [focal_polys(d, pc, 1) for pc in pieces]
    L1 = set()
    zeros = []
    for pc, P in zip(pieces, P_by_piece):
        S, z = _piece_signs(d, pc, P[0])
        L1 |= S
        zeros += [(pc, r, o) for r, o in z]
    trail.append("focal-L1")
    identically_zero = L1 == {0}
    if not zeros and not identically_zero and 0 not in L1:
        if L1 == {-1}:
            return HopfVerdict(SUPERCRITICAL, frozenset("-"), witness=witness, pieces=pieces, trail=trail)
        if L1 == {1}:
            return HopfVerdict(SUBCRITICAL, frozenset("+"), witness=witness, pieces=pieces, trail=trail)
        return HopfVerdict(MIXED, frozenset("+-"), witness=witness, pieces=pieces, trail=trail)
    # higher focal values are needed
    trail.append("focal-L2-L3")
    full = {id(pc): focal_polys(d, pc, 3) for pc in pieces}
    if identically_zero:
        s2, s3 = set(), set()
        for pc in pieces:
            P = full[id(pc)]
            a, _ = _piece_signs(d, pc, P[1])
            b, _ = _piece_signs(d, pc, P[2])
            s2 |= a
            s3 |= b
        if s2 == {0} and s3 == {0}:
            return HopfVerdict(VERTICAL, frozenset("0"), "0", "0", witness, pieces, trail)
        return HopfVerdict(BAUTIN, frozenset("0"), _fmt(s2), _fmt(s3), witness, pieces, trail)
    l2, l3 = set(), set()
    for pc, r, o in zeros:
        P = full[id(pc)]
        l2.add(sign_at_root(P[1], r) * o)
        l3.add(sign_at_root(P[2], r) * o)
    signs1 = frozenset(_CH[s] for s in L1)
    if l2 == {0} and l3 == {0}:
        return HopfVerdict(MIXED, signs1, "0", "0", witness, pieces, trail)
    return HopfVerdict(BAUTIN, signs1, _fmt(l2), _fmt(l3), witness, pieces, trail)


def _fmt(s):
    return "".join(sorted(_CH[x] for x in s))


__all__ = ["HopfVerdict", "HopfPiece", "hopf_analysis", "hopf_pieces", "hopf_witness", "focal_polys",
           "classify_focal", "focal_values_at", "SUPERCRITICAL", "SUBCRITICAL", "VERTICAL", "MIXED", "BAUTIN", "NONE"]
