"""Fold (saddle-node) feasibility and the sign of the second eigenvalue.

On the equilibrium set, det J = Q(alpha)/(xy) and tr J = p(alpha)/x + q(alpha)/y.
Q has degree at most two, so its roots live in a quadratic field and every
sign below is decided exactly there.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.qfield import QSqrt, quadratic_roots, exact_sign
from ..algebra.poly import ExactPoly
from ..algebra.sign import Domain, decide_sign
from .planar import planar_data

NONE = "None"
NONDEGENERATE = "Nondegenerate"
NILPOTENT_ONLY = "NilpotentOnly"
VERTICAL = "Vertical"


@dataclass
class FoldVerdict:
    verdict: str
    eig2_signs: frozenset = frozenset()
    roots: list = field(default_factory=list)      # alpha* values (Fraction or QSqrt)
    witness: dict = None
    trail: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)   # one per root

    @property
    def feasible(self):
        return self.verdict in (NONDEGENERATE, NILPOTENT_ONLY)

    def to_json(self):
        return {"verdict": self.verdict, "eig2_signs": sorted(self.eig2_signs),
                "witness": _wjson(self.witness), "alpha_roots": [_sjson(r) for r in self.roots]}


def _sjson(v):
    return v.to_json() if isinstance(v, QSqrt) else str(v)


def _wjson(w):
    return None if w is None else {k: _sjson(v) for k, v in w.items()}


def poly_roots_in_unit(Q):
    """Distinct roots of a polynomial of degree <= 2 in (0, 1), exactly."""
    cs = list(Q.c) + [Fraction(0)] * (3 - len(Q.c))
    if Q.deg() == 2:
        rts = quadratic_roots(cs[0], cs[1], cs[2])
    elif Q.deg() == 1:
        rts = [-cs[0] / cs[1]]
    else:
        rts = []
    return [r for r in rts if exact_sign(r) > 0 and exact_sign(r - 1) < 0]


def ev(p, x):
    """Evaluate a UPoly at a Fraction or QSqrt."""
    acc = 0
    for c in reversed(p.c):
        acc = acc * x + c
    return acc


def fold_analysis(net, data=None):
    d = data or planar_data(net)
    trail = []
    if d.Q.is_zero():
        trail.append("identically-zero")
        return FoldVerdict(VERTICAL, trail=trail)
    dec = decide_sign(ExactPoly.from_upoly(d.Q, "alpha"), Domain({"alpha": (0, 1)}))
    trail += dec.trail
    roots = poly_roots_in_unit(d.Q)
    trail.append("quadratic-field-roots")
    if not roots:
        return FoldVerdict(NONE, trail=trail)
    signs = set()
    nil = True
    witness = None
    ws = []
    for r in roots:
        pv, qv = ev(d.p, r), ev(d.q, r)
        sp, sq = exact_sign(pv), exact_sign(qv)
        if sp or sq:
            nil = False
        for s in (sp, sq):
            if s > 0:
                signs.add("+")
            elif s < 0:
                signs.add("-")
        # tr J = p/x + q/y; move off the trace-zero ray when x = y = 1 lands on it
        y = Fraction(2) if (sp or sq) and exact_sign(pv + qv) == 0 else Fraction(1)
        w = {"alpha": r, "x": Fraction(1), "y": y}
        ws.append(w)
        if witness is None or (sp or sq):
            witness = w
    verdict = NILPOTENT_ONLY if nil else NONDEGENERATE
    return FoldVerdict(verdict, frozenset(signs), roots, witness, trail, ws)


__all__ = ["FoldVerdict", "fold_analysis", "poly_roots_in_unit", "ev", "NONE", "NONDEGENERATE", "NILPOTENT_ONLY",
           "VERTICAL"]
