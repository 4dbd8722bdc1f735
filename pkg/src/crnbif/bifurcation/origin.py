"""Stability of the origin as a boundary equilibrium, for every positive rate vector.

The Jacobian at 0 only sees reactions with a monomolecular source, so its
trace and determinant are polynomials in the rate constants whose signs are
decided on the open orthant.  When the determinant vanishes identically and
the kernel is a coordinate axis that is invariant, that axis is the center
manifold and the restricted one-dimensional flow decides stability.
"""
from dataclasses import dataclass, field

from ..algebra.poly import ExactPoly
from ..algebra.sign import Domain, decide_sign, ALL_POSITIVE, ALL_NEGATIVE, IDENTICALLY_ZERO
from ..crn_model import mass_action_rhs, rhs_names

NO_BOUNDARY = "NoBoundaryEquilibrium"
STABLE = "StableOrigin"
SADDLE = "SaddleOrigin"
UNSTABLE = "UnstableOrigin"
UNRESOLVED = "Unresolved"


@dataclass
class OriginVerdict:
    verdict: str
    mechanism: str = None           # "hyperbolic" or "center-manifold"
    restricted_flow: str = None     # text of the one-dimensional flow on the center manifold
    trail: list = field(default_factory=list)

    def to_json(self):
        return {"verdict": self.verdict, "mechanism": self.mechanism, "restricted_flow": self.restricted_flow}


def _sign(p, ks):
    if p.is_zero():
        return IDENTICALLY_ZERO
    return decide_sign(p, Domain.orthant(ks)).verdict


def origin_stability(net):
    if net.n != 2:
        raise ValueError("origin classification is implemented for two species")
    if any(not any(a) for a in net.sources):
        return OriginVerdict(NO_BOUNDARY, trail=["inflow-reaction"])
    xs, ks = rhs_names(net)
    f = mass_action_rhs(net)
    zero = {v: 0 for v in xs}
    J = [[f[i].diff(xs[k]).subs(zero) for k in range(2)] for i in range(2)]
    tr = J[0][0] + J[1][1]
    det = J[0][0] * J[1][1] - J[0][1] * J[1][0]
    trail = ["linearisation"]
    sd, st = _sign(det, ks), _sign(tr, ks)
    if sd == ALL_NEGATIVE:
        return OriginVerdict(SADDLE, "hyperbolic", trail=trail)
    if sd == ALL_POSITIVE:
        if st == ALL_NEGATIVE:
            return OriginVerdict(STABLE, "hyperbolic", trail=trail)
        if st == ALL_POSITIVE:
            return OriginVerdict(UNSTABLE, "hyperbolic", trail=trail)
        return OriginVerdict(UNRESOLVED, trail=trail)
    if sd != IDENTICALLY_ZERO or st != ALL_NEGATIVE:
        return OriginVerdict(UNRESOLVED, trail=trail)
    trail.append("center-manifold")
    # the kernel must be a coordinate axis that the flow leaves invariant
    for k in range(2):
        o = 1 - k
        col_zero = J[0][k].is_zero() and J[1][k].is_zero()
        if not col_zero:
            continue
        axis = {xs[o]: 0}
        if not f[o].subs(axis).is_zero():
            continue
        g = f[k].subs(axis)
        # lowest-order term of the restricted flow (the linear term vanishes)
        kk = g.vars.index(xs[k])
        lead = min((e for e in g.terms), key=lambda e: e[kk], default=None)
        if lead is None:
            return OriginVerdict(UNRESOLVED, trail=trail)
        deg = lead[kk]
        low = ExactPoly(g.vars, {e: c for e, c in g.terms.items() if e[kk] == deg})
        s = _sign(low.subs({xs[k]: 1}), ks)
        flow = f"d{xs[k]}/dt = {low}"
        if deg % 2 == 0 and s == ALL_NEGATIVE:
            # x' = -c x^2 + ...: attracting from the side x > 0, which is all the quadrant sees
            return OriginVerdict(STABLE, "center-manifold", flow, trail)
        if deg % 2 == 1 and s == ALL_NEGATIVE:
            return OriginVerdict(STABLE, "center-manifold", flow, trail)
        if s == ALL_POSITIVE:
            return OriginVerdict(UNSTABLE, "center-manifold", flow, trail)
    return OriginVerdict(UNRESOLVED, trail=trail)


def bistable(net, fold=None):
    """Stable origin together with a fold whose second eigenvalue is negative."""
    from .fold import fold_analysis
    fv = fold or fold_analysis(net)
    if not fv.feasible or "-" not in fv.eig2_signs:
        return False
    return origin_stability(net).verdict == STABLE


__all__ = ["OriginVerdict", "origin_stability", "bistable", "NO_BOUNDARY", "STABLE", "SADDLE", "UNSTABLE"]
