"""Closed-form checks on the vertical Bogdanov-Takens network 2X->3X, X+Y->2X, X->0, 0->Y.

With rates k1..k4 in that order the field is
    x' = k1 x^2 + k2 x y - k3 x,    y' = -k2 x y + k4.
Positive equilibria solve k1 x^2 - k3 x + k4 = 0, so their number changes
where 4 k1 k4 = k3^2.  Multiplying by 1/x gives divergence k1 - k2.
"""
from fractions import Fraction

from .crn_model import parse_network, mass_action_rhs
from .equilibria import count_positive_equilibria
from .portrait import portrait

NETWORK_9 = "2X->3X; X+Y->2X; X->0; 0->Y"

# three (k1, k2, k3, k4) per regime of 4 k1 k4 - k3^2: positive, zero, negative
TRANSITION_SAMPLES = {
    0: [(1, 1, 1, 1), (2, 3, 1, 5), (Fraction(1, 2), 7, 2, 3)],
    1: [(1, 1, 2, 1), (1, 5, 6, 9), (3, Fraction(2, 3), 6, 3)],
    2: [(1, 1, 3, 1), (2, 1, 5, 3), (Fraction(1, 3), 4, 2, 1)],
}


def network9():
    return parse_network(NETWORK_9, species="XY")


def equilibrium_transitions():
    """(expected count, observed count, 4 k1 k4 - k3^2) for every sample."""
    net = network9()
    out = []
    for want, samples in TRANSITION_SAMPLES.items():
        for k in samples:
            k = [Fraction(v) for v in k]
            disc = 4 * k[0] * k[3] - k[2] ** 2
            out.append((want, count_positive_equilibria(net, k).count, disc))
    return out


def dulac_identity():
    """x^2 div(f / x) == (k1 - k2) x^2 as polynomials in (x, y, k)."""
    f1, f2 = mass_action_rhs(network9())
    x = type(f1).var("x", f1.vars)
    k1 = type(f1).var("k1", f1.vars)
    k2 = type(f1).var("k2", f1.vars)
    # d/dx (f1/x) = (x f1_x - f1) / x^2 and d/dy (f2/x) = f2_y / x
    lhs = x * f1.diff("x") - f1 + x * f2.diff("y")
    return lhs == (k1 - k2) * x * x


def hamiltonian_drift(kappa=(1, 1, 3, 1), T=100.0, rtol=1e-9, offset=Fraction(21, 20)):
    """Relative drift of H along the orbit started at offset times the center equilibrium."""
    net = network9()
    k = [Fraction(v) for v in kappa]
    eq = count_positive_equilibria(net, k)
    center = [e for e in eq.equilibria if e.det_sign > 0][0]
    start = (float(center.point[0]) * float(offset), float(center.point[1]))
    p = portrait(net, k, [start], T=T, rtol=rtol)
    return p.trajectories[0].drift, p.trajectories[0]


def network9_checks(tol=1e-6):
    tr = equilibrium_transitions()
    drift, traj = hamiltonian_drift()
    return {"transitions-matched": sum(1 for want, got, _ in tr if want == got),
            "dulac-identity": int(dulac_identity()),
            "hamiltonian-drift-ok": int(drift is not None and drift < tol and traj.status == "complete")}


__all__ = ["NETWORK_9", "network9", "equilibrium_transitions", "dulac_identity", "hamiltonian_drift",
           "network9_checks", "TRANSITION_SAMPLES"]
