"""Trajectories, nullclines and a small hand-written SVG phase portrait.

Rate constants come in as exact rationals; they are converted to floats only
for the integrator.  Equilibria are located with the exact pipeline and then
drawn at their high-precision coordinates.
"""
import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .crn_model import dynamic_key, parse_network
from .equilibria import count_positive_equilibria


@dataclass
class Trajectory:
    start: tuple
    t: np.ndarray
    x: np.ndarray
    accepted: int
    rejected: int
    status: str
    drift: float = None           # relative change of the conserved quantity, if one is registered

    @property
    def blew_up(self):
        return self.status == "blow-up"

    @property
    def truncated(self):
        return self.status != "complete"


@dataclass
class Portrait:
    network: object
    kappa: list
    trajectories: list
    equilibria: list = field(default_factory=list)     # (x, y, kind)
    continuum: bool = False
    conserved: str = None


# -------------------------------------------------------- conserved H ---
# For 2X->3X, X+Y->cX, X->0, 0->Y with k1 = k2, dividing by x gives a
# Hamiltonian system; c = 2 and c = 3 are the two members of the family.
_HAMILTONIAN_FAMILY = {c: dynamic_key(parse_network(f"2X->3X; X+Y->{c}X; X->0; 0->Y", species="XY"))
                       for c in (2, 3)}


def conserved_quantity(net, kappa):
    """A callable H(x, y) constant along orbits, or None when none is registered."""
    key = dynamic_key(net)
    for c, k in _HAMILTONIAN_FAMILY.items():
        if key != k:
            continue
        # read the rate of each reaction type off the network as given
        rate = {}
        for (s, p), kv in zip(net.pairs, kappa):
            v = (p[0] - s[0], p[1] - s[1])
            rate[(s, v)] = Fraction(kv)
        k1 = rate.get(((2, 0), (1, 0)))
        k2 = rate.get(((1, 1), (c - 1, -1)))
        k3 = rate.get(((1, 0), (-1, 0)))
        k4 = rate.get(((0, 0), (0, 1)))
        if None in (k1, k2, k3, k4) or k1 != k2:
            return None
        a, b, g, d = float(k1), float(k2) * (c - 1) / 2, float(k3), float(k4)
        return lambda x, y: a * x * y + b * y * y - g * y - d * math.log(x)
    return None


# ------------------------------------------------------------ sampling ---
def _arrays(net):
    return np.array(net.gamma.tolist(), dtype=float), np.array(net.A, dtype=np.int64)


def integrate(net, kappa, start, T=100.0, rtol=1e-9, atol=1e-12, bound=1e8, H=None):
    ts, xs, acc, rej, st = _kernels.integrate(*_arrays(net), [float(k) for k in kappa],
                                              [float(v) for v in start], float(T), rtol=rtol, atol=atol,
                                              bound=bound)
    drift = None
    if H is not None and len(ts) > 1:
        vals = np.array([H(p[0], p[1]) for p in xs])
        drift = float(np.max(np.abs(vals - vals[0])) / max(abs(vals[0]), 1e-300))
    return Trajectory(tuple(start), ts, xs, acc, rej, _kernels.STATUS[st], drift)


def equilibria(net, kappa):
    res = count_positive_equilibria(net, kappa)
    if res.continuum:
        return [], True
    out = []
    for e in res.equilibria:
        if e.det_sign < 0:
            kind = "saddle"
        elif e.trace_sign < 0:
            kind = "stable"
        elif e.trace_sign > 0:
            kind = "unstable"
        else:
            kind = "center-or-degenerate" if e.det_sign > 0 else "degenerate"
        if e.det_sign == 0:
            kind = "degenerate"
        out.append((float(e.point[0]), float(e.point[1]), kind))
    return out, False


def portrait(net, kappa, starts, T=100.0, rtol=1e-9, bound=1e8):
    kappa = [Fraction(k) for k in kappa]
    if len(kappa) != net.m or any(k <= 0 for k in kappa):
        raise ValueError("need one positive rate constant per reaction")
    if net.n != 2:
        raise ValueError("phase portraits are planar")
    for s in starts:
        if len(s) != 2 or min(s) <= 0:
            raise ValueError(f"start {s} is not in the open quadrant")
    H = conserved_quantity(net, kappa)
    trajs = [integrate(net, kappa, s, T, rtol, bound=bound, H=H) for s in starts]
    eqs, cont = equilibria(net, kappa)
    return Portrait(net, kappa, trajs, eqs, cont, "hamiltonian" if H else None)


# --------------------------------------------------------------- output ---
def to_csv(p):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["trajectory", "t", "x", "y", "status"])
    for i, tr in enumerate(p.trajectories):
        for t, (x, y) in zip(tr.t, tr.x):
            w.writerow([i, repr(float(t)), repr(float(x)), repr(float(y)), tr.status])
    return buf.getvalue()


def _contour(F, xs, ys):
    """Zero set of a sampled function as line segments (marching squares, no saddle disambiguation)."""
    segs = []
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            c = [(xs[i], ys[j], F[i, j]), (xs[i + 1], ys[j], F[i + 1, j]),
                 (xs[i + 1], ys[j + 1], F[i + 1, j + 1]), (xs[i], ys[j + 1], F[i, j + 1])]
            pts = []
            for a, b in zip(c, c[1:] + c[:1]):
                if (a[2] < 0) != (b[2] < 0):
                    s = a[2] / (a[2] - b[2])
                    pts.append((a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])))
            for k in range(0, len(pts) - 1, 2):
                segs.append((pts[k], pts[k + 1]))
    return segs


def _extent(p):
    xm, ym = 1.0, 1.0
    for tr in p.trajectories:
        ok = tr.x[np.all(np.isfinite(tr.x), axis=1)]
        if len(ok):
            xm = max(xm, float(np.percentile(ok[:, 0], 99)))
            ym = max(ym, float(np.percentile(ok[:, 1], 99)))
    for x, y, _ in p.equilibria:
        xm, ym = max(xm, x), max(ym, y)
    return 1.15 * xm, 1.15 * ym


_EQ_STYLE = {"stable": 'fill="black"', "unstable": 'fill="white" stroke="black"',
             "saddle": 'fill="gray" stroke="black"'}
_PALETTE = ["#1f5fa8", "#b8431b", "#2d8a3e", "#7a3fa0", "#a07a12", "#16808a"]


def to_svg(p, size=480, grid=120):
    W = H = size
    pad = 40
    xm, ym = _extent(p)

    def sx(x):
        return pad + (W - 2 * pad) * x / xm

    def sy(y):
        return H - pad - (H - 2 * pad) * y / ym

    gx = np.linspace(xm / grid / 10, xm, grid)
    gy = np.linspace(ym / grid / 10, ym, grid)
    X, Y = np.meshgrid(gx, gy, indexing="ij")
    pts = np.stack([X.ravel(), Y.ravel()], axis=1)
    F = _kernels.mass_action_rhs_vectorised(*_arrays(p.network), [float(k) for k in p.kappa], pts)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
           '<rect width="100%" height="100%" fill="white"/>',
           f'<path d="M{pad},{pad} V{H - pad} H{W - pad}" stroke="black" fill="none"/>',
           f'<text x="{W - pad}" y="{H - pad + 20}" font-size="12" text-anchor="end">x (max {xm:.3g})</text>',
           f'<text x="{pad - 8}" y="{pad - 8}" font-size="12">y (max {ym:.3g})</text>']
    for comp, colour in ((0, "#d08c00"), (1, "#8c00d0")):
        segs = _contour(F[:, comp].reshape(X.shape), gx, gy)
        d = " ".join(f"M{sx(a[0]):.2f},{sy(a[1]):.2f} L{sx(b[0]):.2f},{sy(b[1]):.2f}" for a, b in segs)
        if d:
            out.append(f'<path class="nullcline-{"xy"[comp]}" d="{d}" stroke="{colour}" stroke-dasharray="4 3" '
                       f'fill="none" stroke-width="1"/>')
    for i, tr in enumerate(p.trajectories):
        ok = [(x, y) for x, y in tr.x if np.isfinite(x) and np.isfinite(y) and x <= xm and y <= ym]
        if len(ok) < 2:
            continue
        step = max(1, len(ok) // 4000)
        d = "M" + " L".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in ok[::step])
        dash = ' stroke-dasharray="2 2"' if tr.truncated else ""
        out.append(f'<path class="trajectory" d="{d}" stroke="{_PALETTE[i % len(_PALETTE)]}" fill="none" '
                   f'stroke-width="1.2"{dash}/>')
    for x, y, kind in p.equilibria:
        style = _EQ_STYLE.get(kind, 'fill="red" stroke="black"')
        out.append(f'<circle class="equilibrium {kind}" cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="4" {style}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def parse_rational_list(text):
    vals = []
    for tok in text.split(","):
        tok = tok.strip()
        if "." in tok or "e" in tok.lower():
            raise ValueError(f"{tok!r}: rate constants must be integers or fractions like 3/2")
        vals.append(Fraction(tok))
    return vals


__all__ = ["Trajectory", "Portrait", "portrait", "integrate", "equilibria", "conserved_quantity", "to_csv",
           "to_svg", "parse_rational_list"]
