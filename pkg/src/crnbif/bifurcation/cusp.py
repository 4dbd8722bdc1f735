"""Numerical check that outer parameters cannot unfold a cusp.

In the recoordinatised system  y' = gamma ∘ Gamma((beta^U) ∘ y^A)  the
outer parameters gamma act by a positive diagonal rescaling.  At a fold
point the defect f, the determinant F and the quadratic coefficient G along
the kernel have vanishing gamma-derivatives whenever G itself vanishes.
Away from a cusp G is only rescaled: with p, q the normalised left and
right null vectors, G / |gamma ∘ p| does not depend on gamma.  The check
below differentiates (f, F, G / |gamma ∘ p|) in gamma by central
differences in high precision; at a cusp point the last entry is exactly
the derivative of G up to a positive factor.
"""
from fractions import Fraction

import mpmath

from ..algebra.qfield import QSqrt
from ..equilibria import recoordinatise, kernel_cone


def _mp(v, mp):
    if isinstance(v, QSqrt):
        return v.to_mp(mp)
    v = Fraction(v)
    return mp.mpf(v.numerator) / v.denominator


class _Family:
    def __init__(self, net, rec, mp):
        self.mp = mp
        self.G = [[int(net.gamma[i, j]) for j in range(net.m)] for i in range(net.n)]
        self.A = net.A
        self.U = rec.U
        self.m, self.n = net.m, net.n

    def rates(self, y, beta):
        mp = self.mp
        out = []
        for j in range(self.m):
            r = mp.mpf(1)
            for k, b in enumerate(beta):
                if self.U[j][k]:
                    r *= b ** self.U[j][k]
            for i in range(self.n):
                if self.A[j][i]:
                    r *= y[i] ** self.A[j][i]
            out.append(r)
        return out

    def f(self, y, beta, gamma):
        r = self.rates(y, beta)
        return [gamma[i] * sum(self.G[i][j] * r[j] for j in range(self.m)) for i in range(self.n)]

    def jac(self, y, beta, gamma):
        r = self.rates(y, beta)
        return [[gamma[i] * sum(self.G[i][j] * r[j] * self.A[j][k] / y[k] for j in range(self.m))
                 for k in range(self.n)] for i in range(self.n)]

    def quad(self, y, beta, gamma, u):
        """B(u, u): second derivative of the field along u."""
        r = self.rates(y, beta)
        out = []
        for i in range(self.n):
            acc = 0
            for j in range(self.m):
                a = self.A[j]
                s = 0
                for k in range(self.n):
                    for l in range(self.n):
                        c = a[k] * a[l] - (a[k] if k == l else 0)
                        if c:
                            s += c * u[k] * u[l] / (y[k] * y[l])
                acc += self.G[i][j] * r[j] * s
            out.append(gamma[i] * acc)
        return out


def _null_pair(J, mp):
    (a, b), (c, d) = J
    q = (b, -a) if abs(a) + abs(b) >= abs(c) + abs(d) else (d, -c)
    nq = mp.sqrt(q[0] ** 2 + q[1] ** 2)
    if max(q, key=abs) < 0:
        nq = -nq            # fix the orientation so nearby evaluations agree
    q = (q[0] / nq, q[1] / nq)
    p = (c, -a) if abs(a) + abs(c) >= abs(b) + abs(d) else (d, -b)
    s = p[0] * q[0] + p[1] * q[1]
    return (p[0] / s, p[1] / s), q


def _triple(fam, y, beta, gamma, mp):
    fv = fam.f(y, beta, gamma)
    J = fam.jac(y, beta, gamma)
    F = J[0][0] * J[1][1] - J[0][1] * J[1][0]
    p, q = _null_pair(J, mp)
    B = fam.quad(y, beta, gamma, q)
    G = p[0] * B[0] + p[1] * B[1]
    return fv + [F, G / mp.sqrt((gamma[0] * p[0]) ** 2 + (gamma[1] * p[1]) ** 2)]


def cusp_gradient_check(net, witness, rtol=1e-8, dps=40, U=None):
    """True when d(f, F, G)/d(gamma) vanishes at the fold witness.

    ``witness`` holds ``alpha`` (Fraction or QSqrt) and optionally ``x``,
    ``y``.  Raises ValueError when the point is not a simple-zero fold.
    """
    if net.n != 2:
        raise ValueError("the check is implemented for planar networks")
    with mpmath.workdps(dps):
        mp = mpmath.mp
        rec = recoordinatise(net, U)
        cone = kernel_cone(net)
        al = _mp(witness["alpha"], mp)
        hv = [sum(_mp(c, mp) * al ** e for e, c in enumerate(hj.c)) for hj in cone.h()]
        x = [_mp(witness.get("x", 1), mp), _mp(witness.get("y", 1), mp)]
        kappa = []
        for j, a in enumerate(net.sources):
            kappa.append(hv[j] / (x[0] ** a[0] * x[1] ** a[1]))

        def kpow(row):
            out = mp.mpf(1)
            for k, e in zip(kappa, row):
                if e:
                    out *= k ** _mp(e, mp)
            return out

        y = [kpow(rec.G[i]) * x[i] for i in range(2)]
        beta = [kpow(w) for w in rec.W]
        gamma = [kpow(r) for r in rec.outer_exponents]
        fam = _Family(net, rec, mp)
        J = fam.jac(y, beta, gamma)
        fv = fam.f(y, beta, gamma)
        F = J[0][0] * J[1][1] - J[0][1] * J[1][0]
        scale = max(abs(v) for row in J for v in row)
        tol0 = mp.mpf(10) ** (-dps // 2)
        if max(abs(v) for v in fv) > tol0 * scale or abs(F) > tol0 * scale ** 2:
            raise ValueError("witness is not an equilibrium with a zero eigenvalue")
        if abs(J[0][0] + J[1][1]) <= tol0 * scale:
            raise ValueError("zero eigenvalue is not simple at the witness")
        h = mp.mpf(10) ** (-dps // 3)
        worst = mp.mpf(0)
        for i in range(2):
            gp = list(gamma)
            gm = list(gamma)
            gp[i] += h * gamma[i]
            gm[i] -= h * gamma[i]
            tp, tm = _triple(fam, y, beta, gp, mp), _triple(fam, y, beta, gm, mp)
            d = [(a - b) / (2 * h * gamma[i]) for a, b in zip(tp, tm)]
            # F is quadratic in the field, the others linear
            ref = [scale, scale, scale ** 2, scale]
            worst = max(worst, max(abs(v) / r for v, r in zip(d, ref)))
        return bool(worst < rtol)


__all__ = ["cusp_gradient_check"]
