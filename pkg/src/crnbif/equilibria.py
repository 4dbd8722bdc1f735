"""Positive equilibria through the kernel-cone parameterisation.

For a network with positive kernel ``ker Gamma ∩ R^m_+ = {lam h(alpha)}`` the
positive equilibria are the points with ``kappa ∘ x^A = lam h(alpha)``, and
the Jacobian there is ``lam Gamma D_h A D_{1/x}``.  Throughout, lam = 1
(trace and determinant zero sets do not depend on it).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

import mpmath

from .algebra.matrix import ExactMatrix
from .algebra.poly import ExactPoly
from .algebra.upoly import UPoly, isolate_real_roots, sign_at_root, gcd as ugcd, squarefree
from .algebra.sign import Domain, decide_sign, SignDecision
from .crn_model import is_dynamically_nontrivial, mass_action_rhs, rhs_names


class DynamicallyTrivial(ValueError):
    pass


def _integer_primitive(v):
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    iv = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in iv:
        g = gcd(g, x)
    return tuple(x // g for x in iv) if g else tuple(iv)


@dataclass
class KernelCone:
    generators: list
    dimension: int

    def h(self):
        """h(alpha) = (1 - alpha) g1 + alpha g2 as UPolys (one generator: constant)."""
        if len(self.generators) == 1:
            return [UPoly.const(c) for c in self.generators[0]]
        if len(self.generators) != 2:
            raise ValueError("the one-parameter section needs exactly two generators")
        g1, g2 = self.generators
        return [UPoly((a, b - a)) for a, b in zip(g1, g2)]

    def at(self, alpha):
        return [p(Fraction(alpha)) for p in self.h()]


def kernel_cone(net):
    """Extreme rays of ker Gamma ∩ R^m_{>=0}, as coprime integer vectors."""
    if not is_dynamically_nontrivial(net):
        raise DynamicallyTrivial("the positive kernel is empty")
    G = net.gamma.tolist()
    m = net.m
    d = m - net.rank
    gens = set()
    for zeros in combinations(range(m), d - 1):
        rows = G + [[1 if j == z else 0 for j in range(m)] for z in zeros]
        ns = ExactMatrix(rows).nullspace()
        if len(ns) != 1:
            continue
        v = ns[0]
        if all(x <= 0 for x in v):
            v = [-x for x in v]
        if all(x >= 0 for x in v) and any(v):
            gens.add(_integer_primitive(v))
    return KernelCone(sorted(gens), d)


# ------------------------------------------------------------- jacobian ---
@dataclass
class SymbolicJacobian:
    """J(alpha, x) = M(alpha) D_{1/x} with M = Gamma D_h A.

    ``entries`` hold M·diag(prod_{k != i} x_k), i.e. J times ``cleared``
    (the product of all coordinates).
    """
    M: list             # n x n UPoly in alpha
    names: tuple        # ('alpha', 'x', 'y', ...)
    cleared: str
    cone: KernelCone

    @property
    def n(self):
        return len(self.M)

    @property
    def Q(self):
        """det M(alpha); det J = Q / prod x."""
        return upoly_det(self.M)

    @property
    def diag(self):
        return [self.M[i][i] for i in range(self.n)]

    def entries(self):
        al = self.names[0]
        xs = self.names[1:]
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                e = ExactPoly.from_upoly(self.M[i][j], al).with_vars(self.names)
                for k, xk in enumerate(xs):
                    if k != j:
                        e = e * ExactPoly.var(xk, self.names)
                row.append(e)
            out.append(row)
        return out

    def trace(self):
        """tr J times prod x."""
        E = self.entries()
        acc = ExactPoly(self.names, {})
        for i in range(self.n):
            acc = acc + E[i][i]
        return acc

    def det(self):
        """det J times prod x (a polynomial in alpha alone)."""
        return ExactPoly.from_upoly(self.Q, self.names[0]).with_vars(self.names)

    def numeric(self, alpha, point):
        """Exact J at (alpha, x) with lam = 1."""
        return [[self.M[i][j](Fraction(alpha)) / Fraction(point[j]) for j in range(self.n)] for i in range(self.n)]


def upoly_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    acc = UPoly()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * upoly_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def m_matrix(net, cone=None):
    cone = cone or kernel_cone(net)
    h = cone.h()
    G = net.gamma
    A = net.A
    n, m = net.n, net.m
    return [[sum((h[j] * (G[i, j] * A[j][k]) for j in range(m)), UPoly()) for k in range(n)] for i in range(n)], cone


def symbolic_jacobian(net, cone=None):
    if net.rank != net.n:
        raise ValueError("the equilibrium Jacobian form needs rank = number of species")
    M, cone = m_matrix(net, cone)
    xs, _ = rhs_names(net)
    sj = SymbolicJacobian(M, ("alpha",) + xs, "*".join(xs), cone)
    assert all(sj.M[i][i].deg() <= 1 for i in range(net.n))
    if net.n == 2:
        assert sj.Q.deg() <= 2
    return sj


@dataclass
class EquilibriumDecision:
    admits: bool
    decision: SignDecision
    witness: dict = None

    def __bool__(self):
        return self.admits


def admits_positive_nondegenerate_equilibrium(net):
    """det J is not identically zero on alpha in (0,1), with an exact witness."""
    sj = symbolic_jacobian(net)
    Q = sj.Q
    dec = decide_sign(ExactPoly.from_upoly(Q, "alpha"), Domain({"alpha": (0, 1)}))
    if dec.verdict == "IdenticallyZero":
        return EquilibriumDecision(False, dec)
    if dec.verdict == "Unresolved":
        raise RuntimeError("sign ladder could not decide the determinant")
    # any point off the finitely many roots is a witness
    a = Fraction(1, 2)
    while Q(a) == 0:
        a = a / 2
    return EquilibriumDecision(True, dec, {"alpha": a, "x": Fraction(1), "y": Fraction(1)})


def realise_kappa(net, alpha, point, cone=None, lam=1):
    """kappa = lam h(alpha) ∘ x^{-A}: the rate constants making ``point`` an equilibrium."""
    cone = cone or kernel_cone(net)
    hv = cone.at(alpha)
    out = []
    for j, a in enumerate(net.sources):
        mono = Fraction(1)
        for xi, ai in zip(point, a):
            mono *= Fraction(xi) ** ai
        out.append(Fraction(lam) * hv[j] / mono)
    return out


# ------------------------------------------------------ recoordinatise ---
@dataclass
class Recoordinatisation:
    G: list
    v: list
    W: list
    U: list

    @property
    def inner_exponents(self):
        return [list(r) for r in self.W]

    @property
    def outer_exponents(self):
        return [[g + vv for g, vv in zip(row, self.v)] for row in self.G]

    @property
    def n_outer(self):
        return len(self.G)

    @property
    def n_inner(self):
        return len(self.W)

    def reduced_family_size(self):
        # after rescaling time, m - 2 parameters remain
        return len(self.v) - 2

    def describe(self):
        return {"outer": self.n_outer, "inner": self.n_inner, "family_after_time_rescaling": self.reduced_family_size()}


def affine_rank(net):
    return ExactMatrix([list(a) + [1] for a in net.sources]).rank()


def default_U(net):
    """Lexicographically first standard-basis columns completing [A | 1] to a nonsingular matrix."""
    m, n = net.m, net.n
    need = m - n - 1
    base = [list(a) + [1] for a in net.sources]
    for cols in combinations(range(m), need):
        U = [[1 if i == c else 0 for c in cols] for i in range(m)]
        if ExactMatrix([b + u for b, u in zip(base, U)]).det() != 0:
            return U
    raise ValueError("no standard-basis completion exists")


def recoordinatise(net, U=None):
    m, n = net.m, net.n
    if m - n < 1 or affine_rank(net) != n + 1:
        raise ValueError("recoordinatisation needs m > n and rank [A | 1] = n + 1")
    U = [list(r) for r in U] if U is not None else default_U(net)
    full = ExactMatrix([list(a) + [1] + list(u) for a, u in zip(net.sources, U)])
    if full.det() == 0:
        raise ValueError("[A | 1 | U] is singular")
    inv = full.inverse().tolist()
    G, v, W = inv[:n], inv[n], inv[n + 1:]
    rec = Recoordinatisation(G, v, W, U)
    assert check_identity(net, rec)
    return rec


def check_identity(net, rec):
    """I - A G == 1 v + U W and W [A | 1] == 0, exactly."""
    m, n = net.m, net.n
    A = net.A
    for i in range(m):
        for j in range(m):
            lhs = (1 if i == j else 0) - sum(A[i][k] * rec.G[k][j] for k in range(n))
            rhs = rec.v[j] + sum(rec.U[i][k] * rec.W[k][j] for k in range(len(rec.W)))
            if lhs != rhs:
                return False
    for w in rec.W:
        for k in range(n):
            if sum(w[j] * A[j][k] for j in range(m)) != 0:
                return False
        if sum(w) != 0:
            return False
    return True


def solvability_rows(net):
    """Integer basis of the left kernel of [A | 1] (rows W with W[A|1] = 0)."""
    M = ExactMatrix([list(a) + [1] for a in net.sources]).T()
    return [_integer_primitive(v) for v in M.nullspace()]


def _kappa_pow(kappa, w, positive):
    out = Fraction(1)
    for k, e in zip(kappa, w):
        if (e > 0) == positive and e:
            out *= Fraction(k) ** abs(e)
    return out


def solvability_poly(h, w, kappa):
    """prod_{w>0} h^w kappa^{-w} ... cleared: h^{w+} kappa^{w-} - h^{w-} kappa^{w+}."""
    left = UPoly.const(1)
    right = UPoly.const(1)
    for hj, e in zip(h, w):
        if e > 0:
            left = left * hj ** e
        elif e < 0:
            right = right * hj ** (-e)
    return left * _kappa_pow(kappa, w, False) - right * _kappa_pow(kappa, w, True)


@dataclass
class Equilibrium:
    alpha: object                 # RootInterval
    point: tuple                  # mpmath values
    det_sign: int
    trace_sign: int


@dataclass
class EquilibriumCount:
    count: object                 # int or "Continuum"
    equilibria: list = field(default_factory=list)

    @property
    def continuum(self):
        return self.count == "Continuum"


def _solve_point(net, hval, kappa, dps):
    # log x from A log x + 1 log(1/lam) = log(h/kappa) on n+1 independent rows
    m, n = net.m, net.n
    A = net.A
    rows = []
    rhs = []
    for j in range(m):
        rows.append([mpmath.mpf(a) for a in A[j]] + [mpmath.mpf(-1)])
        rhs.append(mpmath.log(hval[j]) - mpmath.log(mpmath.mpf(kappa[j].numerator) / kappa[j].denominator))
    M = mpmath.matrix(rows)
    sol = mpmath.lu_solve(M.T * M, M.T * mpmath.matrix(rhs))
    return tuple(mpmath.e ** sol[i] for i in range(n)), mpmath.e ** sol[n]


def count_positive_equilibria(net, kappa, dps=50):
    """Count positive equilibria at exact rate constants via the solvability condition.

    Each alpha in (0,1) solving kappa^W = h(alpha)^W carries exactly one
    equilibrium when rank [A | 1] = n + 1.  The determinant sign equals the
    exact sign of Q(alpha); the trace sign is evaluated in high precision.
    """
    kappa = [Fraction(k) for k in kappa]
    if any(k <= 0 for k in kappa) or len(kappa) != net.m:
        raise ValueError("need one positive rate constant per reaction")
    try:
        cone = kernel_cone(net)
    except DynamicallyTrivial:
        return EquilibriumCount(0)
    if cone.dimension == 1:
        h = cone.h()
        W = solvability_rows(net)
        polys = [solvability_poly(h, w, kappa) for w in W]
        if all(p.is_zero() for p in polys):
            if net.rank < net.n or len(W) < net.m - net.n - 1 or affine_rank(net) <= net.n:
                return EquilibriumCount("Continuum")
            # a single equilibrium; with one generator M = Gamma D_h A has no alpha
            M = symbolic_jacobian(net, cone).M
            Q = M[0][0](0) * M[1][1](0) - M[0][1](0) * M[1][0](0) if net.n == 2 else None
            with mpmath.workdps(dps):
                pt, _ = _solve_point(net, [_ev(hj, 0) for hj in h], kappa, dps)
                tr = sum(_ev(M[i][i], 0) / pt[i] for i in range(net.n))
                ts = 0 if abs(tr) < mpmath.mpf(10) ** (-dps // 2) else (1 if tr > 0 else -1)
            ds = None if Q is None else (Q > 0) - (Q < 0)
            return EquilibriumCount(1, [Equilibrium(None, pt, ds, ts)])
        return EquilibriumCount(0)
    if cone.dimension != 2:
        raise NotImplementedError("only one-parameter kernel sections are supported")
    h = cone.h()
    W = solvability_rows(net)
    polys = [solvability_poly(h, w, kappa) for w in W]
    nz = [p for p in polys if not p.is_zero()]
    if not nz:
        return EquilibriumCount("Continuum")
    g = nz[0]
    for p in nz[1:]:
        g = ugcd(g, p)
    if g.deg() <= 0:
        return EquilibriumCount(0)
    roots = isolate_real_roots(g, 0, 1)
    if affine_rank(net) <= net.n and roots:
        return EquilibriumCount("Continuum")
    sj = symbolic_jacobian(net, cone)
    Q = sj.Q
    out = []
    with mpmath.workdps(dps):
        for r in roots:
            r.refine(width=Fraction(1, 1 << (3 * dps)))
            av = mpmath.mpf(r.midpoint().numerator) / r.midpoint().denominator
            hval = [_ev(hj, av) for hj in h]
            pt, lam = _solve_point(net, hval, kappa, dps)
            tr = sum(mpmath.mpf(0) + _ev(sj.M[i][i], av) / pt[i] for i in range(net.n))
            ts = 0 if abs(tr) < mpmath.mpf(10) ** (-dps // 2) else (1 if tr > 0 else -1)
            out.append(Equilibrium(r, pt, sign_at_root(Q, r), ts))
    return EquilibriumCount(len(out), out)


def _ev(p, x):
    acc = mpmath.mpf(0)
    for c in reversed(p.c):
        acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
    return acc


def count_by_resultant(net, kappa):
    """Independent oracle for planar networks: eliminate y, isolate x > 0, back-substitute."""
    from .algebra.poly import resultant
    f = mass_action_rhs(net)
    xs, ks = rhs_names(net)
    vals = {k: Fraction(v) for k, v in zip(ks, kappa)}
    f1, f2 = (fi.subs(vals) for fi in f)
    x, y = xs
    # divide out coordinate factors (boundary solutions)
    f1, f2 = _strip_monomial(f1, xs), _strip_monomial(f2, xs)
    if f1.is_zero() or f2.is_zero():
        return "Continuum"
    if y not in f1.used_vars() and y not in f2.used_vars():
        return "Continuum"
    R = resultant(f1, f2, y) if (f1.degree(y) > 0 and f2.degree(y) > 0) else None
    if R is None or R.is_zero():
        return "Continuum"
    Rx = R.to_upoly(x)
    count = 0
    for r in isolate_real_roots(Rx, 0, None) if Rx.deg() > 0 else []:
        r.refine(width=Fraction(1, 1 << 80))
        xv = r.midpoint()
        # y solves f1(xv, y) = f2(xv, y) = 0 numerically: take common positive roots
        p1 = f1.subs({x: xv}).to_upoly(y)
        p2 = f2.subs({x: xv}).to_upoly(y)
        c1 = [float(t) for t in _pos_roots(p1)]
        c2 = [float(t) for t in _pos_roots(p2)]
        for a in c1:
            if any(abs(a - b) <= 1e-8 * max(1, abs(a)) for b in c2):
                count += 1
                break
    return count


def _pos_roots(p):
    if p.deg() <= 0:
        return []
    out = []
    for r in isolate_real_roots(p, 0, None):
        r.refine(width=Fraction(1, 1 << 60))
        out.append(r.midpoint())
    return out


def _strip_monomial(p, xs):
    idx = [p.vars.index(v) for v in xs if v in p.vars]
    if not p.terms:
        return p
    low = [min(e[i] for e in p.terms) for i in idx]
    out = {}
    for e, c in p.terms.items():
        ne = list(e)
        for i, lo in zip(idx, low):
            ne[i] -= lo
        out[tuple(ne)] = c
    return ExactPoly(p.vars, out)


__all__ = [
    "KernelCone", "kernel_cone", "SymbolicJacobian", "symbolic_jacobian", "admits_positive_nondegenerate_equilibrium",
    "realise_kappa", "Recoordinatisation", "recoordinatise", "default_U", "check_identity", "solvability_rows",
    "count_positive_equilibria", "count_by_resultant", "affine_rank", "DynamicallyTrivial", "m_matrix",
]
