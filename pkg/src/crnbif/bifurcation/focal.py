"""Focal values of a planar quadratic field at a weak focus.

The linear part may depend polynomially on one parameter t.  We work in
K = Q[t][w, i] / (w^2 - Delta(t), i^2 + 1) where w is the (positive)
rotation frequency, so no square roots are ever taken.  With the complex
coordinate z the formal Lyapunov function V = z zbar + ... is built degree by
degree; the diagonal coefficient left over at degree 2k+2 is the k-th focal
value up to a positive factor.  Each focal value comes out as w * P(t) with
P a polynomial, and sign(L_k) = sign(P).
"""
from fractions import Fraction

from ..algebra.upoly import UPoly

_ZERO = UPoly()
_ONE = UPoly.const(1)


class K:
    """a0 + a1 w + a2 i + a3 i w with UPoly coefficients; ``delta`` is w^2."""
    __slots__ = ("c", "delta")

    def __init__(self, c, delta):
        self.c = tuple(x if isinstance(x, UPoly) else UPoly.const(x) for x in c)
        self.delta = delta

    def is_zero(self):
        return all(x.is_zero() for x in self.c)

    def __add__(self, o):
        return K(tuple(a + b for a, b in zip(self.c, o.c)), self.delta)

    def __sub__(self, o):
        return K(tuple(a - b for a, b in zip(self.c, o.c)), self.delta)

    def __neg__(self):
        return K(tuple(-a for a in self.c), self.delta)

    def __mul__(self, o):
        if not isinstance(o, K):
            o = K((o, 0, 0, 0), self.delta)
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        D = self.delta
        return K((a0 * b0 + D * (a1 * b1) - a2 * b2 - D * (a3 * b3),
                  a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                  a0 * b2 + a2 * b0 + D * (a1 * b3 + a3 * b1),
                  a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1), self.delta)

    __rmul__ = __mul__

    def scale(self, q):
        return K(tuple(a * q for a in self.c), self.delta)

    def conj(self):
        a0, a1, a2, a3 = self.c
        return K((a0, a1, -a2, -a3), self.delta)


def _k(delta, a0=_ZERO, a1=_ZERO, a2=_ZERO, a3=_ZERO):
    return K((a0, a1, a2, a3), delta)


class BiPoly:
    """Polynomial in two variables with K coefficients: {(j, k): K}."""
    __slots__ = ("t", "delta")

    def __init__(self, terms, delta):
        self.t = {e: c for e, c in terms.items() if not c.is_zero()}
        self.delta = delta

    def __add__(self, o):
        out = dict(self.t)
        for e, c in o.t.items():
            out[e] = out[e] + c if e in out else c
        return BiPoly(out, self.delta)

    def __mul__(self, o):
        if not isinstance(o, BiPoly):
            return BiPoly({e: c * o for e, c in self.t.items()}, self.delta)
        out = {}
        for e1, c1 in self.t.items():
            for e2, c2 in o.t.items():
                e = (e1[0] + e2[0], e1[1] + e2[1])
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return BiPoly(out, self.delta)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BiPoly({(0, 0): _k(self.delta, _ONE)}, self.delta)
        for _ in range(n):
            out = out * self
        return out


def lyapunov_quantities(J, B, maxk=3):
    """Focal polynomials P_1..P_maxk for  u' = J u + B(u)  with tr J == 0.

    ``J`` is 2x2 of UPoly, ``B[i] = (c11, c12, c22)`` the quadratic
    coefficients of component i (UPoly).  Returns (P list, Delta) where
    Delta = det J must be positive where the result is used.
    """
    a, b, c = J[0][0], J[0][1], J[1][0]
    if not (J[0][0] + J[1][1]).is_zero():
        raise ValueError("the linear part must have zero trace")
    delta = -(a * a) - b * c
    om = _k(delta, _ZERO, _ONE)
    I = _k(delta, _ZERO, _ZERO, _ONE)
    half = Fraction(1, 2)

    def const(p):
        return _k(delta, p)

    X = BiPoly({(1, 0): _k(delta, _ONE)}, delta)
    Y = BiPoly({(0, 1): _k(delta, _ONE)}, delta)
    # u1 = Z1 / (b w), u2 = Z2 / (b w) in the rotated coordinates (X, Y)
    Z1 = Y * const(b)
    Z2 = X * om + Y * const(-a)

    def quad(cs):
        return Z1 * Z1 * const(cs[0]) + Z1 * Z2 * const(cs[1]) + Z2 * Z2 * const(cs[2])

    q0, q1 = quad(B[0]), quad(B[1])
    N1 = q0 * const(a) + q1 * const(b)
    N2 = q0 * om
    # X = (z + zb)/2, Y = -i (z - zb)/2
    zX = BiPoly({(1, 0): const(UPoly.const(half)), (0, 1): const(UPoly.const(half))}, delta)
    zY = BiPoly({(1, 0): I.scale(-half), (0, 1): I.scale(half)}, delta)

    def to_z(P):
        out = BiPoly({}, delta)
        for (ex, ey), cf in P.t.items():
            out = out + (zX ** ex) * (zY ** ey) * cf
        return out

    G = to_z(N1) + to_z(N2) * I
    Gb = BiPoly({(k, j): c.conj() for (j, k), c in G.t.items()}, delta)
    V = {(1, 1): _k(delta, _ONE)}
    Ls = []
    for n in range(3, 2 * maxk + 3):
        S = BiPoly({}, delta)
        for (j, k), v in list(V.items()):
            if j + k != n - 1:
                continue
            if j:
                S = S + BiPoly({(j - 1, k): v.scale(j)}, delta) * G
            if k:
                S = S + BiPoly({(j, k - 1): v.scale(k)}, delta) * Gb
        diag = None
        for (j, k), cf in S.t.items():
            if j != k:
                V[(j, k)] = (cf * I).scale(Fraction(1, j - k))
            else:
                diag = cf
        if n % 2 == 0:
            Ls.append(diag if diag is not None else _k(delta))
    P = []
    for L in Ls:
        c0, c1, c2, c3 = L.c
        assert c0.is_zero() and c2.is_zero() and c3.is_zero(), "focal value is not w times a polynomial"
        P.append(c1)
    return P, delta


def field_data(G, A, h, d):
    """Linear and quadratic Taylor data at u = (1, 1) of u' = d ∘ G (h ∘ u^A).

    ``G`` is 2 x m integer, ``A`` m x 2 exponents, ``h`` and ``d`` UPolys.
    """
    m = len(h)
    J = [[d[i] * sum((h[j] * (G[i][j] * A[j][k]) for j in range(m)), UPoly()) for k in range(2)] for i in range(2)]

    def qc(i):
        c11 = sum((h[j] * (G[i][j] * (A[j][0] * (A[j][0] - 1) // 2)) for j in range(m)), UPoly())
        c12 = sum((h[j] * (G[i][j] * A[j][0] * A[j][1]) for j in range(m)), UPoly())
        c22 = sum((h[j] * (G[i][j] * (A[j][1] * (A[j][1] - 1) // 2)) for j in range(m)), UPoly())
        return (d[i] * c11, d[i] * c12, d[i] * c22)

    return J, [qc(0), qc(1)]


__all__ = ["lyapunov_quantities", "field_data", "K", "BiPoly"]
