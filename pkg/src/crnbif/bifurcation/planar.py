"""Shared planar data: Q(alpha) = det M, p = M00, q = M11 and cell decompositions of (0, 1)."""
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.upoly import UPoly, isolate_real_roots, squarefree, sign_at_root
from ..algebra.scalar import dyadic_between, sign
from ..equilibria import symbolic_jacobian


@dataclass
class PlanarData:
    net: object
    sj: object
    Q: UPoly
    p: UPoly
    q: UPoly
    h: list

    @property
    def G(self):
        return [[int(self.net.gamma[i, j]) for j in range(self.net.m)] for i in range(2)]

    @property
    def A(self):
        return self.net.A


def planar_data(net):
    if net.n != 2:
        raise ValueError("planar analysis needs two species")
    sj = symbolic_jacobian(net)
    return PlanarData(net, sj, sj.Q, sj.M[0][0], sj.M[1][1], sj.cone.h())


def product_nonzero(polys):
    out = UPoly.const(1)
    for p in polys:
        if not p.is_zero() and p.deg() > 0:
            out = out * p
    return out


@dataclass
class Cell:
    lo: object       # Fraction or RootInterval (None at the left end)
    hi: object
    sample: Fraction


def decompose(polys, lo=Fraction(0), hi=Fraction(1)):
    """Roots (RootInterval list) of the product of ``polys`` in (lo, hi) and one rational sample per open cell."""
    prod = product_nonzero(polys)
    roots = isolate_real_roots(squarefree(prod), lo, hi) if prod.deg() > 0 else []
    # separate the isolating intervals from each other and from the ends
    changed = True
    while changed:
        changed = False
        prev = lo
        for k, r in enumerate(roots):
            nxt = roots[k + 1].lo if k + 1 < len(roots) else hi
            if not r.exact and ((prev is not None and r.lo <= prev) or (nxt is not None and r.hi >= nxt)):
                r.refine(steps=1)
                changed = True
            prev = r.hi
    cells = []
    edges = [lo] + [x for r in roots for x in (r.lo, r.hi)] + [hi]
    bounds = [None] + roots + [None]
    for k, (a, b) in enumerate(zip(edges[0::2], edges[1::2])):
        if b is None:
            b = a + 1
        if a is None:
            a = b - 1
        if a < b:
            cells.append(Cell(bounds[k], bounds[k + 1], dyadic_between(a, b)))
    return roots, cells


def sgn(p, x):
    return sign(p(x)) if not p.is_zero() else 0


__all__ = ["PlanarData", "planar_data", "decompose", "Cell", "product_nonzero", "sgn"]
