"""Exact LP feasibility by a two-phase-free (phase I only) rational simplex.

We only ever need feasibility of systems ``M x = 0`` with lower bounds, so
the problem is shifted to ``x = l + w, w >= 0`` and phase I of the simplex
method is run with Bland's rule, which cannot cycle.  When phase I ends with
positive infeasibility the simplex multipliers give a Farkas certificate.
"""
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class LPResult:
    feasible: bool
    witness: list = None
    farkas: list = None      # y with y M having one sign pattern, see lp_feasible
    pivots: int = 0
    notes: list = field(default_factory=list)


def _phase_one(A, b):
    """Find w >= 0 with A w = b (b >= 0). Returns (w or None, y, pivots)."""
    m = len(A)
    n = len(A[0]) if m else 0
    # tableau rows: [A | I | b]
    T = [[Fraction(x) for x in A[i]] + [Fraction(1 if k == i else 0) for k in range(m)] + [Fraction(b[i])]
         for i in range(m)]
    basis = [n + i for i in range(m)]
    ncol = n + m
    cost = [Fraction(0)] * n + [Fraction(1)] * m
    pivots = 0
    while True:
        # reduced costs r_j = c_j - c_B B^-1 A_j ; with tableau already in B^-1 form
        cb = [cost[j] for j in basis]
        entering = None
        for j in range(ncol):
            if j in basis:
                continue
            r = cost[j] - sum(cb[i] * T[i][j] for i in range(m))
            if r < 0:
                entering = j       # Bland: smallest index with negative reduced cost
                break
        if entering is None:
            break
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:   # cannot happen in phase I (objective bounded below by 0)
            raise RuntimeError("unbounded phase I")
        r = best[1]
        pv = T[r][entering]
        T[r] = [x / pv for x in T[r]]
        for i in range(m):
            if i != r and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        basis[r] = entering
        pivots += 1
    w = [Fraction(0)] * ncol
    for i, j in enumerate(basis):
        w[j] = T[i][-1]
    obj = sum(w[n:])
    # multipliers y = c_B B^-1, read from the artificial columns of the tableau
    cb = [cost[j] for j in basis]
    y = [sum(cb[i] * T[i][n + k] for i in range(m)) for k in range(m)]
    if obj > 0:
        return None, y, pivots
    return w[:n], y, pivots


def lp_feasible(M, lower=None, strict=None):
    """Decide whether some x satisfies ``M x = 0`` and the componentwise bounds.

    ``lower[j]`` is the lower bound of x_j (default 1, i.e. the scaled form
    of strict positivity).  ``strict`` lists components that must be > 0;
    since the system is homogeneous these are tightened to ``x_j >= 1``.

    On success the witness is exact.  On failure ``farkas`` holds a row
    vector y such that y M >= 0 entrywise with at least one entry > 0 on the
    components bounded below by a positive number, which rules out any
    admissible x.
    """
    rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged constraint matrix")
    if lower is None:
        lower = [1] * n
    if len(lower) != n:
        raise ValueError("bounds do not match the number of unknowns")
    lower = [Fraction(v) for v in lower]
    if any(v < 0 for v in lower):
        raise ValueError("lower bounds must be nonnegative")
    for j in strict or ():
        if not 0 <= j < n:
            raise ValueError("strict component out of range")
        lower[j] = max(lower[j], Fraction(1))
    if m == 0:
        return LPResult(True, lower)
    # M (l + w) = 0  ->  M w = -M l
    rhs = [-sum(Fraction(a) * l for a, l in zip(r, lower)) for r in rows]
    A = []
    b = []
    flips = []
    for r, v in zip(rows, rhs):
        if v < 0:
            A.append([-Fraction(a) for a in r])
            b.append(-v)
            flips.append(-1)
        else:
            A.append([Fraction(a) for a in r])
            b.append(v)
            flips.append(1)
    w, y, piv = _phase_one(A, b)
    if w is not None:
        x = [l + wi for l, wi in zip(lower, w)]
        assert all(sum(Fraction(a) * xi for a, xi in zip(r, x)) == 0 for r in rows)
        return LPResult(True, x, pivots=piv)
    # y A <= c_w = 0 and y b > 0 ; map back through the row flips, negate
    yy = [-yi * f for yi, f in zip(y, flips)]
    return LPResult(False, farkas=yy, pivots=piv)


def verify_farkas(M, y, lower=None):
    """Check that y certifies infeasibility of {M x = 0, x >= lower}."""
    n = len(M[0])
    lower = [Fraction(v) for v in (lower or [1] * n)]
    yM = [sum(Fraction(y[i]) * M[i][j] for i in range(len(M))) for j in range(n)]
    if any(v < 0 for v in yM):
        return False
    # for admissible x: y M x >= sum_j yM_j lower_j > 0, contradicting M x = 0
    return sum(v * l for v, l in zip(yM, lower)) > 0


def in_open_cone(target, gens):
    """Is ``target`` a strictly positive combination of ``gens``? (exact LP)."""
    if not gens:
        return all(t == 0 for t in target)
    dim = len(target)
    # sum c_i g_i - t * target = 0 with c_i >= 1, t >= 1
    M = [[Fraction(g[d]) for g in gens] + [-Fraction(target[d])] for d in range(dim)]
    return lp_feasible(M).feasible


def in_closed_cone(target, gens):
    """Is ``target`` a nonnegative combination of ``gens``?"""
    if all(t == 0 for t in target):
        return True
    if not gens:
        return False
    dim = len(target)
    M = [[Fraction(g[d]) for g in gens] + [-Fraction(target[d])] for d in range(dim)]
    lower = [0] * len(gens) + [1]
    return lp_feasible(M, lower=lower).feasible
