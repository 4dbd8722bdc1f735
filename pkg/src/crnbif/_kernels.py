"""Floating-point kernels: the mass-action right-hand side and a Dormand-Prince integrator.

The same Python source is compiled with numba when it is importable, unless
CRNBIF_NO_NUMBA=1 is set, in which case the plain numpy version runs.
"""
import os

import numpy as np

_DISABLED = os.environ.get("CRNBIF_NO_NUMBA", "").strip() not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    BACKEND = "numba"
except ImportError:          # pragma: no cover - depends on the environment
    njit = None
    BACKEND = "numpy"


def _jit(fn):
    return njit(cache=True)(fn) if njit is not None else fn


# Dormand-Prince 5(4) tableau
_A = np.array([
    [0, 0, 0, 0, 0, 0],
    [1 / 5, 0, 0, 0, 0, 0],
    [3 / 40, 9 / 40, 0, 0, 0, 0],
    [44 / 45, -56 / 15, 32 / 9, 0, 0, 0],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729, 0, 0],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656, 0],
    [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
], dtype=np.float64)
_B5 = np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0])
_B4 = np.array([5179 / 57600, 0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
_E = _B5 - _B4


def _rhs(gamma, A, kappa, x, out):
    n, m = gamma.shape
    for i in range(n):
        out[i] = 0.0
    for j in range(m):
        r = kappa[j]
        for k in range(n):
            e = A[j, k]
            if e:
                r *= x[k] ** e
        for i in range(n):
            g = gamma[i, j]
            if g != 0.0:
                out[i] += g * r
    return out


rhs_kernel = _jit(_rhs)


def _integrate(gamma, A, kappa, x0, t_end, rtol, atol, h0, max_steps, bound, tab_a, e_w, b5):
    n = x0.shape[0]
    ts = np.empty(max_steps + 1)
    xs = np.empty((max_steps + 1, n))
    ts[0] = 0.0
    xs[0, :] = x0
    K = np.empty((7, n))
    x = x0.copy()
    tmp = np.empty(n)
    xn = np.empty(n)
    t = 0.0
    h = h0
    accepted = 0
    rejected = 0
    status = 0                                  # 0 done, 1 step budget, 2 blow-up, 3 step underflow
    rhs_kernel(gamma, A, kappa, x, K[0])
    while t < t_end:
        if accepted >= max_steps:
            status = 1
            break
        if t + h > t_end:
            h = t_end - t
        for s in range(1, 7):
            for i in range(n):
                acc = x[i]
                for q in range(s):
                    acc += h * tab_a[s, q] * K[q, i]
                tmp[i] = acc
            rhs_kernel(gamma, A, kappa, tmp, K[s])
        err = 0.0
        neg = False
        for i in range(n):
            acc = x[i]
            for q in range(7):
                acc += h * b5[q] * K[q, i]
            xn[i] = acc
            if acc < 0.0:
                neg = True
            ei = 0.0
            for q in range(7):
                ei += h * e_w[q] * K[q, i]
            sc = atol + rtol * max(abs(x[i]), abs(acc))
            err += (ei / sc) ** 2
        err = (err / n) ** 0.5
        if neg or err > 1.0 or err != err:
            rejected += 1
            fac = 0.2 if (neg or err != err) else max(0.2, 0.9 * err ** -0.2)
            h *= fac
            if h < 1e-14 * max(1.0, t):
                status = 3
                break
            continue
        t += h
        for i in range(n):
            x[i] = xn[i]
            K[0, i] = K[6, i]               # first-same-as-last
        accepted += 1
        ts[accepted] = t
        xs[accepted, :] = x
        big = False
        for i in range(n):
            if x[i] > bound:
                big = True
        if big:
            status = 2
            break
        fac = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
        h *= fac
    return ts[:accepted + 1], xs[:accepted + 1], accepted, rejected, status


integrate_kernel = _jit(_integrate)


def mass_action_rhs(gamma, A, kappa, x):
    """Evaluate Gamma (kappa ∘ x^A) in floating point."""
    gamma = np.ascontiguousarray(gamma, dtype=np.float64)
    A = np.ascontiguousarray(A, dtype=np.int64)
    out = np.empty(gamma.shape[0])
    return rhs_kernel(gamma, A, np.asarray(kappa, dtype=np.float64), np.asarray(x, dtype=np.float64), out)


def mass_action_rhs_vectorised(gamma, A, kappa, X):
    """Right-hand side at many points at once (rows of X), pure numpy."""
    X = np.asarray(X, dtype=np.float64)
    rates = np.asarray(kappa, dtype=np.float64) * np.prod(X[:, None, :] ** np.asarray(A)[None, :, :], axis=2)
    return rates @ np.asarray(gamma, dtype=np.float64).T


def integrate(gamma, A, kappa, x0, t_end, rtol=1e-9, atol=1e-12, h0=1e-3, max_steps=200000, bound=1e8):
    """Adaptive Dormand-Prince integration; returns (t, x, accepted, rejected, status)."""
    return integrate_kernel(np.ascontiguousarray(gamma, dtype=np.float64), np.ascontiguousarray(A, dtype=np.int64),
                            np.asarray(kappa, dtype=np.float64), np.asarray(x0, dtype=np.float64),
                            float(t_end), float(rtol), float(atol), float(h0), int(max_steps), float(bound),
                            _A, _E, _B5)


STATUS = {0: "complete", 1: "step-budget", 2: "blow-up", 3: "step-underflow"}

__all__ = ["BACKEND", "mass_action_rhs", "mass_action_rhs_vectorised", "integrate", "STATUS"]
