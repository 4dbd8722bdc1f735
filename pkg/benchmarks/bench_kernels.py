"""Time the mass-action RHS and the Dormand-Prince integrator on both backends.

Each backend runs in its own interpreter because the choice is made at import
time from CRNBIF_NO_NUMBA.  Usage:  python3 benchmarks/bench_kernels.py
"""
import json
import os
import subprocess
import sys

CHILD = r"""
import json, time
import numpy as np
from crnbif import _kernels as K
gamma = np.array([[1., 1., -1., 0.], [0., -1., 0., 1.]])   # 2X->3X, X+Y->2X, X->0, 0->Y
A = np.array([[2, 0], [1, 1], [1, 0], [0, 0]])
kappa = np.array([1., 1., 3., 1.])
x0 = np.array([0.4, 2.6])
t0 = time.perf_counter(); K.integrate(gamma, A, kappa, x0, 1.0); warm = time.perf_counter() - t0
out = np.empty(2)
n = 200000
t0 = time.perf_counter()
for _ in range(n):
    K.rhs_kernel(gamma, A, kappa, x0, out)
rhs = (time.perf_counter() - t0) / n
t0 = time.perf_counter()
ts, xs, acc, rej, st = K.integrate(gamma, A, kappa, x0, 100.0, rtol=1e-10)
integ = time.perf_counter() - t0
print(json.dumps({"backend": K.BACKEND, "first_call_s": warm, "rhs_call_us": rhs * 1e6,
                  "integrate_T100_s": integ, "steps": int(acc), "final": [float(v) for v in xs[-1]]}))
"""


def run(no_numba):
    env = dict(os.environ, CRNBIF_NO_NUMBA="1" if no_numba else "0")
    res = subprocess.run([sys.executable, "-c", CHILD], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    rows = [run(False), run(True)]
    for r in rows:
        print(f"{r['backend']:>6}: first call {r['first_call_s']:.2f}s, rhs {r['rhs_call_us']:.2f} us/call, "
              f"integrate T=100 {r['integrate_T100_s'] * 1e3:.1f} ms ({r['steps']} steps)")
    a, b = rows
    gap = max(abs(u - v) for u, v in zip(a["final"], b["final"]))
    print(f"max difference of final states between backends: {gap:.2e}")
    if a["backend"] == "numba":
        print(f"integrator speed-up: {b['integrate_T100_s'] / a['integrate_T100_s']:.1f}x")


if __name__ == "__main__":
    main()
