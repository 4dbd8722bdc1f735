import os
import subprocess
import sys

import numpy as np
import pytest

from crnbif import _kernels as K
from crnbif.analytics import hamiltonian_drift

GAMMA = np.array([[1., 1., -1., 0.], [0., -1., 0., 1.]])
A = np.array([[2, 0], [1, 1], [1, 0], [0, 0]])


def test_rhs_matches_vectorised_form():
    rng = np.random.default_rng(3)
    for _ in range(50):
        kappa = rng.uniform(0.1, 5, 4)
        x = rng.uniform(0.01, 4, 2)
        a = K.mass_action_rhs(GAMMA, A, kappa, x)
        b = K.mass_action_rhs_vectorised(GAMMA, A, kappa, x[None, :])[0]
        assert np.allclose(a, b, rtol=1e-13, atol=0)


def test_integrator_stays_in_the_quadrant_and_time_is_monotone():
    # strong outflow drives x towards 0 quickly; steps must be rejected rather than clamped
    ts, xs, acc, rej, st = K.integrate(np.array([[-1.]]), np.array([[1]]), [50.], [1.], 5.0)
    assert st == 0
    assert np.all(xs >= 0)
    assert np.all(np.diff(ts) > 0)
    assert abs(xs[-1, 0]) < 1e-9


def test_blow_up_is_flagged():
    # x' = x^2 explodes at t = 1
    ts, xs, acc, rej, st = K.integrate(np.array([[1.]]), np.array([[2]]), [1.], [1.], 5.0, bound=1e6)
    assert K.STATUS[st] == "blow-up"
    assert ts[-1] < 1.0 + 1e-3


def test_exponential_decay_accuracy():
    ts, xs, *_ = K.integrate(np.array([[-1.]]), np.array([[1]]), [1.], [1.], 3.0, rtol=1e-10, atol=1e-14)
    assert abs(xs[-1, 0] - np.exp(-3.0)) < 1e-9


def test_drift_order_check():
    # the conserved quantity drifts less when the tolerance is tightened tenfold
    d1, _ = hamiltonian_drift(rtol=1e-8)
    d2, _ = hamiltonian_drift(rtol=1e-9)
    assert d2 < d1 / 4
    assert d2 < 1e-6


@pytest.mark.skipif(K.BACKEND != "numba", reason="numba is not importable")
def test_backends_agree():
    code = ("import numpy as np, json; from crnbif import _kernels as K;"
            "r = K.integrate(np.array([[1.,1.,-1.,0.],[0.,-1.,0.,1.]]), np.array([[2,0],[1,1],[1,0],[0,0]]),"
            "[1.,1.,3.,1.], [0.4, 2.6], 20.0); print(json.dumps([K.BACKEND, r[1][-1].tolist(), int(r[2])]))")
    env = dict(os.environ, CRNBIF_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    import json
    backend, last, steps = json.loads(out.stdout)
    assert backend == "numpy"
    ts, xs, acc, *_ = K.integrate(GAMMA, A, [1., 1., 3., 1.], [0.4, 2.6], 20.0)
    assert steps == acc
    assert np.allclose(xs[-1], last, rtol=1e-12)
