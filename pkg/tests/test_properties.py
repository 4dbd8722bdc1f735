"""Randomised invariants that hold independently of any published count."""
import json
from fractions import Fraction as F
from importlib import resources

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from crnbif import (count_positive_equilibria, cusp_gradient_check, fold_analysis, hopf_analysis, kernel_cone,
                    mass_action_rhs, parse_network, realise_kappa, symbolic_jacobian)
from crnbif.algebra import Domain, ExactPoly, decide_sign
from crnbif.algebra.sign import MIXED
from crnbif.bifurcation.hopf import focal_values_at
from crnbif.crn_model import rhs_names
from crnbif.equilibria import DynamicallyTrivial
from crnbif.portrait import integrate

MANIFEST = json.loads(resources.files("crnbif").joinpath("data/manifest.json").read_text())
SOURCES = [(a, b) for a in range(3) for b in range(3) if a + b <= 2]
PRODUCTS = [(a, b) for a in range(4) for b in range(4) if a + b <= 3]
PROFILE = settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.filter_too_much,
                                                                          HealthCheck.too_slow])


def text_of(c):
    parts = [(f"{k}{s}" if k > 1 else s) for k, s in zip(c, "XY") if k]
    return "+".join(parts) or "0"


@st.composite
def networks(draw, m=4, max_sources=None):
    src = draw(st.lists(st.sampled_from(SOURCES), min_size=m, max_size=m))
    if max_sources is not None:
        assume(len(set(src)) <= max_sources)
    prod = [draw(st.sampled_from([p for p in PRODUCTS if p != s])) for s in src]
    pairs = list(zip(src, prod))
    assume(len(set(pairs)) == m)
    net = parse_network("; ".join(f"{text_of(s)}->{text_of(p)}" for s, p in pairs), species="XY")
    try:
        cone = kernel_cone(net)
    except DynamicallyTrivial:
        assume(False)
    return net, cone


positive = st.fractions(min_value=F(1, 20), max_value=20, max_denominator=50)
unit = st.fractions(min_value=F(1, 50), max_value=F(49, 50), max_denominator=60)


def _rhs(net, kappa):
    xs, ks = rhs_names(net)
    return xs, [fi.subs(dict(zip(ks, kappa))) for fi in mass_action_rhs(net)]


# ------------------------------------------------ kappa realisation ---
@PROFILE
@given(networks(), unit, positive, positive)
def test_realised_rates_make_the_point_an_equilibrium(nc, alpha, x, y):
    net, cone = nc
    assume(cone.dimension == 2)
    kappa = realise_kappa(net, alpha, (x, y), cone)
    assert all(k > 0 for k in kappa)
    xs, f = _rhs(net, kappa)
    assert all(fi.subs(dict(zip(xs, (x, y)))).constant() == 0 for fi in f)


# ------------------------------------------- Jacobian vs differences ---
@PROFILE
@given(networks(), unit, positive, positive)
def test_symbolic_jacobian_matches_finite_differences(nc, alpha, x, y):
    net, cone = nc
    assume(cone.dimension == 2 and net.rank == 2)
    sj = symbolic_jacobian(net, cone)
    pt = (x, y)
    # with lambda = 1, J = M(alpha) diag(1/x)
    J = np.array([[float(sj.M[i][k](alpha) / pt[k]) for k in range(2)] for i in range(2)])
    kappa = [float(k) for k in realise_kappa(net, alpha, pt, cone)]
    G = np.array(net.gamma.tolist(), dtype=float)
    A = np.array(net.A, dtype=float)

    def f(v):
        return G @ (np.array(kappa) * np.prod(v[None, :] ** A, axis=1))

    p = np.array([float(x), float(y)])
    fd = np.empty((2, 2))
    for k in range(2):
        h = 1e-5 * p[k]
        e = np.zeros(2)
        e[k] = h
        fd[:, k] = (f(p + e) - f(p - e)) / (2 * h)
    # J can vanish identically; then measure against the size of the individual fluxes
    flux = np.abs(G).max() * np.array(kappa) * np.prod(p[None, :] ** A, axis=1)
    scale = max(np.abs(J).max(), flux.max() / p.min())
    assert np.abs(fd - J).max() <= 1e-6 * scale


# ------------------------------------------- uniqueness with few sources ---
@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(networks(max_sources=3), st.lists(positive, min_size=4, max_size=4))
def test_few_distinct_sources_give_at_most_one_equilibrium(nc, kappa):
    # at most n + 1 distinct reactant complexes: one equilibrium per class or a continuum
    net, cone = nc
    assume(cone.dimension == 2 and net.rank == 2)
    res = count_positive_equilibria(net, kappa)
    assert res.continuum or res.count in (0, 1)


# ------------------------------------------- (2,3,2) has no fold ---
@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(networks(m=3))
def test_three_reaction_planar_networks_have_no_fold(nc):
    # one kernel generator: det J carries the sign of a constant, so it cannot cross zero
    net, cone = nc
    assume(net.rank == 2)
    assert cone.dimension == 1
    assert not fold_analysis(net).feasible


# ------------------------------------------------- decide_sign witnesses ---
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
terms = st.lists(st.tuples(monomials, st.integers(-9, 9).filter(bool)), min_size=1, max_size=6)


@settings(max_examples=300, deadline=None)
@given(terms)
def test_mixed_verdicts_carry_valid_witnesses(ts):
    a, b = ExactPoly.gens("a", "b")
    p = a - a
    for (i, j), c in ts:
        p = p + c * a ** i * b ** j
    d = decide_sign(p, Domain.orthant(["a", "b"]))
    if d.verdict == MIXED:
        pos, neg = d.witnesses
        for w in (pos, neg):
            assert all(v > 0 for v in w.values())
        # recompute from the term list, not through the polynomial class
        val = lambda w: sum(c * F(w.get("a", 1)) ** i * F(w.get("b", 1)) ** j for (i, j), c in ts)
        assert val(pos) > 0 > val(neg)


# ------------------------------------------------------ cusp identity ---
@pytest.mark.parametrize("row", MANIFEST["fold_bimolecular"], ids=lambda r: r["text"])
def test_cusp_gradient_identity_at_fold_witnesses(row):
    net = parse_network(row["text"], species="XY")
    v = fold_analysis(net)
    assert v.witnesses
    for w in v.witnesses:
        assert cusp_gradient_check(net, w, rtol=1e-8)


# ---------------------------------------------- L1 vs trajectory amplitude ---
def _hopf_rows(verdict, k=5):
    rows = [r for r in MANIFEST["hopf_table"] if r["verdict"] == verdict]
    return rows[:: max(1, len(rows) // k)][:k]


@pytest.mark.parametrize("verdict", ["Supercritical", "Subcritical"])
def test_first_focal_value_predicts_amplitude(verdict):
    for row in _hopf_rows(verdict):
        net = parse_network(row["text"], species="XY")
        w = hopf_analysis(net).witness
        pt = (w["x"], w["y"])
        kappa = realise_kappa(net, w["alpha"], pt)
        L1 = focal_values_at(net, kappa, pt, maxk=1)[0]
        assert (L1 < 0) == (verdict == "Supercritical") and L1 != 0
        start = (float(pt[0]) * 1.02, float(pt[1]))
        tr = integrate(net, kappa, start, T=2000, rtol=1e-11, atol=1e-14, bound=1e6)
        d = np.log(tr.x[np.all(tr.x > 0, axis=1)] / np.array([float(pt[0]), float(pt[1])]))
        r = np.hypot(d[:, 0], d[:, 1])
        q = max(1, len(r) // 10)
        first, last = r[:q].max(), r[-q:].max()
        if verdict == "Supercritical":
            assert last < first, row["text"]
        else:
            assert last > first or tr.blew_up, row["text"]
