from fractions import Fraction as F
import random

import pytest
import sympy

from crnbif.equilibria import (kernel_cone, symbolic_jacobian, admits_positive_nondegenerate_equilibrium,
                               realise_kappa, recoordinatise, check_identity, count_positive_equilibria,
                               count_by_resultant, DynamicallyTrivial, solvability_rows)
from crnbif.crn_model import mass_action_rhs, rhs_names
from conftest import net

SAMPLES = ["2X->3X; X+Y->2Y; Y->0; 0->Y", "2X->3X; X+Y->2X; X->0; 0->Y", "Y->2X; 2X->X+Y; X+Y->Y; X->0",
           "X+Y->X; X->0; 0->X+Y; 2Y->X+2Y", "2X->3X; X+Y->0; Y->2X; X->X+Y"]


@pytest.mark.parametrize("text", SAMPLES)
def test_kernel_cone_generators(text):
    n = net(text)
    cone = kernel_cone(n)
    G = n.gamma.tolist()
    assert cone.dimension == n.m - n.rank
    for g in cone.generators:
        assert all(v >= 0 for v in g)
        assert all(sum(G[i][j] * g[j] for j in range(n.m)) == 0 for i in range(n.n))


def test_trivial_network_has_no_cone():
    with pytest.raises(DynamicallyTrivial):
        kernel_cone(net("X->0; 0->Y"))


@pytest.mark.parametrize("text", SAMPLES)
def test_symbolic_jacobian_matches_sympy(text):
    n = net(text)
    sj = symbolic_jacobian(n)
    xs, ks = rhs_names(n)
    f = mass_action_rhs(n)
    X = sympy.symbols(xs)
    K = sympy.symbols(ks)
    fs = [sympy.sympify(str(fi).replace("^", "**")) for fi in f]
    for alpha, pt in ((F(1, 3), (F(1), F(2))), (F(3, 4), (F(5, 2), F(1, 7)))):
        kappa = realise_kappa(n, alpha, pt)
        sub = {**dict(zip(X, pt)), **dict(zip(K, kappa))}
        assert all(sympy.simplify(fi.subs(sub)) == 0 for fi in fs)
        J = sympy.Matrix(fs).jacobian(X).subs(sub)
        got = sj.numeric(alpha, pt)
        for i in range(2):
            for j in range(2):
                assert sympy.Rational(got[i][j].numerator, got[i][j].denominator) == J[i, j]


def test_admits_equilibrium_witness_is_nondegenerate():
    n = net(SAMPLES[0])
    dec = admits_positive_nondegenerate_equilibrium(n)
    assert dec
    assert symbolic_jacobian(n).Q(dec.witness["alpha"]) != 0
    # a network whose equilibria are all degenerate
    assert not admits_positive_nondegenerate_equilibrium(net("X->2X; X->0; Y->2Y; Y->0"))


def test_recoordinatisation_worked_example():
    n = net("2X->3X; X+Y->2Y; Y->0; 0->Y")
    rec = recoordinatise(n, [[2], [2], [1], [1]])
    assert rec.G == [[1, -1, 1, -1], [0, 0, 1, -1]]
    assert rec.outer_exponents == [[2, -3, 3, -1], [1, -2, 3, -1]]
    assert rec.inner_exponents == [[-1, 2, -2, 1]]
    assert check_identity(n, rec)
    assert rec.reduced_family_size() == 2
    with pytest.raises(ValueError):
        recoordinatise(n, [[0], [0], [0], [0]])


@pytest.mark.parametrize("text", SAMPLES[:4])
def test_equilibrium_count_agrees_with_resultant_oracle(text):
    n = net(text)
    rng = random.Random(hash(text) & 0xffff)
    for _ in range(6):
        kappa = [F(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n.m)]
        a = count_positive_equilibria(n, kappa).count
        b = count_by_resultant(n, kappa)
        assert a == b, (kappa, a, b)


def test_solvability_rows_annihilate_sources():
    n = net(SAMPLES[0])
    for w in solvability_rows(n):
        assert sum(w) == 0
        for k in range(2):
            assert sum(wj * a[k] for wj, a in zip(w, n.sources)) == 0
