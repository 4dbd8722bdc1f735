from fractions import Fraction as F
import random

import pytest
import sympy

from crnbif.algebra import (to_scalar, UPoly, isolate_real_roots, count_roots, sign_at_root, squarefree,
                            ExactMatrix, bareiss_rank, rank_generic, ExactPoly, resultant, lp_feasible,
                            in_open_cone, in_closed_cone, QSqrt, quadratic_roots, exact_sign, Domain, decide_sign)
from crnbif.algebra.lp import verify_farkas
from crnbif.algebra.sign import ALL_POSITIVE, ALL_NEGATIVE, MIXED, IDENTICALLY_ZERO


def test_scalars_refuse_decimals():
    assert to_scalar("3/2") == F(3, 2)
    assert to_scalar(4) == F(4)
    with pytest.raises(ValueError):
        to_scalar("0.5")
    with pytest.raises(TypeError):
        to_scalar(0.5)


def test_upoly_arithmetic_against_sympy():
    x = sympy.symbols("x")
    rng = random.Random(1)
    for _ in range(30):
        a = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 5))]
        b = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        if not any(b):
            b[-1] = F(1)
        pa, pb = UPoly(a), UPoly(b)
        sa = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(a))
        sb = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(b))
        prod = sympy.Poly(sympy.expand(sa * sb), x).all_coeffs()[::-1] if sympy.expand(sa * sb) != 0 else []
        assert list((pa * pb).c) == [F(int(c.p), int(c.q)) for c in prod]
        if not pb.is_zero() and pb.deg() >= 0:
            q, r = pa.divmod(pb)
            assert (q * pb + r) == pa


@pytest.mark.parametrize("roots", [[F(1, 3), F(1, 2)], [F(-2), F(0), F(5, 7)], [F(1, 10), F(1, 9), F(1, 8)]])
def test_root_isolation_finds_rational_roots(roots):
    p = UPoly.const(1)
    for r in roots:
        p = p * UPoly((-r, 1))
    iso = isolate_real_roots(p, F(-10), F(10))
    assert len(iso) == len(roots)
    for it, r in zip(sorted(iso, key=lambda i: i.lo), sorted(roots)):
        assert it.lo <= r <= it.hi


def test_root_isolation_irrational_against_sympy():
    x = sympy.symbols("x")
    p = UPoly((-2, 0, 0, 1))          # x^3 - 2
    iso = isolate_real_roots(p, F(0), F(3))
    assert len(iso) == 1
    iso[0].refine(width=F(1, 10 ** 12))
    assert abs(float(iso[0].midpoint()) - float(sympy.real_roots(x ** 3 - 2)[0].evalf(30))) < 1e-11
    assert count_roots(UPoly((-2, 0, 1)), F(-2), F(2)) == 2


def test_sign_at_root_and_squarefree():
    p = UPoly((-2, 0, 1))             # roots +-sqrt 2
    (r,) = isolate_real_roots(p, F(0), F(2))
    assert sign_at_root(UPoly((-1, 1)), r) == 1     # sqrt2 - 1 > 0
    assert sign_at_root(UPoly((-3, 2)), r) == -1    # 2 sqrt2 - 3 < 0
    sq = squarefree(p * p)
    assert sq.deg() == 2


def test_matrix_rank_det_inverse():
    M = ExactMatrix([[2, 1, 0], [1, 1, 1], [0, 1, 3]])
    assert M.det() == int(sympy.Matrix([[2, 1, 0], [1, 1, 1], [0, 1, 3]]).det())
    inv = M.inverse().tolist()
    assert inv == [[F(v.p, v.q) for v in row] for row in sympy.Matrix([[2, 1, 0], [1, 1, 1], [0, 1, 3]]).inv().tolist()]
    assert bareiss_rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert rank_generic([[1, 0], [0, 1]]) == 2


def test_multivariate_and_resultant():
    x, y = ExactPoly.gens("x", "y")
    f = x * x + y * y - 1
    g = x - y
    r = resultant(f, g, "y")
    # eliminating y gives 2x^2 - 1 up to sign
    want = (2 * x * x - 1).with_vars(r.vars)
    assert r == want or r == -want


def test_lp_feasible_with_witness_and_farkas():
    res = lp_feasible([[1, -1, 0], [0, 1, -1]])
    assert res.feasible
    assert all(v >= 1 for v in res.witness)
    bad = [[1, 1, 1]]
    res2 = lp_feasible(bad)
    assert not res2.feasible
    assert verify_farkas(bad, res2.farkas)
    assert in_open_cone([1, 1], [[1, 0], [0, 1]])
    assert not in_open_cone([1, 0], [[1, 0], [0, 1]])
    assert in_closed_cone([1, 0], [[1, 0], [0, 1]])


def test_quadratic_field_signs():
    r = QSqrt(1, 1, 2)                # 1 + sqrt2
    assert exact_sign(r - F(12, 5)) == 1
    assert exact_sign(r - F(5, 2)) == -1
    roots = quadratic_roots(F(-1), F(0), F(1))      # x^2 - 1
    assert sorted(roots) == [F(-1), F(1)]
    roots2 = quadratic_roots(F(-2), F(0), F(1))
    assert all(exact_sign(v * v - 2) == 0 for v in roots2)


def test_decide_sign_rungs():
    a, b = ExactPoly.gens("a", "b")
    dom = Domain.orthant(["a", "b"])
    assert decide_sign(a * b + a, dom).verdict == ALL_POSITIVE
    assert decide_sign(-(a * a) - b, dom).verdict == ALL_NEGATIVE
    d = decide_sign(a - b, dom)
    assert d.verdict == MIXED
    pos, neg = d.witnesses
    assert (a - b).eval(pos) > 0 and (a - b).eval(neg) < 0
    assert decide_sign(a - a, dom).verdict == IDENTICALLY_ZERO
    # (a - 1)^2 + b > 0 needs more than coefficient signs
    assert decide_sign((a - 1) * (a - 1) + b, dom).verdict == ALL_POSITIVE
    t = ExactPoly.gens("t")[0]
    assert decide_sign(t * t - t + F(1, 8), Domain({"t": (0, 1)})).verdict == MIXED
