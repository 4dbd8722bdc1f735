from fractions import Fraction as F

import pytest

from crnbif.bifurcation import (analyze, fold_analysis, hopf_analysis, bt_analysis, origin_stability, bistable,
                                rank_one_fold, cusp_gradient_check, focal_values_at, bt_point_search,
                                bt_normal_form, planar_data)
from crnbif.crn_model import parse_network
from conftest import net

NET9 = "2X->3X; X+Y->2X; X->0; 0->Y"
BAUTIN = "2X->3X; X+Y->3X; X->0; 0->X+2Y"
WILHELM = "Y->2X; 2X->X+Y; X+Y->Y; X->0"


def test_network9_report():
    rep = analyze(net(NET9)).to_json()
    assert rep["fold"]["verdict"] == "Nondegenerate"
    assert rep["hopf"]["verdict"] == "Vertical"
    assert rep["bt"]["verdict"] == "Vertical"
    # a20 + b11 vanishes exactly for the vertical case
    assert F(rep["bt"]["a20"]) + F(rep["bt"]["b11"]) == 0


def test_bautin_network_has_positive_second_focal_value():
    rep = analyze(net(BAUTIN))
    assert rep.hopf.verdict == "Bautin"
    assert rep.hopf.L2_sign == "+"


def test_wilhelm_network_is_bistable():
    rep = analyze(net(WILHELM))
    assert rep.fold.feasible and "-" in rep.fold.eig2_signs
    assert rep.origin.verdict == "StableOrigin"
    assert rep.flags["bistable"] is True
    assert bistable(net(WILHELM))


def test_report_is_deterministic():
    a = analyze(net(NET9)).to_json()
    b = analyze(net(NET9)).to_json()
    assert a == b


def test_fold_roots_and_witnesses():
    v = fold_analysis(net(NET9))
    assert v.roots == [F(1, 2)]
    w = v.witnesses[0]
    assert w["alpha"] == F(1, 2)


def test_trivial_and_non_planar_tracks():
    rep = analyze(parse_network("X->0; 0->Y", species="XY"))
    assert rep.flags["dynamically_nontrivial"] is False
    five = analyze(net("2X->3X; X+Y->2Y; Y->0; 0->Y; X->2X"))
    assert five.unresolved


def test_center_at_network_19_point():
    # k = (1, 1, 3, 2): equilibrium (1, 2) with tr J = 0 and det J = 1; the orbit family is a center
    assert focal_values_at(net(NET9), (1, 1, 3, 2), (1, 2)) == [0, 0, 0]


def test_focal_value_sign_for_a_supercritical_network():
    n = net("2X->3X; X+Y->2Y; Y->0; 0->Y")
    v = hopf_analysis(n)
    assert v.verdict == "Supercritical"


def test_focal_values_reject_non_hopf_points():
    with pytest.raises(ValueError):
        focal_values_at(net(NET9), (1, 1, 3, 2), (1, 1))


def test_bt_points_are_double_zero():
    n = net("2X->3X; X+Y->2Y; Y->0; 0->Y")
    d = planar_data(n)
    pts = bt_point_search(n, d)
    assert pts
    for p in pts:
        J = p.J
        assert J[0][0] + J[1][1] == 0
        assert J[0][0] * J[1][1] - J[0][1] * J[1][0] == 0
    v = bt_analysis(n, d)
    assert v.verdict == "Supercritical" and v.transversal


def test_no_bt_for_lva_with_2y_source():
    v = bt_analysis(net("2X->3X; X+Y->2Y; Y->0; 2Y->2X"))
    assert v.verdict == "None"


@pytest.mark.parametrize("text, want", [("X->0; 0->X; 2X->3X", True), ("0->2X; X->0; 2X->4X", True),
                                        ("X->0; 0->X; 2X->X", False), ("X->Y; Y->0; 0->X; 2X->3X; Y->X", None)])
def test_rank_one_fold_patterns(text, want):
    n = parse_network(text)
    if n.rank != 1:
        with pytest.raises(ValueError):
            rank_one_fold(n)
        return
    assert rank_one_fold(n).feasible is want


def test_rank_one_fold_with_a_dependent_species():
    for text in ("0->X+Y; X+Y->0; 2X->3X+Y", "Y->X+2Y; X+Y->0; 2X->3X+Y", "2Y->X+3Y; X+Y->0; 2X->3X+Y"):
        r = rank_one_fold(parse_network(text, species="XY"))
        assert r.feasible and r.pattern == (1, 3)


def test_origin_classification_kinds():
    assert origin_stability(net("X->0; 0->Y; X+Y->2X; 2X->3X")).verdict == "NoBoundaryEquilibrium"
    assert origin_stability(net(WILHELM)).mechanism == "hyperbolic"
    cm = origin_stability(net("X->2X; X+Y->0; Y->2Y; 2Y->2X"))
    assert cm.verdict in ("StableOrigin", "UnstableOrigin", "SaddleOrigin", "Unresolved")


def test_cusp_identity_at_a_fold_witness():
    n = net("X+Y->X; X->0; 0->5X+Y; 2Y->X+4Y")
    v = fold_analysis(n)
    assert v.verdict == "Nondegenerate"
    for w in v.witnesses:
        assert cusp_gradient_check(n, w)


def test_cusp_check_rejects_non_fold_points():
    n = net(NET9)
    with pytest.raises(ValueError):
        cusp_gradient_check(n, {"alpha": F(1, 3)})
