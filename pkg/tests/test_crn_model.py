from fractions import Fraction as F

import pytest

from crnbif.crn_model import (parse_network, format_network, NetworkParseError, dynamic_key, canonical_key,
                              equivalent, representative, is_dynamically_nontrivial, has_redundant_reaction,
                              mass_action_rhs, diagonal_scaling)
from conftest import net


def test_matrices_of_a_small_network():
    n = net("2X->3X; X+Y->2Y; Y->0; 0->Y")
    assert n.gamma.tolist() == [[1, -1, 0, 0], [0, 1, -1, 1]]
    assert n.gamma_l.tolist() == [[2, 1, 0, 0], [0, 1, 1, 0]]
    assert n.A == [[2, 0], [1, 1], [0, 1], [0, 0]]
    assert n.rank == 2 and n.is_quadratic() and n.max_molecularity() == 3


def test_parser_accepts_reversible_and_chains():
    n = parse_network("X <-> Y; 0 -> X -> 2Y")
    assert n.m == 4
    assert format_network(parse_network(format_network(n))) == format_network(n)


@pytest.mark.parametrize("text, pos", [("X -> ", 4), ("X -> Q", 5), ("X - Y", 0), ("X -> X", 0)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(NetworkParseError) as e:
        parse_network(text, species="XY")
    assert e.value.position == pos


def test_dynamic_key_is_invariant_under_swap_and_scaling():
    a = net("2X->3X; X+Y->2Y; Y->0; 0->Y")
    b = net("2Y->3Y; X+Y->2X; X->0; 0->X")         # species swapped
    c = net("2X->4X; X+Y->2Y; Y->0; 0->2Y")        # same rays, longer vectors
    assert dynamic_key(a) == dynamic_key(b) == dynamic_key(c)
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(c)
    assert equivalent(a, c, "dynamic")
    assert equivalent(a, c, "simple")
    assert not equivalent(a, net("2X->3X; X+Y->3Y; Y->0; 0->Y"), "dynamic")
    assert equivalent(a, b, "dynamic", swap=True)


def test_representative_realises_the_key():
    a = net("2X->3X; X+Y->3Y; Y->0; 0->Y")
    r = representative(dynamic_key(a))
    assert dynamic_key(r) == dynamic_key(a)


def test_diagonal_equivalence_scaling_is_exact():
    # X+Y->2Y versus X+Y->3Y: the gamma columns differ by a row scaling on Y
    a = net("2X->3X; X+Y->2Y; Y->0")
    b = net("2X->3X; X+Y->3Y; Y->0")
    assert equivalent(a, b, "diagonal")
    d1, d2 = diagonal_scaling([list(c) for c in a.vectors], [list(c) for c in b.vectors])
    for u, v, s in zip(a.vectors, b.vectors, d2):
        assert [d1[i] * u[i] * s for i in range(2)] == [F(x) for x in v]


def test_nontriviality_and_redundancy():
    assert is_dynamically_nontrivial(net("X->0; 0->X"))
    assert not is_dynamically_nontrivial(net("X->0; 0->Y"))
    assert has_redundant_reaction(net("X->0; X->2Y; X->Y; 0->X"))
    assert not has_redundant_reaction(net("X->0; X->2Y; 0->X"))


def test_mass_action_rhs_text():
    f = mass_action_rhs(net("2X->3X; X+Y->2X; X->0; 0->Y"))
    vals = {"x": F(2), "y": F(3), "k1": F(1), "k2": F(1), "k3": F(3), "k4": F(1)}
    assert f[0].eval(vals) == 4 + 6 - 6
    assert f[1].eval(vals) == -6 + 1
