from crnbif.crn_model import parse_network
from crnbif.inheritance import (detect_enlargement, induced_subnetworks, RANK_ONE_FOLD_SEEDS, atoms, E1, E2, E3, E6)
from crnbif.enumeration import Catalog, PRESETS
from crnbif.crn_model import dynamic_key
from conftest import net


def test_adding_a_dependent_reaction_is_e1():
    small = net("2X->3X; X+Y->2Y; Y->0; 0->Y")
    big = net("2X->3X; X+Y->2Y; Y->0; 0->Y; X->2X")
    w = detect_enlargement(small, big)
    assert w.kind == E1 and w.added == [((1, 0), (2, 0))]


def test_adding_a_species_is_e3():
    small = parse_network("0->X; X->0; 2X->3X")
    # Y is carried along without changing the rank
    w = detect_enlargement(small, parse_network("0->X+Y; X+Y->0; 2X->3X+Y", species="XY"))
    assert w is not None and E3 in w.chain


def test_fully_open_extension_is_e2():
    small = net("2X->3X; X+Y->2Y")
    big = net("2X->3X; X+Y->2Y; X->0; 0->X; Y->0; 0->Y")
    w = detect_enlargement(small, big)
    assert w is not None and w.kind in (E2, "E1")


def test_single_split_is_e6():
    for a, text in ((1, "0->Y; Y->X; X->0; 2X->3X"), (2, "0->X+Y; X+Y->2X; X->0; 2X->3X"),
                    (3, "0->X+Y; X+Y->3X; X->0; 2X->3X")):
        w = detect_enlargement(RANK_ONE_FOLD_SEEDS[a - 1], net(text))
        assert w is not None and w.kind == E6


def test_unrelated_networks():
    assert detect_enlargement(parse_network("0->X; X->0"), net("2X->3X; Y->0")) is None


def test_induced_subnetworks_keep_rank_information():
    subs = list(induced_subnetworks(net("2X->3X; X+Y->2Y; Y->0; 0->Y"), min_reactions=3))
    assert subs
    for sub, desc in subs:
        assert sub.m >= 3 and len(desc["reactions_kept"]) >= 3


def test_atoms_split():
    keys = [dynamic_key(net(t)) for t in ("0->Y; Y->X; X->0; 2X->3X", "2X->3X; X+Y->2Y; Y->0; 0->Y")]
    cat = Catalog(PRESETS["fold-trimolecular"], sorted(keys))
    rep = atoms(cat, "fold", keys)
    assert len(rep.inheritors) == 1 and len(rep.atoms) == 1
    assert rep.to_json()["inheritors"] == 1
