from itertools import combinations

import pytest

from crnbif.enumeration import (enumerate_complexes, ClassSpec, PRESETS, raw_count, enumerate_networks, Catalog,
                                partition_diagonal, key_text, key_from_text)


@pytest.mark.parametrize("n, k, count", [(2, 2, 6), (2, 3, 10), (1, 3, 4)])
def test_complex_counts(n, k, count):
    cs = enumerate_complexes(n, k)
    assert len(cs) == count
    assert [sum(c) for c in cs] == sorted(sum(c) for c in cs)


def test_complex_list_order():
    # 0, X, Y, 2X, X+Y, 2Y
    assert enumerate_complexes(2, 2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def _brute_raw(spec):
    srcs = enumerate_complexes(spec.n_species, spec.max_reactant)
    prods = enumerate_complexes(spec.n_species, spec.max_product)
    rx = [(s, p) for s in srcs for p in prods if s != p]
    n = 0
    for combo in combinations(rx, spec.n_reactions):
        sources = [s for s, _ in combo]
        if spec.distinct_sources and len(set(sources)) < len(sources):
            continue
        n += 1
    return n


@pytest.mark.parametrize("name", ["fold-trimolecular", "fold-bimolecular"])
def test_raw_count_closed_form_matches_brute_force(name):
    spec = PRESETS[name]
    assert raw_count(spec) == _brute_raw(spec)


def test_filter_monotonicity_and_determinism():
    base = ClassSpec(n_reactions=3, max_product=2)
    a = enumerate_networks(base)
    b = enumerate_networks(base.with_flags(distinct_sources=True))
    c = enumerate_networks(base.with_flags(distinct_sources=True, no_redundant=True))
    assert len(a) >= len(b) >= len(c)
    assert enumerate_networks(base).to_jsonl() == a.to_jsonl()


def test_empty_class_is_a_valid_catalog():
    cat = enumerate_networks(ClassSpec(n_reactions=2, max_product=1, rank=2, mixed_source=True, autocatalytic=True))
    assert len(cat) == 0


def test_catalog_round_trip(tmp_path):
    cat = enumerate_networks(ClassSpec(n_reactions=3, max_product=2, distinct_sources=True))
    p = tmp_path / "c.jsonl"
    cat.write_jsonl(p)
    back = Catalog.read_jsonl(p)
    assert back.keys == cat.keys and back.spec == cat.spec
    assert "classes" in cat.summary_csv()
    for k in cat.keys[:20]:
        assert key_from_text(key_text(k)) == k


def test_spec_parsing():
    s = ClassSpec.parse("n=2,m=4,prod<=2,distinct_sources,nontrivial")
    assert s == PRESETS["fold-bimolecular"]
    with pytest.raises(ValueError):
        ClassSpec.parse("n=2,bogus")


def test_partition_diagonal_merges_scaled_copies():
    from crnbif.crn_model import dynamic_key, parse_network
    ks = [dynamic_key(parse_network(t, species="XY")) for t in
          ("2X->3X; X+Y->2Y; Y->0; 0->Y", "2X->3X; X+Y->3Y; Y->0; 0->Y", "2X->3X; X+Y->0; Y->0; 0->Y")]
    parts = partition_diagonal(ks)
    assert sorted(len(p) for p in parts) == [1, 2]
