"""Enumeration of small mass-action networks and catalog persistence.

Candidates are generated source-multiset first, then one product complex
per reaction.  Everything downstream of the products only depends on the
(source, primitive ray) signature, so filters are cached per signature.
Classes are dynamic equivalence classes modulo species permutation.
"""
from dataclasses import dataclass, field, asdict
from itertools import combinations, combinations_with_replacement, product
from math import comb
import csv
import io
import json

from .crn_model import (Network, ray_signature, representative, is_dynamically_nontrivial, has_redundant_reaction,
                        format_network, primitive, equivalent)
from .algebra.matrix import bareiss_rank

SCHEMA_VERSION = 1
CONVENTION = "species-swap quotient"


def enumerate_complexes(n_species, max_molecularity):
    """All complexes of molecularity <= max, ordered by molecularity then lexicographically descending."""
    if n_species < 1:
        raise ValueError("need at least one species")
    out = []

    def rec(prefix, left, k):
        if k == 1:
            out.append(prefix + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, k - 1)

    for s in range(max_molecularity + 1):
        rec((), s, n_species)
    return out


FLAG_NAMES = ("distinct_sources", "nontrivial", "no_redundant", "not_collinear", "mixed_source",
              "autocatalytic", "admits_equilibrium")


@dataclass(frozen=True)
class ClassSpec:
    n_species: int = 2
    n_reactions: int = 4
    max_reactant: int = 2
    max_product: int = 3
    rank: int = 2
    distinct_sources: bool = False
    nontrivial: bool = True
    no_redundant: bool = False
    not_collinear: bool = False
    mixed_source: bool = False
    autocatalytic: bool = False
    admits_equilibrium: bool = False

    def flags(self):
        return [f for f in FLAG_NAMES if getattr(self, f)]

    def with_flags(self, **kw):
        d = asdict(self)
        d.update(kw)
        return ClassSpec(**d)

    def describe(self):
        return (f"n={self.n_species},m={self.n_reactions},src<={self.max_reactant},prod<={self.max_product},"
                f"rank={self.rank}," + ",".join(self.flags()))

    @classmethod
    def parse(cls, text):
        """Parse a preset name or a comma list like ``n=2,m=4,prod<=3,distinct_sources,nontrivial``."""
        if text in PRESETS:
            return PRESETS[text]
        kw = {f: False for f in FLAG_NAMES}
        for tok in (t.strip() for t in text.split(",") if t.strip()):
            if tok.startswith("n="):
                kw["n_species"] = int(tok[2:])
            elif tok.startswith("m="):
                kw["n_reactions"] = int(tok[2:])
            elif tok.startswith("src<="):
                kw["max_reactant"] = int(tok[5:])
            elif tok.startswith("prod<="):
                kw["max_product"] = int(tok[6:])
            elif tok.startswith("rank="):
                kw["rank"] = int(tok[5:])
            elif tok.replace("-", "_") in FLAG_NAMES:
                kw[tok.replace("-", "_")] = True
            else:
                raise ValueError(f"unknown spec token {tok!r}")
        return cls(**kw)


PRESETS = {
    "fold-trimolecular": ClassSpec(distinct_sources=True),
    "fold-bimolecular": ClassSpec(distinct_sources=True, max_product=2),
    "hopf": ClassSpec(no_redundant=True, not_collinear=True, mixed_source=True, autocatalytic=True),
}
PRESETS["fold-trimolecular-eq"] = PRESETS["fold-trimolecular"].with_flags(admits_equilibrium=True)
PRESETS["fold-bimolecular-eq"] = PRESETS["fold-bimolecular"].with_flags(admits_equilibrium=True)
PRESETS["hopf-eq"] = PRESETS["hopf"].with_flags(admits_equilibrium=True)


def collinear(sources):
    """Do the distinct source complexes lie on one line?"""
    pts = sorted(set(sources))
    if len(pts) < 3:
        return True
    p0 = pts[0]
    d = [tuple(b - a for a, b in zip(p0, p)) for p in pts[1:]]
    return bareiss_rank([list(v) for v in d]) <= 1


def _source_multisets(spec, sources):
    gen = combinations if spec.distinct_sources else combinations_with_replacement
    for ms in gen(sources, spec.n_reactions):
        if spec.mixed_source and spec.n_species >= 2:
            mixed = tuple(1 if i < 2 else 0 for i in range(spec.n_species))
            if mixed not in ms:
                continue
        if spec.not_collinear and collinear(ms):
            continue
        yield ms


def _product_choices(spec, ms, prods):
    """Per distinct source, choose distinct products (no duplicate reactions)."""
    groups = []
    for s in sorted(set(ms), key=ms.index):
        k = ms.count(s)
        cands = [p for p in prods if p != s]
        groups.append([(s, c) for c in combinations(cands, k)])
    for pick in product(*groups):
        yield [(s, p) for s, ps in pick for p in ps]


def raw_count(spec):
    """Closed form: sum over source multisets of prod_s C(#products != s, multiplicity)."""
    sources = enumerate_complexes(spec.n_species, spec.max_reactant)
    prods = enumerate_complexes(spec.n_species, spec.max_product)
    total = 0
    for ms in _source_multisets(spec, sources):
        t = 1
        for s in set(ms):
            t *= comb(len(prods) - (1 if s in prods else 0), ms.count(s))
        total += t
    return total


def _autocatalytic(sig, n):
    for i in range(n):
        sq = tuple(2 if k == i else 0 for k in range(n))
        unit = tuple(1 if k == i else 0 for k in range(n))
        if (sq, unit) in sig:
            return True
    return False


def _swap_min(sig, n):
    from itertools import permutations
    best = sig
    for perm in permutations(range(n)):
        s = tuple(sorted((tuple(a[p] for p in perm), tuple(r[p] for p in perm)) for a, r in sig))
        if s < best:
            best = s
    return best


@dataclass
class Catalog:
    spec: ClassSpec
    keys: list                              # sorted dynamic keys (ray signatures)
    raw: int = 0
    stats: dict = field(default_factory=dict)
    reports: dict = field(default_factory=dict)
    convention: str = CONVENTION
    sealed: bool = True

    def __len__(self):
        return len(self.keys)

    def networks(self):
        return [representative(k, self.spec.n_species) for k in self.keys]

    def network(self, key):
        return representative(key, self.spec.n_species)

    def subset(self, keys, note=None):
        ks = sorted(set(keys))
        return Catalog(self.spec, ks, self.raw, {"parent": self.spec.describe(), "note": note or ""})

    # -- persistence -----------------------------------------------------
    def header(self):
        return {"schema_version": SCHEMA_VERSION, "spec": self.spec.describe(), "convention": self.convention,
                "raw_candidates": self.raw, "classes": len(self.keys), "stats": self.stats}

    def to_jsonl(self):
        lines = [json.dumps({"header": self.header()}, sort_keys=True)]
        for k in self.keys:
            net = self.network(k)
            rec = {"key": key_text(k), "text": format_network(net), "flags": self.spec.flags(),
                   "counts": {"reactions": net.m, "distinct_sources": len(set(net.sources))}}
            if key_text(k) in self.reports:
                rec["report"] = self.reports[key_text(k)]
            lines.append(json.dumps(rec, sort_keys=True))
        return "\n".join(lines) + "\n"

    def write_jsonl(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_jsonl())

    def summary_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "value"])
        w.writerow(["spec", self.spec.describe()])
        w.writerow(["raw_candidates", self.raw])
        w.writerow(["classes", len(self.keys)])
        for k, v in sorted(self.stats.items()):
            w.writerow([k, v])
        return buf.getvalue()

    @classmethod
    def read_jsonl(cls, path):
        with open(path) as fh:
            lines = [json.loads(l) for l in fh if l.strip()]
        head = lines[0]["header"]
        keys = sorted(key_from_text(r["key"]) for r in lines[1:])
        return cls(ClassSpec.parse(head["spec"]), keys, head["raw_candidates"], head.get("stats", {}),
                   convention=head.get("convention", CONVENTION))


def key_text(sig):
    """Compact text for a ray signature: 'sx,sy>rx,ry|...'."""
    return "|".join(",".join(map(str, s)) + ">" + ",".join(map(str, r)) for s, r in sig)


def key_from_text(text):
    out = []
    for part in text.split("|"):
        s, r = part.split(">")
        out.append((tuple(int(v) for v in s.split(",")), tuple(int(v) for v in r.split(","))))
    return tuple(out)


def _rank(sig):
    return bareiss_rank([[r[i] for _, r in sig] for i in range(len(sig[0][1]))]) if sig else 0


def enumerate_networks(spec, progress=None):
    """Build the catalog of dynamic classes (modulo species permutation) satisfying ``spec``."""
    n = spec.n_species
    sources = enumerate_complexes(n, spec.max_reactant)
    prods = enumerate_complexes(n, spec.max_product)
    cache = {}
    classes = set()
    raw = 0
    rejected = {}

    def reject(why):
        rejected[why] = rejected.get(why, 0) + 1

    for ms in _source_multisets(spec, sources):
        for pairs in _product_choices(spec, ms, prods):
            raw += 1
            sig = tuple(sorted((a, primitive(tuple(q - p for p, q in zip(a, b)))) for a, b in pairs))
            if sig in cache:
                ok = cache[sig]
            else:
                ok = _accept(spec, sig, reject)
                cache[sig] = ok
            if ok:
                classes.add(_swap_min(tuple(sorted(set(sig))), n))
    keys = sorted(classes)
    stats = {"signatures": len(cache)}
    if spec.admits_equilibrium:
        from .equilibria import admits_positive_nondegenerate_equilibrium
        kept = []
        for k in keys:
            if admits_positive_nondegenerate_equilibrium(representative(k, n)):
                kept.append(k)
        stats["without_nondegenerate_equilibrium"] = len(keys) - len(kept)
        keys = kept
    return Catalog(spec, keys, raw, stats)


def _accept(spec, sig, reject):
    n = spec.n_species
    rays = [r for _, r in sig]
    if len(set(sig)) != len(sig):
        # two products on the same ray from one source: same family as fewer reactions
        if spec.no_redundant:
            reject("redundant")
            return False
    if spec.autocatalytic and not _autocatalytic(sig, n):
        reject("autocatalytic")
        return False
    if _rank(sig) != spec.rank:
        reject("rank")
        return False
    net = representative(tuple(dict.fromkeys(sig)), n)
    if spec.no_redundant and has_redundant_reaction(net):
        reject("redundant")
        return False
    if spec.nontrivial and not is_dynamically_nontrivial(net):
        reject("trivial")
        return False
    return True


def partition_diagonal(catalog_or_keys, n=2):
    """Union-find over diagonal equivalence (modulo species permutation)."""
    keys = list(catalog_or_keys.keys if isinstance(catalog_or_keys, Catalog) else catalog_or_keys)
    parent = list(range(len(keys)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    nets = [representative(k, n) for k in keys]
    buckets = {}
    for i, net in enumerate(nets):
        # diagonal equivalence keeps the source multiset; bucket by it (up to swap)
        src = tuple(sorted(net.sources))
        srcs = min(src, tuple(sorted(tuple(reversed(s)) for s in src))) if n == 2 else src
        buckets.setdefault(srcs, []).append(i)
    for idx in buckets.values():
        for a, b in combinations(idx, 2):
            if find(a) != find(b) and equivalent(nets[a], nets[b], "diagonal", swap=True):
                parent[find(a)] = find(b)
    classes = {}
    for i in range(len(keys)):
        classes.setdefault(find(i), []).append(keys[i])
    return sorted((sorted(v) for v in classes.values()), key=lambda c: c[0])


__all__ = ["enumerate_complexes", "ClassSpec", "PRESETS", "Catalog", "enumerate_networks", "partition_diagonal",
           "raw_count", "collinear", "key_text", "key_from_text", "SCHEMA_VERSION", "CONVENTION"]
