"""Subnetworks, enlargements and atoms.

Enlargements are recognised up to dynamical equivalence: a candidate built
from the smaller network (or cut out of the bigger one) is compared with the
other side through :func:`dynamic_key`, so two networks that only differ by
positive multiples of reaction vectors are treated alike.

Supported moves
  E1  add a reaction that keeps the rank
  E2  fully open extension (inflow and outflow for every species)
  E3  add a species that keeps the rank
  E6  split one reaction A -> B into A -> C -> B through a complex C that
      involves new species (single split, one inserted complex)
"""
from dataclasses import dataclass, field
from itertools import combinations

from .crn_model import Network, dynamic_key, format_network
from .enumeration import enumerate_complexes
from .algebra.matrix import ExactMatrix

E1, E2, E3, E6 = "E1", "E2", "E3", "E6"

# smaller networks with a nondegenerate fold: the one-species rank-one patterns
# {0 -> aX, X -> 0, 2X -> 3X}.  Planar (2,3,2) quadratic networks admit no
# nondegenerate fold and no Hopf point (checked by tests over their catalog).
RANK_ONE_FOLD_SEEDS = tuple(
    Network([((0,), (a,)), ((1,), (0,)), ((2,), (3,))], 1) for a in (1, 2, 3))


@dataclass
class EnlargementWitness:
    chain: list                           # e.g. ["E3", "E1", "E1"]
    mapping: dict = field(default_factory=dict)
    added: list = field(default_factory=list)

    @property
    def kind(self):
        return self.chain[0] if len(set(self.chain)) == 1 else "+".join(self.chain)

    def to_json(self):
        return {"chain": list(self.chain), "mapping": {str(k): v for k, v in self.mapping.items()},
                "added": [str(a) for a in self.added]}


def _restrict(pairs, keep):
    """Project reactions onto the kept species and drop/merge collapsed ones."""
    out = []
    for a, b in pairs:
        a2 = tuple(a[i] for i in keep)
        b2 = tuple(b[i] for i in keep)
        if a2 != b2 and (a2, b2) not in out:
            out.append((a2, b2))
    return out


def induced_subnetworks(net, min_reactions=1):
    """Every network obtained by deleting species and reactions.

    Yields (subnetwork, description) with description
    ``{"species_kept": [...], "reactions_kept": [...]}``; reactions are
    indexed in ``net.pairs`` order and refer to the network before species
    deletion.
    """
    n, m = net.n, net.m
    for ns in range(n, 0, -1):
        for keep in combinations(range(n), ns):
            for k in range(m, min_reactions - 1, -1):
                for rs in combinations(range(m), k):
                    pairs = _restrict([net.pairs[j] for j in rs], keep)
                    if len(pairs) < min_reactions:
                        continue
                    sub = Network(pairs, ns, [net.species[i] for i in keep])
                    yield sub, {"species_kept": list(keep), "reactions_kept": list(rs)}


def _same(a, b):
    return a.n == b.n and dynamic_key(a) == dynamic_key(b)


def _e1_e3(small, big):
    if small.rank != big.rank or small.n > big.n:
        return None
    for sub, desc in induced_subnetworks(big, min_reactions=small.m):
        if sub.n != small.n or sub.m != small.m:
            continue
        if _same(sub, small):
            chain = [E3] * (big.n - small.n) + [E1] * (big.m - len(desc["reactions_kept"]))
            extra = [big.pairs[j] for j in range(big.m) if j not in desc["reactions_kept"]]
            if not chain:
                continue
            return EnlargementWitness(chain, {"species": desc["species_kept"]}, extra)
    return None


def _e2(small, big):
    if small.n != big.n:
        return None
    pairs = list(small.pairs)
    added = []
    for i in range(small.n):
        e = tuple(1 if k == i else 0 for k in range(small.n))
        z = tuple(0 for _ in range(small.n))
        for r in ((z, e), (e, z)):
            if r not in pairs:
                pairs.append(r)
                added.append(r)
    if added and len(pairs) == big.m and _same(Network(pairs, small.n), big):
        return EnlargementWitness([E2], {}, added)
    return None


def _e6(small, big, max_molecularity=None):
    k = big.n - small.n
    if k < 1 or big.m != small.m + 1:
        return None
    mm = max_molecularity or big.max_molecularity()
    pad = (0,) * k
    lifted = [(a + pad, b + pad) for a, b in small.pairs]
    for j, (a, b) in enumerate(lifted):
        for c in enumerate_complexes(big.n, mm):
            if not any(c[small.n:]) or c in (a, b):
                continue
            pairs = lifted[:j] + [(a, c), (c, b)] + lifted[j + 1:]
            if len(set(pairs)) != len(pairs):
                continue
            cand = Network(pairs, big.n)
            new_rows = [[v[i] for v in cand.vectors] for i in range(small.n, big.n)]
            if ExactMatrix(new_rows).rank() != 1:
                continue
            if _same(cand, big):
                return EnlargementWitness([E6], {"split": j}, [c])
    return None


def detect_enlargement(small, big):
    """A chain of enlargements leading from ``small`` to ``big`` (up to dynamical equivalence), or None."""
    if small.n > big.n or small.m > big.m:
        return None
    for test in (_e1_e3, _e2, _e6):
        w = test(small, big)
        if w is not None:
            return w
    return None


@dataclass
class AtomReport:
    behaviour: str
    atoms: list
    inheritors: dict                      # key -> {"inherited_from": text, "chain": [...]}
    universe: str

    def to_json(self):
        return {"behaviour": self.behaviour, "atoms": len(self.atoms), "inheritors": len(self.inheritors),
                "universe": self.universe,
                "provenance": {str(k): v for k, v in self.inheritors.items()}}


UNIVERSE = ("one-species patterns {0->aX, X->0, 2X->3X} (a=1,2,3) and the planar quadratic trimolecular "
            "networks with three reactions that show the behaviour (none do)")


def atoms(catalog, behaviour="fold", positive=None, smaller=None):
    """Split behaviour-positive networks into atoms and inheritors.

    ``positive`` is the list of catalog keys known to show the behaviour;
    ``smaller`` the candidate parents (defaults to the seeds above for the
    fold, and to nothing else).
    """
    keys = list(positive if positive is not None else catalog.keys)
    if smaller is None:
        smaller = list(RANK_ONE_FOLD_SEEDS) if behaviour == "fold" else []
    inh = {}
    at = []
    for k in keys:
        big = catalog.network(k)
        for s in smaller:
            w = detect_enlargement(s, big)
            if w is not None:
                inh[k] = {"inherited_from": format_network(s, canonical=False), "chain": w.chain}
                break
        else:
            at.append(k)
    return AtomReport(behaviour, at, inh, UNIVERSE)


__all__ = ["EnlargementWitness", "induced_subnetworks", "detect_enlargement", "atoms", "AtomReport",
           "RANK_ONE_FOLD_SEEDS", "E1", "E2", "E3", "E6"]
