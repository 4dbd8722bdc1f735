"""Reaction networks: complexes, reactions, matrices, text format, keys, equivalences.

A network stores its reactions as pairs of stoichiometry tuples.  Species are
named by letters; the wire format accepts X, Y and Z.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from math import gcd
import re

from .algebra.matrix import ExactMatrix
from .algebra.poly import ExactPoly
from .algebra.lp import lp_feasible, in_closed_cone, in_open_cone

SPECIES_LETTERS = "XYZ"


class NetworkParseError(ValueError):
    def __init__(self, msg, position=None, text=None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(msg + where)


@dataclass(frozen=True, order=True)
class Complex:
    stoich: tuple

    @property
    def molecularity(self):
        return sum(self.stoich)

    @property
    def is_bimolecular(self):
        return self.molecularity <= 2

    @property
    def is_trimolecular(self):
        return self.molecularity <= 3

    def text(self, names=SPECIES_LETTERS):
        parts = []
        for k, name in zip(self.stoich, names):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{k}{name}")
        return "+".join(parts) or "0"


@dataclass(frozen=True)
class Reaction:
    reactant: Complex
    product: Complex

    def __post_init__(self):
        if self.reactant == self.product:
            raise ValueError("reactant and product complexes must differ")

    @property
    def vector(self):
        return tuple(p - r for p, r in zip(self.product.stoich, self.reactant.stoich))


def primitive(v):
    """The primitive integer vector on the ray through v."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


class Network:
    """An (n, m, r) network: species count, ordered reactions, derived matrices."""

    def __init__(self, reactions, n_species=None, species=None):
        pairs = []
        for r in reactions:
            if isinstance(r, Reaction):
                pairs.append((tuple(r.reactant.stoich), tuple(r.product.stoich)))
            else:
                a, b = r
                pairs.append((tuple(a), tuple(b)))
        if n_species is None:
            n_species = len(pairs[0][0]) if pairs else len(species or ())
        for a, b in pairs:
            if len(a) != n_species or len(b) != n_species:
                raise ValueError("complex length does not match the species count")
            if min(a + b, default=0) < 0:
                raise ValueError("negative stoichiometry")
            if a == b:
                raise ValueError("reactant and product complexes must differ")
        if len(set(pairs)) != len(pairs):
            raise ValueError("duplicate reaction")
        self.n = n_species
        self.pairs = tuple(pairs)
        self.species = tuple(species) if species else tuple(SPECIES_LETTERS[:n_species])

    # -- basic views -------------------------------------------------------
    @property
    def m(self):
        return len(self.pairs)

    @property
    def reactions(self):
        return tuple(Reaction(Complex(a), Complex(b)) for a, b in self.pairs)

    @property
    def sources(self):
        return tuple(a for a, _ in self.pairs)

    @property
    def vectors(self):
        return tuple(tuple(q - p for p, q in zip(a, b)) for a, b in self.pairs)

    @property
    def rays(self):
        return tuple(primitive(v) for v in self.vectors)

    @property
    def A(self):
        """Reactant exponent matrix (m x n), the transpose of Gamma_l."""
        return [list(a) for a in self.sources]

    @cached_property
    def gamma(self):
        return ExactMatrix([[v[i] for v in self.vectors] for i in range(self.n)])

    @property
    def gamma_l(self):
        return ExactMatrix([[a[i] for a, _ in self.pairs] for i in range(self.n)])

    @property
    def gamma_r(self):
        return ExactMatrix([[b[i] for _, b in self.pairs] for i in range(self.n)])

    @cached_property
    def rank(self):
        return self.gamma.rank() if self.m else 0

    def is_quadratic(self):
        return all(sum(a) <= 2 for a in self.sources)

    def max_molecularity(self):
        return max((max(sum(a), sum(b)) for a, b in self.pairs), default=0)

    def trivial_species(self):
        """Indices of species whose row of Gamma is zero."""
        return [i for i in range(self.n) if all(v[i] == 0 for v in self.vectors)]

    def __eq__(self, other):
        return isinstance(other, Network) and self.n == other.n and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __repr__(self):
        return f"Network({format_network(self, canonical=False)!r})"

    def __len__(self):
        return self.m

    def permuted(self, perm):
        """Rename species: new species k is old species perm[k]."""
        return Network([(tuple(a[p] for p in perm), tuple(b[p] for p in perm)) for a, b in self.pairs],
                       self.n, self.species)

    def swapped(self):
        return self.permuted(tuple(reversed(range(self.n)))) if self.n == 2 else self

    def text(self):
        return format_network(self, canonical=False)


# ---------------------------------------------------------------- parsing ---
_TERM = re.compile(r"\s*(\d*)\s*([A-Za-z])\s*")


def _parse_complex(s, offset, order, fixed, cap):
    body = s.strip()
    if body == "0":
        return {}
    if not body:
        raise NetworkParseError("empty complex", offset)
    out = {}
    pos = 0
    for piece in s.split("+"):
        m = _TERM.fullmatch(piece)
        if not m:
            raise NetworkParseError(f"malformed term {piece.strip()!r}", offset + pos)
        coef = int(m.group(1)) if m.group(1) else 1
        name = m.group(2)
        if name not in SPECIES_LETTERS:
            raise NetworkParseError(f"unknown species {name!r}", offset + pos + m.start(2))
        if fixed is not None and name not in fixed:
            raise NetworkParseError(f"species {name!r} not declared", offset + pos + m.start(2))
        if coef == 0:
            raise NetworkParseError("zero coefficient", offset + pos)
        if name not in order:
            order.append(name)
        out[name] = out.get(name, 0) + coef
        pos += len(piece) + 1
    if cap is not None and sum(out.values()) > cap:
        raise NetworkParseError(f"molecularity exceeds {cap}", offset)
    return out


def parse_network(text, species=None, max_molecularity=None):
    """Parse the reaction-list wire format.

    Reactions are separated by ";" or newlines; "->" is an arrow and "<->"
    adds the reverse reaction as well.  Chains such as "A -> B -> C" give one
    reaction per arrow.  Species get indices in order of first appearance
    unless ``species`` (for instance "XY") fixes the order and count.
    """
    fixed = list(species) if species is not None else None
    order = list(fixed) if fixed is not None else []
    raw = []
    offset = 0
    for chunk in re.split(r"(;|\n)", text):
        if chunk in (";", "\n"):
            offset += 1
            continue
        if chunk.strip():
            parts = re.split(r"(<->|->)", chunk)
            if len(parts) < 3:
                raise NetworkParseError("missing arrow", offset + len(chunk) - len(chunk.lstrip()))
            comps = []
            pos = offset
            for k, p in enumerate(parts):
                if k % 2 == 0:
                    comps.append((_parse_complex(p, pos, order, fixed, max_molecularity), pos))
                pos += len(p)
            arrows = parts[1::2]
            for k, arrow in enumerate(arrows):
                (a, pa), (b, pb) = comps[k], comps[k + 1]
                if a == b:
                    raise NetworkParseError("reactant equals product", pa)
                raw.append((a, b))
                if arrow == "<->":
                    raw.append((b, a))
        offset += len(chunk)
    if not raw:
        raise NetworkParseError("no reactions", 0)
    n = len(order)
    pairs = []
    for a, b in raw:
        ta = tuple(a.get(s, 0) for s in order)
        tb = tuple(b.get(s, 0) for s in order)
        if (ta, tb) in pairs:
            raise NetworkParseError("duplicate reaction", None)
        pairs.append((ta, tb))
    return Network(pairs, n, order)


def format_network(net, canonical=True):
    """Render a network in the wire format; canonical=True fixes species and reaction order."""
    if canonical:
        net = canonical_form(net)
    names = net.species
    return "; ".join(f"{Complex(a).text(names)} -> {Complex(b).text(names)}" for a, b in net.pairs)


# ------------------------------------------------------------------ keys ---
def _encode(pairs):
    # larger stoichiometries of the first species come first in the text
    return tuple(sorted(tuple(-x for x in a) + tuple(-x for x in b) for a, b in pairs))


def canonical_form(net):
    """The isomorphic copy whose encoding is least over species permutations."""
    best = None
    for perm in permutations(range(net.n)):
        cand = net.permuted(perm)
        code = _encode(cand.pairs)
        if best is None or code < best[0]:
            best = (code, cand)
    code, cand = best
    order = sorted(cand.pairs, key=lambda ab: tuple(-x for x in ab[0]) + tuple(-x for x in ab[1]))
    return Network(order, cand.n, SPECIES_LETTERS[:cand.n])


def canonical_key(net):
    """Bytes identifying the network up to species renaming and reaction reordering."""
    code = min(_encode(net.permuted(p).pairs) for p in permutations(range(net.n)))
    return (f"{net.n}:" + ";".join(",".join(str(-x) for x in r) for r in code)).encode()


def ray_signature(pairs):
    """Sorted (source, primitive ray) list: the data that fixes the mass-action family."""
    return tuple(sorted({(a, primitive(tuple(q - p for p, q in zip(a, b)))) for a, b in pairs}))


def dynamic_key(net):
    """Key of the dynamical-equivalence class modulo species permutation.

    Two networks without redundant reactions have equal keys exactly when
    they are dynamically equivalent up to a renaming of species.
    """
    best = None
    for perm in permutations(range(net.n)):
        sig = ray_signature([(tuple(a[p] for p in perm), tuple(b[p] for p in perm)) for a, b in net.pairs])
        if best is None or sig < best:
            best = sig
    return best


def dynamic_key_bytes(net):
    return repr(dynamic_key(net)).replace(" ", "").encode()


def representative(sig, n=2):
    """A network realising a ray signature (product = source + ray)."""
    return Network([(s, tuple(x + y for x, y in zip(s, r))) for s, r in sig], n)


# ------------------------------------------------------------ predicates ---
def is_dynamically_nontrivial(net, certificate=False):
    """Is there v >= 1 with Gamma v = 0?  Exact LP."""
    res = lp_feasible(net.gamma.tolist())
    if res.feasible:
        assert net.m > net.rank, "dynamically nontrivial networks have m > r"
    return res if certificate else res.feasible


def _by_source(net):
    d = {}
    for a, v in zip(net.sources, net.vectors):
        d.setdefault(a, []).append(v)
    return d


def has_redundant_reaction(net):
    """Does some reaction vector lie in the open positive span of its same-source siblings?"""
    for a, vs in _by_source(net).items():
        if len(vs) < 2:
            continue
        for k, v in enumerate(vs):
            others = vs[:k] + vs[k + 1:]
            if in_open_cone(v, others):
                return True
    return False


def _same_cone(g1, g2):
    return all(in_closed_cone(v, g2) for v in g1) and all(in_closed_cone(v, g1) for v in g2)


def _dyn_equal(n1, n2):
    s1, s2 = _by_source(n1), _by_source(n2)
    if set(s1) != set(s2):
        return False
    return all(_same_cone(s1[a], s2[a]) for a in s1)


def _simple_equal(n1, n2):
    # Gamma2 = Gamma1 D after matching columns inside equal-source blocks
    if sorted(n1.sources) != sorted(n2.sources):
        return False
    s1, s2 = _by_source(n1), _by_source(n2)
    for a in s1:
        r1 = sorted(primitive(v) for v in s1[a])
        r2 = sorted(primitive(v) for v in s2[a])
        if r1 != r2:
            return False
    return True


def _diag_equal(n1, n2):
    if sorted(n1.sources) != sorted(n2.sources) or n1.n != n2.n:
        return False
    s1, s2 = _by_source(n1), _by_source(n2)
    blocks = [(s1[a], s2[a]) for a in sorted(s1)]

    def rec(k, cols1, cols2):
        if k == len(blocks):
            return diagonal_scaling(cols1, cols2) is not None
        b1, b2 = blocks[k]
        for perm in permutations(range(len(b2))):
            if rec(k + 1, cols1 + b1, cols2 + [b2[i] for i in perm]):
                return True
        return False

    return rec(0, [], [])


def diagonal_scaling(cols1, cols2):
    """Positive (d1, d2) with col2_j = D1 col1_j d2_j, or None.

    Column scalings are eliminated by ratios inside each column; the row
    scaling must then satisfy d1_i / d1_k = (G2_ij G1_kj) / (G1_ij G2_kj)
    for every column with both entries nonzero.
    """
    n = len(cols1[0]) if cols1 else 0
    for c1, c2 in zip(cols1, cols2):
        for x, y in zip(c1, c2):
            if (x == 0) != (y == 0) or x * y < 0:
                return None
    ratio = [None] * n
    ratio[0] = Fraction(1) if n else None
    changed = True
    # propagate row ratios through columns (a tiny union-find by fixpoint)
    while changed:
        changed = False
        for c1, c2 in zip(cols1, cols2):
            nz = [i for i in range(n) if c1[i] != 0]
            known = [i for i in nz if ratio[i] is not None]
            if not known:
                continue
            i0 = known[0]
            col = Fraction(c2[i0], 1) / (ratio[i0] * c1[i0])
            for i in nz:
                want = Fraction(c2[i]) / (col * c1[i])
                if ratio[i] is None:
                    ratio[i] = want
                    changed = True
                elif ratio[i] != want:
                    return None
        if not changed and any(r is None for r in ratio):
            # a species no column touches, or a disconnected block: start it at 1
            k = ratio.index(None)
            ratio[k] = Fraction(1)
            changed = True
    if any(r is not None and r <= 0 for r in ratio):
        return None
    d2 = []
    for c1, c2 in zip(cols1, cols2):
        i = next(i for i in range(n) if c1[i] != 0)
        d2.append(Fraction(c2[i]) / (ratio[i] * c1[i]))
    return ratio, d2


def equivalent(net1, net2, mode="dynamic", swap=False):
    """Dynamic, simple or diagonal equivalence (optionally modulo species permutations)."""
    if net1.n != net2.n:
        return False
    test = {"dynamic": _dyn_equal, "simple": _simple_equal, "diagonal": _diag_equal}[mode]
    perms = permutations(range(net2.n)) if swap else [tuple(range(net2.n))]
    return any(test(net1, net2.permuted(p)) for p in perms)


# ------------------------------------------------------------ kinetics ----
def rhs_names(net):
    return tuple(s.lower() for s in net.species), tuple(f"k{j + 1}" for j in range(net.m))


def mass_action_rhs(net):
    """Component i: sum_j Gamma_ij k_j x^{A_j}, as ExactPoly in (x.., k1..km)."""
    xs, ks = rhs_names(net)
    names = xs + ks
    n = net.n
    out = []
    for i in range(n):
        terms = {}
        for j, (a, v) in enumerate(zip(net.sources, net.vectors)):
            if v[i]:
                e = tuple(a) + tuple(1 if t == j else 0 for t in range(net.m))
                terms[e] = terms.get(e, 0) + v[i]
        out.append(ExactPoly(names, terms))
    return out


__all__ = [
    "Complex", "Reaction", "Network", "NetworkParseError", "parse_network", "format_network",
    "canonical_form", "canonical_key", "dynamic_key", "dynamic_key_bytes", "ray_signature", "representative",
    "is_dynamically_nontrivial", "has_redundant_reaction", "equivalent", "diagonal_scaling",
    "mass_action_rhs", "primitive",
]
