"""Combinatorial fold test for quadratic rank-one networks.

A quadratic rank-one network has a nondegenerate fold exactly when, after
keeping a single species and three reactions, one sees a network simply
equivalent to {0 -> aX, X -> 0, 2X -> bX} with a >= 1 and b >= 3.
"""
from dataclasses import dataclass
from itertools import combinations

from ..inheritance import _restrict


@dataclass
class RankOneFold:
    feasible: bool
    species: int = None
    reactions: tuple = ()          # indices into net.pairs
    pattern: tuple = None          # (a, b)

    def __bool__(self):
        return self.feasible


def _match(pairs):
    """(a, b) if the one-species reactions are 0 -> a, 1 -> 0, 2 -> b in some order."""
    by_src = {}
    for (s,), (t,) in pairs:
        by_src.setdefault(s, []).append(t)
    if sorted(by_src) != [0, 1, 2] or any(len(v) != 1 for v in by_src.values()):
        return None
    a, z, b = by_src[0][0], by_src[1][0], by_src[2][0]
    if a >= 1 and z == 0 and b >= 3:
        return a, b
    return None


def rank_one_fold(net):
    if net.rank != 1:
        raise ValueError("rank_one_fold needs a rank-one network")
    if not net.is_quadratic():
        raise ValueError("rank_one_fold needs a quadratic network")
    if net.n - len(net.trivial_species()) > 2:
        return RankOneFold(False)
    for i in range(net.n):
        for rs in combinations(range(net.m), 3):
            pairs = _restrict([net.pairs[j] for j in rs], (i,))
            if len(pairs) != 3:
                continue
            hit = _match(pairs)
            if hit:
                return RankOneFold(True, i, rs, hit)
    return RankOneFold(False)


__all__ = ["rank_one_fold", "RankOneFold"]
