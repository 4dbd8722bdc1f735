"""Bifurcation analysis of planar mass-action networks.

:func:`analyze` runs every test on one network and returns an
:class:`AnalysisReport` whose ``to_json`` output is the report schema used by
the command line.
"""
from dataclasses import dataclass, field

from ..crn_model import format_network, is_dynamically_nontrivial
from ..equilibria import admits_positive_nondegenerate_equilibrium, DynamicallyTrivial
from .planar import planar_data, PlanarData
from .fold import fold_analysis, FoldVerdict
from .hopf import hopf_analysis, HopfVerdict, focal_polys, hopf_pieces, focal_values_at
from .bt import bt_analysis, bt_point_search, bt_normal_form, bt_transversality, BTVerdict, BTNormalForm
from .origin import origin_stability, bistable, OriginVerdict
from .rank_one import rank_one_fold, RankOneFold
from .cusp import cusp_gradient_check

UNRESOLVED = "Unresolved"


@dataclass
class AnalysisReport:
    network: str
    flags: dict
    fold: object = None
    hopf: object = None
    bt: object = None
    origin: object = None
    decision_trail: list = field(default_factory=list)
    provenance: dict = None

    @property
    def unresolved(self):
        parts = (self.fold, self.hopf, self.bt, self.origin)
        return any(getattr(p, "verdict", None) == UNRESOLVED for p in parts)

    def to_json(self):
        def js(x):
            return None if x is None else x.to_json()
        out = {"network": self.network, "flags": self.flags, "fold": js(self.fold), "hopf": js(self.hopf),
               "bt": js(self.bt), "origin": js(self.origin), "decision_trail": self.decision_trail}
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out


def _flags(net):
    return {
        "species": net.n,
        "reactions": net.m,
        "rank": net.rank,
        "quadratic": net.is_quadratic(),
        "max_molecularity": net.max_molecularity(),
        "mixed_source": any(all(c > 0 for c in a) for a in net.sources),
        "autocatalytic_square": any((a, r) in (((2, 0), (1, 0)), ((0, 2), (0, 1)))
                                    for a, r in zip(net.sources, net.rays)) if net.n == 2 else False,
    }


def analyze(net):
    """Full pipeline for one network (deterministic)."""
    flags = _flags(net)
    trail = []
    rep = AnalysisReport(format_network(net, canonical=False), flags, decision_trail=trail)
    nontrivial = net.m > net.rank and is_dynamically_nontrivial(net)
    flags["dynamically_nontrivial"] = nontrivial
    if not nontrivial:
        trail.append("dynamically-trivial")
        return rep
    if net.rank == 1 and net.is_quadratic():
        r1 = rank_one_fold(net)
        flags["rank_one_fold"] = r1.feasible
        trail.append("rank-one-pattern-search")
        return rep
    if net.n != 2 or net.rank != 2:
        trail.append("outside-planar-rank-two-track")
        return rep
    if net.m - net.rank > 2:
        # equilibria form a family of dimension > 1 in the kernel section; not covered by the alpha-line analysis
        why = f"kernel-section-dimension-{net.m - net.rank - 1}-unsupported"
        trail.append(why)
        rep.fold = FoldVerdict(UNRESOLVED, trail=[why])
        rep.hopf = HopfVerdict(UNRESOLVED, trail=[why])
        rep.bt = BTVerdict(UNRESOLVED, trail=[why])
        rep.origin = origin_stability(net)
        return rep
    try:
        eq = admits_positive_nondegenerate_equilibrium(net)
    except DynamicallyTrivial:
        eq = False
    flags["admits_equilibrium"] = bool(eq)
    if not eq:
        trail.append("no-positive-nondegenerate-equilibrium")
        return rep
    d = planar_data(net)
    rep.fold = fold_analysis(net, d)
    trail.append("fold:" + ",".join(rep.fold.trail))
    rep.hopf = hopf_analysis(net, d)
    trail.append("hopf:" + ",".join(rep.hopf.trail))
    if rep.fold.feasible and rep.hopf.feasible:
        rep.bt = bt_analysis(net, d)
        trail.append("bt:" + ",".join(rep.bt.trail))
    else:
        rep.bt = BTVerdict("None", trail=["needs-fold-and-hopf"])
    rep.origin = origin_stability(net)
    flags["bistable"] = bool(rep.fold.feasible and "-" in rep.fold.eig2_signs and rep.origin.verdict == "StableOrigin")
    return rep


__all__ = ["analyze", "AnalysisReport", "planar_data", "PlanarData", "fold_analysis", "FoldVerdict", "hopf_analysis",
           "HopfVerdict", "focal_polys", "focal_values_at", "hopf_pieces", "bt_analysis", "bt_point_search", "bt_normal_form",
           "bt_transversality", "BTVerdict", "BTNormalForm", "origin_stability", "bistable", "OriginVerdict",
           "rank_one_fold", "RankOneFold", "cusp_gradient_check"]
