"""Exact bifurcation analysis of small planar mass-action reaction networks.

Typical use::

    from crnbif import parse_network, analyze
    report = analyze(parse_network("2X->3X; X+Y->2X; X->0; 0->Y", species="XY"))
    report.to_json()["bt"]["verdict"]          # 'Vertical'

Heavier entry points live in the submodules: ``crnbif.enumeration`` builds
catalogs, ``crnbif.reproduce`` recomputes the published counts and
``crnbif.portrait`` integrates and draws trajectories.
"""
from .crn_model import (Network, NetworkParseError, parse_network, format_network, dynamic_key, representative,
                        equivalent, mass_action_rhs)
from .enumeration import ClassSpec, Catalog, PRESETS, enumerate_complexes, enumerate_networks, partition_diagonal
from .equilibria import (kernel_cone, symbolic_jacobian, admits_positive_nondegenerate_equilibrium,
                         count_positive_equilibria, recoordinatise, realise_kappa)
from .bifurcation import analyze, AnalysisReport, fold_analysis, hopf_analysis, bt_analysis, origin_stability, \
    rank_one_fold, cusp_gradient_check
from .inheritance import detect_enlargement, atoms

__version__ = "0.1.0"

__all__ = ["Network", "NetworkParseError", "parse_network", "format_network", "dynamic_key", "representative",
           "equivalent", "mass_action_rhs", "ClassSpec", "Catalog", "PRESETS", "enumerate_complexes",
           "enumerate_networks", "partition_diagonal", "kernel_cone", "symbolic_jacobian",
           "admits_positive_nondegenerate_equilibrium", "count_positive_equilibria", "recoordinatise",
           "realise_kappa", "analyze", "AnalysisReport", "fold_analysis", "hopf_analysis", "bt_analysis",
           "origin_stability", "rank_one_fold", "cusp_gradient_check", "detect_enlargement", "atoms",
           "__version__"]
