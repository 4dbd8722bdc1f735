"""Exact arithmetic kernel: scalars, matrices, polynomials, LP and sign decisions."""
from .scalar import ExactScalar, to_scalar, sign, is_dyadic, fmt, dyadic_between
from .upoly import UPoly, RootInterval, isolate_real_roots, count_roots, sign_at_root, squarefree, sturm_sequence
from .matrix import ExactMatrix, bareiss_rank, rref, rank_generic
from .poly import ExactPoly, resultant, eliminate
from .lp import LPResult, lp_feasible, verify_farkas, in_open_cone, in_closed_cone
from .qfield import QSqrt, quadratic_roots, exact_sign
from .sign import SignDecision, Domain, decide_sign

__all__ = [
    "ExactScalar", "to_scalar", "sign", "is_dyadic", "fmt", "dyadic_between",
    "UPoly", "RootInterval", "isolate_real_roots", "count_roots", "sign_at_root", "squarefree", "sturm_sequence",
    "ExactMatrix", "bareiss_rank", "rref", "rank_generic",
    "ExactPoly", "resultant", "eliminate",
    "LPResult", "lp_feasible", "verify_farkas", "in_open_cone", "in_closed_cone",
    "QSqrt", "quadratic_roots", "exact_sign",
    "SignDecision", "Domain", "decide_sign",
]
