"""Exact computation of SU(2) quantum invariants of links in lens spaces,
with rank/kernel analysis of the polynomial family that encodes them.
"""

from .cyclotomic import CyclotomicNumber, conjugate, embed_complex, root_of_unity
from .errors import (
    BadConditioning,
    ComputationError,
    Inconsistent,
    RankDeficient,
    UnderDetermined,
    UnsupportedCase,
    UnsupportedOrder,
)
from .gauss import GaussSumSpec, g_pm, gauss_closed_form, gauss_sum, vanishes_mod4
from .laurent import LaurentPoly, RationalFunction
from .numtheory import (
    OrderClass,
    SL2Word,
    classify_order,
    count_squares_mod,
    dedekind_sum,
    jacobi_symbol,
    mod_inverse,
    rademacher_phi,
    sl2_expand,
)
from .skein import SkeinElement, chebyshev_expand, power_to_colored, skein_add, skein_make, skein_scale
from .wrt import FPolynomial, LensSpace, eval_link, eval_meridian, f_link, f_poly, jeffrey_oracle
from .analysis import (
    LaurentMatrix,
    RationalFunctionVector,
    RecoveredSkein,
    SubmatrixCertificate,
    build_f_matrix,
    fullrank_submatrix,
    hat_c,
    interpolate_f,
    kernel,
    lambda_membership,
    rank,
    recover_skein,
)

__all__ = [
    "BadConditioning",
    "ComputationError",
    "CyclotomicNumber",
    "FPolynomial",
    "GaussSumSpec",
    "Inconsistent",
    "LaurentMatrix",
    "LaurentPoly",
    "LensSpace",
    "OrderClass",
    "RankDeficient",
    "RationalFunction",
    "RationalFunctionVector",
    "RecoveredSkein",
    "SL2Word",
    "SkeinElement",
    "SubmatrixCertificate",
    "UnderDetermined",
    "UnsupportedCase",
    "UnsupportedOrder",
    "build_f_matrix",
    "chebyshev_expand",
    "classify_order",
    "conjugate",
    "count_squares_mod",
    "dedekind_sum",
    "embed_complex",
    "eval_link",
    "eval_meridian",
    "f_link",
    "f_poly",
    "fullrank_submatrix",
    "g_pm",
    "gauss_closed_form",
    "gauss_sum",
    "hat_c",
    "interpolate_f",
    "jacobi_symbol",
    "kernel",
    "lambda_membership",
    "mod_inverse",
    "power_to_colored",
    "rademacher_phi",
    "rank",
    "recover_skein",
    "root_of_unity",
    "skein_add",
    "skein_make",
    "skein_scale",
    "sl2_expand",
]
