"""Exact Hankel determinants of three-step lattice-path generating functions."""

from .ring import LaurentPoly, NonExactDivision, NonInvertiblePoint, PolyMatrix, QuadElem
from .paths import (
    NegativeHeight,
    Point,
    gf_dp,
    gf_restricted,
    gf_restricted_reflection,
    gf_unrestricted,
    prefix_gf,
    spec_point_values,
    spec_prefix_int,
)
from .hankel import (
    DimensionTooLarge,
    HankelSpec,
    build_hankel,
    det_bareiss,
    det_bareiss_int,
    det_cofactor,
    hankel_transform,
)
from .closedform import (
    CaseTableMismatch,
    ClosedFormCase,
    CorollaryId,
    TheoremId,
    corollary_lhs_entry,
    corollary_rhs,
    geom_quotient,
    theorem_rhs,
)
from .hypergeom import HyperSeries, LowerParamZeroDivision, eval_terminating, pochhammer

__version__ = "0.1.0"
