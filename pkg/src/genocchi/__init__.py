"""Median Genocchi numbers, their q-analogues, and cross-verification of
every independent route the literature provides for them: the Seidel
triangle, Dellac configurations, admissible subset sequences, permutation
and triangle-pair oracles, Motzkin path sums, continued fractions, and the
Han-Zeng recurrence.  All arithmetic is exact."""

from .errors import (
    InexactDivisionError,
    InternalInconsistencyError,
    ResourceLimitError,
)
from .exactalg import (
    BivarPoly,
    IntPoly,
    LaurentPoly,
    PowerSeries,
    bivar_exact_div_by_unit_const,
    poly_exact_div,
    poly_reverse,
    q_binomial,
    q_factorial,
    q_int,
)
from .seidel import (
    SeidelTriangle,
    build_triangle,
    genocchi_first,
    h_sequence,
    median_genocchi,
    normalized_h,
)
from .dellac import DellacConfig, dellac_length, enumerate_dellac, h_poly_dellac
from .admissible import (
    AdmissibleSequence,
    GammaGraph,
    count_closed_column_graded,
    enumerate_admissible,
    is_closed_in_gamma,
)
from .oracles import TrianglePair, count_dumont, count_triangle_pairs
from .motzkin import (
    MotzkinPath,
    WeightSystem,
    enumerate_motzkin,
    h_motzkin_rational,
    h_poly_fermionic,
    h_poly_laurent,
    tilde_h,
    weighted_path_sum,
)
from .contfrac import (
    AffineSFraction,
    JFraction,
    SFraction,
    contract_S_to_J,
    contract_S_to_J_affine,
    expand,
    tilde_h_series,
)
from .hanzeng import hanzeng_C, hanzeng_barc, substitute_x
from .verify import CheckReport, CheckResult, crosscheck

__version__ = "1.0.0"

__all__ = [
    "AdmissibleSequence",
    "AffineSFraction",
    "BivarPoly",
    "CheckReport",
    "CheckResult",
    "DellacConfig",
    "GammaGraph",
    "IntPoly",
    "InexactDivisionError",
    "InternalInconsistencyError",
    "JFraction",
    "LaurentPoly",
    "MotzkinPath",
    "PowerSeries",
    "ResourceLimitError",
    "SFraction",
    "SeidelTriangle",
    "TrianglePair",
    "WeightSystem",
    "bivar_exact_div_by_unit_const",
    "build_triangle",
    "contract_S_to_J",
    "contract_S_to_J_affine",
    "count_closed_column_graded",
    "count_dumont",
    "count_triangle_pairs",
    "crosscheck",
    "dellac_length",
    "enumerate_admissible",
    "enumerate_dellac",
    "enumerate_motzkin",
    "expand",
    "genocchi_first",
    "h_motzkin_rational",
    "h_poly_dellac",
    "h_poly_fermionic",
    "h_poly_laurent",
    "h_sequence",
    "hanzeng_C",
    "hanzeng_barc",
    "is_closed_in_gamma",
    "median_genocchi",
    "normalized_h",
    "poly_exact_div",
    "poly_reverse",
    "q_binomial",
    "q_factorial",
    "q_int",
    "substitute_x",
    "tilde_h",
    "tilde_h_series",
    "weighted_path_sum",
]
