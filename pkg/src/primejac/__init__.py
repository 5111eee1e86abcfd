"""primejac: exact arithmetic for order-p automorphisms of principally
polarized abelian varieties.

Decides which eigenvalue-multiplicity profiles can come from Jacobians,
constructs superelliptic curve models realizing the feasible ones, and
verifies every identity involved (convolution criterion, holomorphic
fixed-point formula, Riemann-Hurwitz counts, the closed-form p=3 catalog)
in exact rational / cyclotomic arithmetic.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .admissible import (
    MultiplicityProfile,
    ProblemInstance,
    enumerate_admissible,
    is_admissible,
    validate_instance,
)
from .catalog import (
    ClassificationReport,
    P3CatalogRow,
    ReportRow,
    cross_check_p3,
    full_report,
    p3_catalog,
    report_to_csv,
    report_to_json,
    report_to_table,
)
from .curves import (
    BranchPoint,
    CurveModel,
    FixedPointRecord,
    build_curve,
    differential_multiplicities,
    fixed_points,
)
from .cyclotomic import (
    CyclotomicNumber,
    as_rational,
    format_rational,
    inv_one_minus_zeta,
    is_odd_prime,
    parse_rational,
    zeta_pow,
)
from .errors import InternalInvariantError, InvalidInputError, NotApplicableError
from .groupfun import (
    GFun,
    UnitModP,
    conv_by_j_matrix,
    convolve,
    even_part,
    j0_fun,
    j_fun,
    kernel_basis,
    negate_arg,
    odd_part,
)
from .lefschetz import LefschetzReport, identity_suite, lefschetz_check, trace_tau
from .realizability import (
    BranchProfile,
    RealizabilityVerdict,
    a_from_b,
    brute_force_b,
    classify,
    divisibility_propagates,
    odd_uniqueness_check,
    solve_b,
)

__version__ = "1.0.0"

__all__ = [
    "KERNEL_BACKEND",
    "MultiplicityProfile",
    "ProblemInstance",
    "enumerate_admissible",
    "is_admissible",
    "validate_instance",
    "ClassificationReport",
    "P3CatalogRow",
    "ReportRow",
    "cross_check_p3",
    "full_report",
    "p3_catalog",
    "report_to_csv",
    "report_to_json",
    "report_to_table",
    "BranchPoint",
    "CurveModel",
    "FixedPointRecord",
    "build_curve",
    "differential_multiplicities",
    "fixed_points",
    "CyclotomicNumber",
    "as_rational",
    "format_rational",
    "inv_one_minus_zeta",
    "is_odd_prime",
    "parse_rational",
    "zeta_pow",
    "InternalInvariantError",
    "InvalidInputError",
    "NotApplicableError",
    "GFun",
    "UnitModP",
    "conv_by_j_matrix",
    "convolve",
    "even_part",
    "j0_fun",
    "j_fun",
    "kernel_basis",
    "negate_arg",
    "odd_part",
    "LefschetzReport",
    "identity_suite",
    "lefschetz_check",
    "trace_tau",
    "BranchProfile",
    "RealizabilityVerdict",
    "a_from_b",
    "brute_force_b",
    "classify",
    "divisibility_propagates",
    "odd_uniqueness_check",
    "solve_b",
]
