"""Exact-arithmetic laboratory for nested-floor identities of algebraic numbers.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from floorlab._core import (  # noqa: F401
    AlgebraicReal,
    certified_floor,
    check_condition,
    check_condition_pair,
    check_identity,
    construct_characteristic_alpha,
    detect_line_support,
    empirical_distribution,
    eval_bracket_chain,
    isolate_positive_roots,
    orbit,
    r_of,
    scan_identity,
    weyl_sum_linear,
    weyl_sum_power,
    __version__,
)

__all__ = [
    "AlgebraicReal",
    "certified_floor",
    "check_condition",
    "check_condition_pair",
    "check_identity",
    "construct_characteristic_alpha",
    "detect_line_support",
    "empirical_distribution",
    "eval_bracket_chain",
    "isolate_positive_roots",
    "orbit",
    "r_of",
    "scan_identity",
    "weyl_sum_linear",
    "weyl_sum_power",
    "__version__",
]
