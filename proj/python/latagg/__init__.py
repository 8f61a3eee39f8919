"""Finite bounded lattices: tolerances, polynomials and aggregation functions.

The compiled core carries the implementation; this package only re-exports it.
"""

from ._latagg import (
    BoundExceededError,
    DecisionReport,
    InputError,
    InternalInconsistencyError,
    Lattice,
    builtin,
    census_lines,
    chi_table,
    decide,
    enumerate_lattices,
    enumerate_unary_aggregations,
    evaluate,
    is_aggregation_polynomial,
    profile,
    random_aggregation,
    represent,
    synthesize_chi,
    tolerances,
)

__all__ = [
    "BoundExceededError",
    "DecisionReport",
    "InputError",
    "InternalInconsistencyError",
    "Lattice",
    "builtin",
    "census_lines",
    "chi_table",
    "decide",
    "enumerate_lattices",
    "enumerate_unary_aggregations",
    "evaluate",
    "is_aggregation_polynomial",
    "profile",
    "random_aggregation",
    "represent",
    "synthesize_chi",
    "tolerances",
]
