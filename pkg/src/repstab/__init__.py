"""Exact computations around symmetric-group characters in cycle-count variables.

The package computes irreducible characters of symmetric groups, the
character polynomials expressing them in the cycle-count statistics
X_1, X_2, ..., horizontal-strip decompositions of induced families, and
empirical certification of the two stability ranks of a family of
symmetric-group modules: representation stability and character
polynomiality.  All arithmetic is exact (integers and rationals).
"""

from .characters import ClassFunction, IrrDecomposition, decompose, inner_product, irr_char
from .cyclepoly import CharPolynomial, X, eval_rho, eval_rho_all, parse_poly
from .fbmodules import (
    CycleModule,
    DirectSum,
    Projective,
    Tensor,
    Truncate,
    VFamily,
    WeightTruncateGT,
    WeightTruncateLE,
    character_at,
    cycle_poly,
    parse_spec,
    terms_at,
)
from .frobenius import frobenius_poly, frobenius_poly_of_module, frobenius_poly_stable
from .partitions import CycleType, Partition, class_size, cycle_types_of, partitions_of
from .pieri import pieri_expand, projective_terms
from .stability import (
    StabilityReport,
    rank_pc_estimate,
    rank_rs_estimate,
    verify_equivalence,
)

__all__ = [
    "CharPolynomial",
    "ClassFunction",
    "CycleModule",
    "CycleType",
    "DirectSum",
    "IrrDecomposition",
    "Partition",
    "Projective",
    "StabilityReport",
    "Tensor",
    "Truncate",
    "VFamily",
    "WeightTruncateGT",
    "WeightTruncateLE",
    "X",
    "character_at",
    "class_size",
    "cycle_poly",
    "cycle_types_of",
    "decompose",
    "eval_rho",
    "eval_rho_all",
    "frobenius_poly",
    "frobenius_poly_of_module",
    "frobenius_poly_stable",
    "inner_product",
    "irr_char",
    "parse_poly",
    "parse_spec",
    "partitions_of",
    "pieri_expand",
    "projective_terms",
    "rank_pc_estimate",
    "rank_rs_estimate",
    "terms_at",
    "verify_equivalence",
]

__version__ = "0.1.0"
