"""Complexity and rank of reductive pairs: orbit oracle, formula pipeline, reductions."""

from liecx.complexity.ops import (
    ComplexityError,
    ComplexityReport,
    SsgpResult,
    complexity_formula,
    complexity_levi,
    complexity_oracle,
    isotropy_ssgp,
    nonsaturated_complexity_one,
    p_subalgebra,
    reduce_center,
    reductive_rank,
)

__all__ = [
    "ComplexityError",
    "ComplexityReport",
    "SsgpResult",
    "complexity_formula",
    "complexity_levi",
    "complexity_oracle",
    "isotropy_ssgp",
    "nonsaturated_complexity_one",
    "p_subalgebra",
    "reduce_center",
    "reductive_rank",
]
