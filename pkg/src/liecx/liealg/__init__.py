"""Exact models of reductive Lie algebras and the subspace operations on them."""

from liecx.liealg.embed import (
    Hom,
    automorphism_from_node_map,
    embed_subalgebra,
    fixed_subspace,
    hom_from_chevalley_images,
    subalgebra_generators,
)
from liecx.liealg.linalg import RankKernel, kernel_exact, rank_exact
from liecx.liealg.models import LieAlgebraModel, ModelError, build_model, classical_model
from liecx.liealg.ops import (
    SubspaceBasis,
    borel_basis,
    bracket_kernel,
    intersect,
    is_subalgebra,
    killing_complement,
    random_group_conjugate,
    span_of_indices,
    subspace_sum_dim,
)
from liecx.liealg.rng import SplitMix64

__all__ = [
    "Hom",
    "LieAlgebraModel",
    "ModelError",
    "RankKernel",
    "SplitMix64",
    "SubspaceBasis",
    "automorphism_from_node_map",
    "borel_basis",
    "bracket_kernel",
    "build_model",
    "classical_model",
    "embed_subalgebra",
    "fixed_subspace",
    "hom_from_chevalley_images",
    "intersect",
    "is_subalgebra",
    "kernel_exact",
    "killing_complement",
    "random_group_conjugate",
    "rank_exact",
    "span_of_indices",
    "subspace_sum_dim",
]
