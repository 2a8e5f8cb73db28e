"""Reductive pairs: symbolic descriptions, placements, and the catalogue."""

from liecx.pairs.recipes import PairError, alg_dim, alg_rank, realize_ambient
from liecx.pairs.registry import (
    TableEntry,
    admissible_tuples,
    expected_rank,
    expected_ssgp,
    get_entry,
    get_registry,
    registry_load,
)
from liecx.pairs.spec import (
    CenterSpec,
    EmbeddingRecipe,
    PairSpec,
    PartSpec,
    RealizedPair,
    SaturationResult,
    couple,
    couplings,
    decompose,
    instantiate,
    saturate,
)

__all__ = [
    "CenterSpec",
    "EmbeddingRecipe",
    "PairError",
    "PairSpec",
    "PartSpec",
    "RealizedPair",
    "SaturationResult",
    "TableEntry",
    "admissible_tuples",
    "alg_dim",
    "alg_rank",
    "couple",
    "couplings",
    "decompose",
    "expected_rank",
    "expected_ssgp",
    "get_entry",
    "get_registry",
    "instantiate",
    "realize_ambient",
    "registry_load",
    "saturate",
]
