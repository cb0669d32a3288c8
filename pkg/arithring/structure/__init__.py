from ._basis import BasisFamily, ResidueNonzero, echelon_basis, express_in_basis
from ._decomposition import (
    CanonicalDecomposition,
    annihilates_squarefree_block,
    canonical_decompose,
    filtration_degree,
    in_Ik,
    nilpotency_index,
)
from ._endomorphism import GammaTable, apply_endomorphism
from ._kernel import regularity_kernel
from ._retract import retract_Q, retract_sqf
from ._transcript import (
    NonFinitenessTranscript,
    TranscriptRow,
    demo_not_finitely_generated,
)

__all__ = [
    "CanonicalDecomposition",
    "canonical_decompose",
    "filtration_degree",
    "in_Ik",
    "annihilates_squarefree_block",
    "nilpotency_index",
    "retract_sqf",
    "retract_Q",
    "GammaTable",
    "apply_endomorphism",
    "BasisFamily",
    "ResidueNonzero",
    "echelon_basis",
    "express_in_basis",
    "regularity_kernel",
    "NonFinitenessTranscript",
    "TranscriptRow",
    "demo_not_finitely_generated",
]
