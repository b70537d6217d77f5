"""Sum-rank metric codes: LRS, LG, their pairing and minimum distances."""

from codes.hom import (
    BlockDomain,
    CodeBasis,
    HomTuple,
    ambient_basis,
    ambient_code,
    code_length,
    k_basis,
    quotient_domains,
    subspace_domains,
    sum_rank_distance,
    sum_rank_weight,
)
from codes.families import (
    PsiIsomorphism,
    goppa_multiplier,
    goppa_residue_operators,
    lg_basis,
    lrs_basis,
    lrs_encode,
    psi_setup,
)
from codes.distance import (
    DistanceEnumerator,
    min_distance,
    min_distance_async,
    sampled_weight_bound,
)
from codes.duality import (
    DualityReport,
    check_duality,
    dual_code,
    pair_words,
    paired_domains,
    pairing,
)

__all__ = [
    "BlockDomain",
    "CodeBasis",
    "HomTuple",
    "ambient_basis",
    "ambient_code",
    "code_length",
    "k_basis",
    "quotient_domains",
    "subspace_domains",
    "sum_rank_distance",
    "sum_rank_weight",
    "PsiIsomorphism",
    "goppa_multiplier",
    "goppa_residue_operators",
    "lg_basis",
    "lrs_basis",
    "lrs_encode",
    "psi_setup",
    "DistanceEnumerator",
    "min_distance",
    "min_distance_async",
    "sampled_weight_bound",
    "DualityReport",
    "check_duality",
    "dual_code",
    "pair_words",
    "paired_domains",
    "pairing",
]
