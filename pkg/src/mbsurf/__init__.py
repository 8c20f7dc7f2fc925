"""Exact-arithmetic embeddability toolkit for multibranched surfaces."""

from .surfaces import (
    MultibranchedSurface,
    Sector,
    SurfaceFormatError,
    XgFamily,
    is_regular,
    make_xg,
    parse_surface,
    serialize_surface,
)
from .homology import (
    AbelianGroup,
    IntegerMatrix,
    h1_formula,
    homology_h1,
    invariant_factors,
    presentation_matrix,
    smith_normal_form,
)
from .embedding import (
    BraidWord,
    EmbeddingCertificate,
    LinkingMatrix,
    ObstructionReport,
    ObstructionVerdict,
    construct_certificate,
    coprime_split,
    lemma_witness,
    linking_matrix_of_braid,
    parse_braid_word,
    pure_braid_word,
    s3_obstruction,
    witness_sums,
)
from .genus0 import (
    AssignmentDecision,
    Case1Witness,
    Case2Hit,
    DivisorExhaustion,
    Genus0Decision,
    Genus0Verdict,
    Slope,
    WitnessSlopes,
    case1_bruteforce,
    case1_decide,
    case2_decide,
    genus0_report,
    slopes_from_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AssignmentDecision",
    "BraidWord",
    "Case1Witness",
    "Case2Hit",
    "DivisorExhaustion",
    "EmbeddingCertificate",
    "Genus0Decision",
    "Genus0Verdict",
    "IntegerMatrix",
    "LinkingMatrix",
    "MultibranchedSurface",
    "ObstructionReport",
    "ObstructionVerdict",
    "Sector",
    "Slope",
    "SurfaceFormatError",
    "WitnessSlopes",
    "XgFamily",
    "case1_bruteforce",
    "case1_decide",
    "case2_decide",
    "construct_certificate",
    "coprime_split",
    "genus0_report",
    "h1_formula",
    "homology_h1",
    "invariant_factors",
    "is_regular",
    "lemma_witness",
    "linking_matrix_of_braid",
    "make_xg",
    "parse_braid_word",
    "parse_surface",
    "presentation_matrix",
    "pure_braid_word",
    "s3_obstruction",
    "serialize_surface",
    "slopes_from_witness",
    "smith_normal_form",
    "witness_sums",
]
