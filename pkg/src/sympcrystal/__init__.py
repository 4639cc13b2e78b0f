"""Symplectic crystal combinatorics: King tableaux, oscillating tableaux,
column insertion, and the bijections and characters connecting them."""

from .tableaux import (
    KingTableau,
    Tableau,
    conjugate,
    enumerate_king,
    king_from_text,
    king_to_text,
    king_weight,
    partitions_in_box,
    partitions_of,
    rect_complement,
    weight_to_partition,
)
from .rsk import (
    c_index,
    enumerate_admissible,
    is_admissible,
    matrix,
    parse_matrix,
    format_matrix,
    rsk_column,
    rsk_column_inverse,
    rsk_row,
)
from .oscillating import OscStrip, SSOT, enumerate_ssot, ssot_from_text, ssot_to_text
from .bijections import phi, phi_inverse, psi, psi_inverse
from .crystal import (
    CrystalGraph,
    KingCrystal,
    MatrixCrystal,
    SsotCrystal,
    crystal_graph,
    decompose,
    matrix_lower,
    matrix_raise,
    ssot_lower,
    ssot_raise,
    ssot_stats,
)
from .characters import (
    LaurentCharacter,
    conjecture_verify,
    decompose_sp,
    dual_pieri_count,
    king_character,
    schur_eval,
    sundaram_h_count,
    weyl_character,
    weyl_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "KingTableau",
    "Tableau",
    "conjugate",
    "enumerate_king",
    "king_from_text",
    "king_to_text",
    "king_weight",
    "partitions_in_box",
    "partitions_of",
    "rect_complement",
    "weight_to_partition",
    "c_index",
    "enumerate_admissible",
    "is_admissible",
    "matrix",
    "parse_matrix",
    "format_matrix",
    "rsk_column",
    "rsk_column_inverse",
    "rsk_row",
    "OscStrip",
    "SSOT",
    "enumerate_ssot",
    "ssot_from_text",
    "ssot_to_text",
    "phi",
    "phi_inverse",
    "psi",
    "psi_inverse",
    "CrystalGraph",
    "KingCrystal",
    "MatrixCrystal",
    "SsotCrystal",
    "crystal_graph",
    "decompose",
    "matrix_lower",
    "matrix_raise",
    "ssot_lower",
    "ssot_raise",
    "ssot_stats",
    "LaurentCharacter",
    "conjecture_verify",
    "decompose_sp",
    "dual_pieri_count",
    "king_character",
    "schur_eval",
    "sundaram_h_count",
    "weyl_character",
    "weyl_dimension",
]
