"""Cocyclic matrices over dihedral groups, embedded large-determinant
submatrices, and complete-pivoting analysis, all in exact arithmetic."""

from .cocycle import (
    CocycleSpec,
    assemble,
    beta1_matrix,
    beta2_matrix,
    coboundary_matrix,
    gamma_matrix,
    verify_cocycle,
)
from .dihedral import DihedralGroup, embed_subgroup
from .pivots import (
    PivotReport,
    cp_transform,
    embedded_minor_value,
    extension_maxdet_check,
    ge_complete_pivoting,
    growth_factor,
    is_cp,
    pivots_from_minors,
)
from .restriction import extension_family, restrict_matrix, restrict_spec
from .search import (
    SpectrumRecord,
    embed_search,
    enumerate_hadamard,
    spectrum,
    spectrum_via_embedding,
)
from .signmatrix import (
    SignMatrix,
    determinant,
    efficiency,
    gram_rows,
    gram_rows_cocyclic,
    hadamard_test,
    principal_minors,
    row_excess,
)

__version__ = "0.1.0"
