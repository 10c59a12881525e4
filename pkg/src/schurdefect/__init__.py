"""Exact-arithmetic toolkit for nilpotent Lie algebra invariants and the
Schur defect t(L) = d(L/Z(L)) * dim L^2 - dim L/Z(L)."""

from .algebra import (
    Homomorphism,
    LieAlgebra,
    adjoint_matrix,
    bracket,
    change_basis,
    check_jacobi,
    direct_sum,
    new_algebra,
    product_subspace,
    quotient,
)
from .catalog import (
    CatalogEntry,
    abelian,
    filiform,
    get,
    heisenberg,
    list_all,
)
from .census import (
    CensusRow,
    CensusSummary,
    algebra_from_tensor,
    decode_tensor,
    encode_tensor,
    enumerate_algebras,
    verify_bounds,
)
from .classify import (
    ClassificationResult,
    classify_t012,
    recognize_heisenberg,
    stem_decomposition,
)
from .fields import GF, QQ, Field, PrimeField, RationalField
from .invariants import (
    InvariantReport,
    center,
    centralizer,
    derived_subalgebra,
    is_nilpotent,
    lower_central_series,
    min_generators,
    moneyhun_check,
    nilpotency_class,
    report,
    second_center,
    t_invariant,
    upper_central_series,
)
from .linalg import (
    Matrix,
    Subspace,
    complement,
    kernel,
    preimage,
    rref,
    subspace_intersect,
    subspace_sum,
)
from .serialize import algebra_to_document, document_to_algebra, dumps, loads

__all__ = [
    "CatalogEntry", "CensusRow", "CensusSummary", "ClassificationResult",
    "Field", "GF", "Homomorphism", "InvariantReport", "LieAlgebra", "Matrix",
    "PrimeField", "QQ", "RationalField", "Subspace", "abelian",
    "adjoint_matrix", "algebra_from_tensor", "algebra_to_document", "bracket",
    "center", "centralizer", "change_basis", "check_jacobi", "classify_t012",
    "complement", "decode_tensor", "derived_subalgebra", "direct_sum",
    "document_to_algebra", "dumps", "encode_tensor", "enumerate_algebras",
    "filiform", "get", "heisenberg", "is_nilpotent", "kernel", "list_all",
    "loads", "lower_central_series", "min_generators", "moneyhun_check",
    "new_algebra", "nilpotency_class", "preimage", "product_subspace",
    "quotient", "recognize_heisenberg", "report", "rref", "second_center",
    "stem_decomposition", "subspace_intersect", "subspace_sum", "t_invariant",
    "upper_central_series", "verify_bounds",
]

__version__ = "0.1.0"
