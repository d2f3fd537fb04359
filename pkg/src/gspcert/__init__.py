"""Certify that the mod-p Galois representation attached to a genus-2
Siegel eigenform has full projective symplectic image PGSp(4, p).

The argument is a maximal-subgroup exclusion: six one-sided checks, each
ruling out one way the image could be smaller, each backed by exact
finite-field computations on the Frobenius characteristic polynomials.
"""
from .certifier import (
    Certificate,
    CheckResult,
    ExceptionalTable,
    VERDICT_INCONCLUSIVE,
    VERDICT_LARGE_IMAGE,
    builtin_exceptional_table,
    certify,
)
from .cli import DatasetError, RunConfig, ingest, render_json, render_text, run
from .eigen_data import (
    EigenformDataset,
    FrobeniusRecord,
    ResidualDataset,
    embedding_roots,
    hecke_charpoly,
    hecke_quartic,
    residual_roots,
    specialize,
    validate_similitude_shape,
)
from .finite_field import (
    FFElement,
    FieldSpec,
    frobenius,
    in_subfield,
    legendre,
    make_field,
    mult_order,
)
from .polynomial import (
    Factorization,
    Polynomial,
    conjugate_poly,
    factor,
    is_irreducible,
    is_squarefree,
    roots_in,
)
from .symplectic import (
    Matrix4,
    charpoly,
    companion,
    eigen_projective_order,
    matrix_order,
    projective_order,
    similitude,
    standard_form,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CheckResult",
    "DatasetError",
    "EigenformDataset",
    "ExceptionalTable",
    "FFElement",
    "Factorization",
    "FieldSpec",
    "FrobeniusRecord",
    "Matrix4",
    "Polynomial",
    "ResidualDataset",
    "RunConfig",
    "VERDICT_INCONCLUSIVE",
    "VERDICT_LARGE_IMAGE",
    "builtin_exceptional_table",
    "certify",
    "charpoly",
    "companion",
    "conjugate_poly",
    "eigen_projective_order",
    "embedding_roots",
    "factor",
    "frobenius",
    "hecke_charpoly",
    "hecke_quartic",
    "in_subfield",
    "ingest",
    "is_irreducible",
    "is_squarefree",
    "legendre",
    "make_field",
    "matrix_order",
    "mult_order",
    "projective_order",
    "render_json",
    "render_text",
    "residual_roots",
    "roots_in",
    "run",
    "similitude",
    "specialize",
    "standard_form",
    "validate_similitude_shape",
    "__version__",
]
