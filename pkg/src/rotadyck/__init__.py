"""Rota-Baxter systems, double homothetisms and Dyck^m-algebras.

Everything is computed exactly over Q or a prime field F_p.
"""

from .algebra import (
    Algebra,
    Element,
    LinOp,
    apply,
    check_associative,
    compose,
    find_unit,
    identity_op,
    multiply,
    zero_op,
)
from .dyck import (
    DyckAlgebra,
    axiom_ids,
    build_dyck,
    check_dyck_axioms,
    check_theorem_proof_identities,
    dyck_multiply,
)
from .errors import (
    AlgebraError,
    AlgebraMismatch,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    IndexOutOfRange,
    InvalidInput,
    NoRootsInField,
    NotAssociative,
    SpaceTooLarge,
    UnsupportedLevel,
)
from .field import GF, Field, Q, Scalar, scalar_arith, sqrt
from .homothetism import (
    DoubleOperator,
    HomotheticRBSystem,
    check_bimultiplication,
    check_homothetic,
    check_homothetic_compat,
    check_self_permutable,
    gamma_from_weights,
    inner_homothetism,
    scalar_homothetism,
    zero_homothetism,
)
from .report import CheckReport, Violation
from .rota_baxter import (
    GeneralizedRBOperator,
    NijenhuisEmbedding,
    RBSystem,
    SplitSystem,
    WeightedRBOperator,
    build_nijenhuis_matrix,
    build_triple_algebra,
    check_generalized_rb,
    check_nijenhuis,
    check_rb_system,
    check_rb_weight,
    from_generalized,
    from_weighted,
    nijenhuis_embedding,
    weight_splittings,
)
from .search import SearchResult, SearchSpec, Target, cross_validate, enumerate_space
from .serialize import Workspace

__all__ = [
    "Algebra",
    "AlgebraError",
    "AlgebraMismatch",
    "CheckReport",
    "DimensionMismatch",
    "DivisionByZero",
    "DoubleOperator",
    "DyckAlgebra",
    "Element",
    "Field",
    "FieldMismatch",
    "GF",
    "GeneralizedRBOperator",
    "HomotheticRBSystem",
    "IndexOutOfRange",
    "InvalidInput",
    "LinOp",
    "NijenhuisEmbedding",
    "NoRootsInField",
    "NotAssociative",
    "Q",
    "RBSystem",
    "Scalar",
    "SearchResult",
    "SearchSpec",
    "SpaceTooLarge",
    "SplitSystem",
    "Target",
    "UnsupportedLevel",
    "Violation",
    "WeightedRBOperator",
    "Workspace",
    "apply",
    "axiom_ids",
    "build_dyck",
    "build_nijenhuis_matrix",
    "build_triple_algebra",
    "check_associative",
    "check_bimultiplication",
    "check_dyck_axioms",
    "check_generalized_rb",
    "check_homothetic",
    "check_homothetic_compat",
    "check_nijenhuis",
    "check_rb_system",
    "check_rb_weight",
    "check_self_permutable",
    "check_theorem_proof_identities",
    "compose",
    "cross_validate",
    "dyck_multiply",
    "enumerate_space",
    "find_unit",
    "from_generalized",
    "from_weighted",
    "gamma_from_weights",
    "identity_op",
    "inner_homothetism",
    "multiply",
    "nijenhuis_embedding",
    "scalar_arith",
    "scalar_homothetism",
    "sqrt",
    "weight_splittings",
    "zero_homothetism",
    "zero_op",
]

__version__ = "0.1.0"
