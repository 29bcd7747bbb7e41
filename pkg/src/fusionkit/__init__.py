"""Exact adjoint fusion rules and fusion tadpoles for the simple Lie algebras."""

from .adjoint_rules import (
    F4_STRING_TABLE,
    G2_OFFDIAG_TABLE,
    FusionDecomposition,
    NontrivialCondition,
    decompose,
    decompose_tensor,
    diag_fusion,
    diag_tensor,
    nontrivial_conditions,
    offdiag_fast,
    offdiag_fusion,
    offdiag_tensor,
    reference_nontrivial_conditions,
)
from .algebra import AlgebraId, Root, RootSystem, build, parse_algebra
from .errors import (
    AlgebraMismatch,
    FusionError,
    InvalidRank,
    LevelMismatch,
    LevelTooSmall,
    NoClosedForm,
    NotARoot,
)
from .oracle import kac_walton_fusion, racah_speiser_tensor
from .tadpole import (
    B_TADPOLE_TABLE,
    PiecewisePolynomial,
    adjoint_tadpole_enum,
    adjoint_tadpole_formula,
    adjoint_tadpole_oracle,
    adjoint_tadpole_polynomial,
    branch_label,
    falling_power,
    polytope_sums,
    theta_plus_zero_enum,
    zero_tadpole_enum,
    zero_tadpole_formula,
    zero_tadpole_polynomial,
)
from .verify import VerifyReport, algebras_up_to, run_verify
from .weights import AffineWeight, affinize, enumerate_level, format_weight, parse_weight

__version__ = "0.1.0"

__all__ = [
    "AffineWeight",
    "AlgebraId",
    "AlgebraMismatch",
    "B_TADPOLE_TABLE",
    "F4_STRING_TABLE",
    "FusionDecomposition",
    "FusionError",
    "G2_OFFDIAG_TABLE",
    "InvalidRank",
    "LevelMismatch",
    "LevelTooSmall",
    "NoClosedForm",
    "NontrivialCondition",
    "NotARoot",
    "PiecewisePolynomial",
    "Root",
    "RootSystem",
    "VerifyReport",
    "adjoint_tadpole_enum",
    "adjoint_tadpole_formula",
    "adjoint_tadpole_oracle",
    "adjoint_tadpole_polynomial",
    "affinize",
    "algebras_up_to",
    "branch_label",
    "build",
    "decompose",
    "decompose_tensor",
    "diag_fusion",
    "diag_tensor",
    "enumerate_level",
    "falling_power",
    "format_weight",
    "kac_walton_fusion",
    "nontrivial_conditions",
    "offdiag_fast",
    "offdiag_fusion",
    "offdiag_tensor",
    "parse_algebra",
    "parse_weight",
    "polytope_sums",
    "racah_speiser_tensor",
    "reference_nontrivial_conditions",
    "run_verify",
    "theta_plus_zero_enum",
    "zero_tadpole_enum",
    "zero_tadpole_formula",
    "zero_tadpole_polynomial",
]
