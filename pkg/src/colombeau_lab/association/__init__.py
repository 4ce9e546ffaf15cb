"""Pairings, singular products, association extraction and closed-form oracles."""
from .extraction import (
    AssociationEstimate,
    DivergenceReport,
    ScheduleError,
    association_check,
    embedding_divergence,
    extract,
    jet_matrix,
    linear_fit,
)
from .identities import IdentityReport, identity_suite
from .oracles import (
    OracleInapplicable,
    OracleResult,
    corollary_via_parts,
    oracle_classical,
    oracle_corollary,
    oracle_prior,
    oracle_thm1,
    oracle_thm2,
)
from .pairing import pair, product_net, product_pairing
from .testfunctions import (
    DEFAULT_SCHEDULE,
    SigmaSchedule,
    TestFunction,
    plateau,
    plateau_test,
    polynomial_test,
)

__all__ = [
    "AssociationEstimate",
    "DEFAULT_SCHEDULE",
    "DivergenceReport",
    "IdentityReport",
    "OracleInapplicable",
    "OracleResult",
    "ScheduleError",
    "SigmaSchedule",
    "TestFunction",
    "association_check",
    "corollary_via_parts",
    "embedding_divergence",
    "extract",
    "identity_suite",
    "jet_matrix",
    "linear_fit",
    "oracle_classical",
    "oracle_corollary",
    "oracle_prior",
    "oracle_thm1",
    "oracle_thm2",
    "pair",
    "plateau",
    "plateau_test",
    "polynomial_test",
    "product_net",
    "product_pairing",
]
