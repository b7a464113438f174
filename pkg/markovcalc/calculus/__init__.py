"""Derivative engine and classifier for interval functions."""

from .classifier import (
    Case,
    ClassificationReport,
    ScanReport,
    Witness,
    check_dpm,
    classify,
    scan_points,
    verify_corollary_ufa,
    verify_theorem2,
)
from .convergence import Verdict
from .derivative import (
    DerivativeResult,
    OneSidedDerivatives,
    ScalarDerivative,
    difference_quotient,
    is_continuous_at,
    markov_derivative,
    one_sided_all,
    one_sided_markov_derivative,
    one_sided_scalar_derivative,
)
from .ladder import Flavor, LadderConfig, Mode, Side, ladder_points
from .witness import (
    LinearRelationWitness,
    check_linear_relation,
    explain_linear_relation,
    load_witness,
    parse_witness,
)

__all__ = [
    "Case",
    "ClassificationReport",
    "DerivativeResult",
    "Flavor",
    "LadderConfig",
    "LinearRelationWitness",
    "Mode",
    "OneSidedDerivatives",
    "ScalarDerivative",
    "ScanReport",
    "Side",
    "Verdict",
    "Witness",
    "check_dpm",
    "check_linear_relation",
    "classify",
    "difference_quotient",
    "explain_linear_relation",
    "is_continuous_at",
    "ladder_points",
    "load_witness",
    "markov_derivative",
    "one_sided_all",
    "one_sided_markov_derivative",
    "one_sided_scalar_derivative",
    "parse_witness",
    "scan_points",
    "verify_corollary_ufa",
    "verify_theorem2",
]
