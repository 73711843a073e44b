"""Exact unknotting obstructions from positive-definite Goeritz forms."""

from .corrections import (
    AbelianGroup,
    CorrectionTable,
    correction_table,
    table_fingerprint,
    transport_table,
)
from .enumeration import (
    enumerate_rank2,
    enumerate_rank_r_superset,
    filter_by_group,
    triple_form,
)
from .goeritz import (
    KnotProblem,
    WhiteGraph,
    goeritz_from_white_graph,
    minus_continued_fraction,
    normalize_two_bridge,
    two_bridge_goeritz,
    validate_problem,
)
from .intmat import IntMatrix, det_exact, quadratic_value, smith_normal_form
from .obstruction import (
    Certificate,
    Isomorphism,
    ObstructionReport,
    check_candidate,
    enumerate_isomorphisms,
    problem_candidates,
    verdict,
)
from .quadforms import FormCandidate, diag_mod4_census, lift_tilde, reduce_basis

__all__ = [
    "AbelianGroup",
    "Certificate",
    "CorrectionTable",
    "FormCandidate",
    "IntMatrix",
    "Isomorphism",
    "KnotProblem",
    "ObstructionReport",
    "WhiteGraph",
    "check_candidate",
    "correction_table",
    "det_exact",
    "diag_mod4_census",
    "enumerate_isomorphisms",
    "enumerate_rank2",
    "enumerate_rank_r_superset",
    "filter_by_group",
    "goeritz_from_white_graph",
    "lift_tilde",
    "minus_continued_fraction",
    "normalize_two_bridge",
    "problem_candidates",
    "quadratic_value",
    "reduce_basis",
    "smith_normal_form",
    "table_fingerprint",
    "transport_table",
    "triple_form",
    "two_bridge_goeritz",
    "validate_problem",
    "verdict",
]
