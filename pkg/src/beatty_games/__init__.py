"""Exact-arithmetic engine for 2-pile subtraction games with Beatty P-positions."""

from .quadfield import (
    BeattyPair,
    QuadraticNumber,
    Trichotomy,
    beatty_floor,
    beatty_membership,
    conjugate_beatty,
    delta2,
    fractional_part,
    rayleigh_verify,
    solve_unit_combination,
    trichotomy_class,
)
from .games import (
    BeattyDelta,
    Constant,
    ConstraintSpec,
    ExplicitTable,
    Family,
    ParityHalf,
    Position,
    RuleSet,
    TargetBeatty,
    canonical,
    eval_constraint,
    is_legal_move,
    legal_moves,
    ruleset_from_json,
    ruleset_to_json,
)
from .solver import (
    GapReport,
    HypothesisError,
    PTable,
    TableSource,
    compare_tables,
    detect_gap,
    mex,
    oracle_table,
    recurrence_closed,
    reconstruct_constraint,
    retrograde_oracle,
    solve_doublemex,
    solve_relaxed,
)
from .classifier import (
    ClassificationResult,
    FamilyLabel,
    classify_alpha,
    delta2_range,
    enumerate_families,
    family_ii_alpha,
    family_iii_alpha,
    golden_alpha,
    inverse_solve,
)

__all__ = [
    "BeattyDelta",
    "BeattyPair",
    "ClassificationResult",
    "Constant",
    "ConstraintSpec",
    "ExplicitTable",
    "Family",
    "FamilyLabel",
    "GapReport",
    "HypothesisError",
    "PTable",
    "ParityHalf",
    "Position",
    "QuadraticNumber",
    "RuleSet",
    "TableSource",
    "TargetBeatty",
    "Trichotomy",
    "beatty_floor",
    "beatty_membership",
    "canonical",
    "classify_alpha",
    "compare_tables",
    "conjugate_beatty",
    "delta2",
    "delta2_range",
    "detect_gap",
    "enumerate_families",
    "eval_constraint",
    "family_ii_alpha",
    "family_iii_alpha",
    "fractional_part",
    "golden_alpha",
    "inverse_solve",
    "is_legal_move",
    "legal_moves",
    "mex",
    "oracle_table",
    "rayleigh_verify",
    "reconstruct_constraint",
    "recurrence_closed",
    "retrograde_oracle",
    "ruleset_from_json",
    "ruleset_to_json",
    "solve_doublemex",
    "solve_relaxed",
    "solve_unit_combination",
    "trichotomy_class",
]

__version__ = "0.1.0"
