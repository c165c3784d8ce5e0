"""Per-pitch decision posteriors from the three component models."""

from .compose import (
    SWING,
    TAKE,
    BranchDraws,
    DecisionSummary,
    branch_expectations,
    ev_diff,
    summarize_decision,
)
from .score import component_means, score_pitches

__all__ = [
    "BranchDraws",
    "DecisionSummary",
    "SWING",
    "TAKE",
    "branch_expectations",
    "component_means",
    "ev_diff",
    "score_pitches",
    "summarize_decision",
]
