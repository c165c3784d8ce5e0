"""Season aggregates per batter with posterior uncertainty.

Per-pitch runs added is the swing edge signed by the actual decision (the
gap between the chosen branch and the alternative); runs lost accumulates
only the negative part, reported as a nonnegative magnitude.
"""

from dataclasses import dataclass

import numpy as np

from ..util import credible_interval
from .panels import PanelDecomposition, decompose_panels


def proportion_optimal(diff_draws: np.ndarray, actual_swing: np.ndarray) -> np.ndarray:
    """Per-draw share of pitches whose actual decision matches that draw's sign."""
    diff_draws = np.asarray(diff_draws, dtype=np.float64)
    actual_swing = np.asarray(actual_swing, dtype=bool)
    if diff_draws.shape[0] == 0:
        raise ValueError("no pitches to evaluate")
    optimal_swing = diff_draws > 0.0  # ties favor take
    agree = optimal_swing == actual_swing[:, None]
    return agree.mean(axis=0)


def runs_added(diff_draws: np.ndarray, actual_swing: np.ndarray) -> np.ndarray:
    """Per-draw season total of the signed swing edge."""
    diff_draws = np.asarray(diff_draws, dtype=np.float64)
    signs = np.where(np.asarray(actual_swing, dtype=bool), 1.0, -1.0)
    return (signs[:, None] * diff_draws).sum(axis=0)


def runs_lost(diff_draws: np.ndarray, actual_swing: np.ndarray) -> np.ndarray:
    """Per-draw season total of foregone runs, >= 0 in every draw."""
    diff_draws = np.asarray(diff_draws, dtype=np.float64)
    signs = np.where(np.asarray(actual_swing, dtype=bool), 1.0, -1.0)
    per_pitch = signs[:, None] * diff_draws
    return np.maximum(0.0, -per_pitch).sum(axis=0)


@dataclass
class MetricSummary:
    mean: float
    lo: float
    hi: float
    draws: np.ndarray

    @classmethod
    def from_draws(cls, draws: np.ndarray, level: float = 0.90) -> "MetricSummary":
        lo, hi = credible_interval(draws, level)
        return cls(float(np.mean(draws)), lo, hi, np.asarray(draws))


@dataclass
class BatterReport:
    batter_id: str
    n_pitches: int
    proportion_optimal: MetricSummary
    runs_added: MetricSummary
    runs_lost: MetricSummary
    panels: PanelDecomposition
    traditional_correct: float | None = None
    o_swing_pct: float | None = None
    z_swing_pct: float | None = None

    def runs_added_per_pitch(self) -> float:
        return self.runs_added.mean / self.n_pitches

    def runs_lost_per_pitch(self) -> float:
        return self.runs_lost.mean / self.n_pitches


def batter_report(batter_id: str, diff_draws: np.ndarray, actual_swing: np.ndarray,
                  level: float = 0.90) -> BatterReport:
    if diff_draws.shape[0] == 0:
        raise ValueError(f"batter {batter_id}: no scored pitches")
    return BatterReport(
        batter_id=batter_id,
        n_pitches=diff_draws.shape[0],
        proportion_optimal=MetricSummary.from_draws(
            proportion_optimal(diff_draws, actual_swing), level),
        runs_added=MetricSummary.from_draws(runs_added(diff_draws, actual_swing), level),
        runs_lost=MetricSummary.from_draws(runs_lost(diff_draws, actual_swing), level),
        panels=decompose_panels(diff_draws, actual_swing),
    )
