"""Composing outcome-model draws into swing/take expectations.

Draw j of each component model is paired with draw j of the others; the
models are fit on disjoint data, so posteriors are independent and any
deterministic pairing is valid.
"""

from dataclasses import dataclass

import numpy as np

from ..util import credible_interval

SWING = "swing"
TAKE = "take"


@dataclass
class BranchDraws:
    """Aligned posterior draws for the four pitch outcomes."""

    p_contact: np.ndarray
    p_strike: np.ndarray
    xr_contact: np.ndarray
    xr_miss: np.ndarray
    xr_strike: np.ndarray
    xr_ball: np.ndarray

    def __post_init__(self):
        arrays = [self.p_contact, self.p_strike, self.xr_contact,
                  self.xr_miss, self.xr_strike, self.xr_ball]
        n = arrays[0].shape[0]
        if n < 1:
            raise ValueError("need at least one draw")
        if any(a.shape != (n,) for a in arrays):
            raise ValueError("branch draw vectors must share one length")
        for name in ("p_contact", "p_strike"):
            p = getattr(self, name)
            if not ((p > 0.0) & (p < 1.0)).all():
                raise ValueError(f"{name} must lie strictly inside (0, 1)")
        for name in ("xr_contact", "xr_miss", "xr_strike", "xr_ball"):
            if not np.isfinite(getattr(self, name)).all():
                raise ValueError(f"{name} must be finite")


def branch_expectations(draws: BranchDraws):
    """Per-draw expected runs after a swing and after a take."""
    swing_ev = draws.p_contact * draws.xr_contact + (1.0 - draws.p_contact) * draws.xr_miss
    take_ev = draws.p_strike * draws.xr_strike + (1.0 - draws.p_strike) * draws.xr_ball
    return swing_ev, take_ev


def ev_diff(swing_ev: np.ndarray, take_ev: np.ndarray) -> np.ndarray:
    """Expected-runs edge of swinging; positive favors the swing."""
    if swing_ev.shape != take_ev.shape:
        raise ValueError("branch expectation vectors are misaligned")
    return swing_ev - take_ev


@dataclass
class DecisionSummary:
    draws: np.ndarray
    mean: float
    interval: tuple
    p_swing_optimal: float
    optimal: str  # SWING | TAKE; ties resolve to TAKE
    actual: str | None = None
    panel: str | None = None

    @property
    def lo(self) -> float:
        return self.interval[0]

    @property
    def hi(self) -> float:
        return self.interval[1]


def summarize_decision(diff_draws: np.ndarray, level: float = 0.90,
                       actual_swing: bool | None = None) -> DecisionSummary:
    """Posterior summary of the swing edge for one pitch.

    The optimal decision follows the sign of the posterior mean; a mean of
    exactly zero counts as take. The interval endpoints are order statistics
    of the draws.
    """
    diff_draws = np.asarray(diff_draws, dtype=np.float64)
    if diff_draws.size == 0:
        raise ValueError("cannot summarize zero draws")
    mean = float(diff_draws.mean())
    summary = DecisionSummary(
        draws=diff_draws,
        mean=mean,
        interval=credible_interval(diff_draws, level),
        p_swing_optimal=float((diff_draws > 0.0).mean()),
        optimal=SWING if mean > 0.0 else TAKE,
    )
    if actual_swing is not None:
        from ..metrics.panels import panel_assign

        summary.actual = SWING if actual_swing else TAKE
        summary.panel = panel_assign(actual_swing, summary.optimal == SWING)
    return summary
