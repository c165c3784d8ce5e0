"""Four-panel decomposition: actual decision crossed with the optimal one.

    a  take,  optimal take      b  swing, optimal take
    c  take,  optimal swing     d  swing, optimal swing
"""

from dataclasses import dataclass

import numpy as np

PANELS = ("a", "b", "c", "d")


def panel_assign(actual_swing: bool, optimal_swing: bool) -> str:
    if actual_swing:
        return "d" if optimal_swing else "b"
    return "c" if optimal_swing else "a"


@dataclass
class PanelDecomposition:
    """Panel sums of the swing edge, per posterior draw and at the means.

    Per-draw panels are re-derived from each draw's sign, matching how the
    uncertainty-carrying metrics are defined; the posterior-mean panels give
    the headline point estimates.
    """

    sums_mean: dict  # panel -> float, pitches assigned by posterior-mean sign
    counts_mean: dict
    sums_draws: dict  # panel -> (n_draws,) array, per-draw sign assignment
    counts_draws: dict


def decompose_panels(diff_draws: np.ndarray, actual_swing: np.ndarray) -> PanelDecomposition:
    """diff_draws: (n_pitches, n_draws); actual_swing: bool (n_pitches,)."""
    diff_draws = np.asarray(diff_draws, dtype=np.float64)
    actual_swing = np.asarray(actual_swing, dtype=bool)
    means = diff_draws.mean(axis=1)
    opt_mean = means > 0.0
    sums_mean = {p: 0.0 for p in PANELS}
    counts_mean = {p: 0 for p in PANELS}
    for i in range(diff_draws.shape[0]):
        panel = panel_assign(bool(actual_swing[i]), bool(opt_mean[i]))
        sums_mean[panel] += float(means[i])
        counts_mean[panel] += 1

    opt_draws = diff_draws > 0.0  # (n_pitches, n_draws)
    swing_col = actual_swing[:, None]
    masks = {
        "a": ~swing_col & ~opt_draws,
        "b": swing_col & ~opt_draws,
        "c": ~swing_col & opt_draws,
        "d": swing_col & opt_draws,
    }
    sums_draws = {p: (diff_draws * m).sum(axis=0) for p, m in masks.items()}
    counts_draws = {p: m.sum(axis=0) for p, m in masks.items()}
    return PanelDecomposition(sums_mean, counts_mean, sums_draws, counts_draws)
