"""Plain bin-average run expectancy (the RE24 family)."""

from dataclasses import dataclass

import numpy as np

from .bins import BinSpec, assign_bin, assign_bins


@dataclass
class RexModel:
    spec: BinSpec
    means: np.ndarray  # per bin; NaN where the bin is empty
    counts: np.ndarray
    global_mean: float
    r_mean: float
    r_sd: float

    def predict_bin(self, bin_id: int) -> float:
        value = self.means[bin_id]
        return self.global_mean if np.isnan(value) else float(value)

    def predict(self, game_state) -> float:
        """Bin mean, falling back to the global training mean for empty bins."""
        return self.predict_bin(assign_bin(game_state, self.spec))

    def predict_many(self, game_states) -> np.ndarray:
        bins = assign_bins(game_states, self.spec)
        out = self.means[bins]
        return np.where(np.isnan(out), self.global_mean, out)

    def to_payload(self) -> dict:
        return {
            "spec": self.spec.to_payload(),
            "means": [None if np.isnan(v) else float(v) for v in self.means],
            "counts": [int(c) for c in self.counts],
            "global_mean": self.global_mean,
            "r_mean": self.r_mean,
            "r_sd": self.r_sd,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "RexModel":
        means = np.array(
            [np.nan if v is None else float(v) for v in payload["means"]], dtype=np.float64
        )
        return cls(
            spec=BinSpec.from_payload(payload["spec"]),
            means=means,
            counts=np.asarray(payload["counts"], dtype=np.int64),
            global_mean=float(payload["global_mean"]),
            r_mean=float(payload["r_mean"]),
            r_sd=float(payload["r_sd"]),
        )


def fit_rex(records, spec: BinSpec) -> RexModel:
    """Arithmetic mean of downstream runs within each game-state bin."""
    if not records:
        raise ValueError("cannot fit run expectancy on zero records")
    runs = np.array([r.runs_rest_of_inning for r in records], dtype=np.float64)
    bins = assign_bins([r.game_state for r in records], spec)
    counts = np.bincount(bins, minlength=spec.n_bins)
    sums = np.bincount(bins, weights=runs, minlength=spec.n_bins)
    with np.errstate(invalid="ignore"):
        means = np.where(counts > 0, sums / counts, np.nan)
    return RexModel(
        spec=spec,
        means=means,
        counts=counts,
        global_mean=float(runs.mean()),
        r_mean=float(runs.mean()),
        r_sd=float(runs.std()),
    )
