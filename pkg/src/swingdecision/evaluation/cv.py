"""K-fold cross-validation over the candidate model families.

Held-out predictions are posterior means (point forecasts), so the binary
targets are scored by the Brier score and the runs target by plain MSE.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .. import bart
from ..features import event_design, event_metadata, runs_design, runs_metadata
from ..rex import BinSpec, RexPriorConfig, fit_bayes_rex, fit_rex
from ..util import rng_from_seed
from .baselines import ConstantBaseline, LocationGridBaseline


@dataclass
class CvPlan:
    n: int
    k: int
    seed: int
    fold: np.ndarray  # fold id per row

    def holdout(self, f: int) -> np.ndarray:
        return np.flatnonzero(self.fold == f)

    def train(self, f: int) -> np.ndarray:
        return np.flatnonzero(self.fold != f)


def kfold_split(n: int, k: int, seed: int) -> CvPlan:
    """Random permutation chunked into k folds whose sizes differ by <= 1."""
    if k < 2:
        raise ValueError("need k >= 2 folds")
    if n < k:
        raise ValueError(f"cannot split {n} rows into {k} folds")
    rng = rng_from_seed(seed)
    perm = rng.permutation(n)
    fold = np.empty(n, dtype=np.int32)
    base = n // k
    extra = n % k
    start = 0
    for f in range(k):
        size = base + (1 if f < extra else 0)
        fold[perm[start:start + size]] = f
        start += size
    return CvPlan(n=n, k=k, seed=seed, fold=fold)


@dataclass
class ModelSpec:
    kind: str  # "tree" | "rex" | "bayes_rex" | "constant" | "location_grid"
    target: str  # "strike" | "contact" | "runs"
    include_g: bool = True
    include_p: bool = True
    include_l: bool = True
    bin_spec: BinSpec | None = None
    tree_config: bart.EnsembleConfig | None = None
    rex_prior: RexPriorConfig | None = None

    def __post_init__(self):
        if self.kind in ("rex", "bayes_rex") and self.bin_spec is None:
            raise ValueError(f"{self.kind} specs need a bin_spec")
        if self.kind == "tree" and self.target != "runs" and not (
            self.include_g or self.include_p or self.include_l
        ):
            raise ValueError("tree event models need a nonempty predictor subset")

    @property
    def label(self) -> str:
        if self.kind == "tree":
            if self.target == "runs":
                return "tree(G,decision,outcome)"
            parts = [s for s, on in (("G", self.include_g), ("P", self.include_p),
                                     ("L", self.include_l)) if on]
            return f"tree({','.join(parts)})"
        if self.kind in ("rex", "bayes_rex"):
            return f"{self.kind}[{self.bin_spec.label()}]"
        return self.kind


def _target_values(records, target: str) -> np.ndarray:
    if target == "strike":
        return np.array([1.0 if r.called_strike else 0.0 for r in records])
    if target == "contact":
        return np.array([1.0 if r.contact else 0.0 for r in records])
    if target == "runs":
        return np.array([float(r.runs_rest_of_inning) for r in records])
    raise ValueError(f"unknown target {target!r}")


def _fold_seed(spec_seed: int, plan: CvPlan, f: int) -> int:
    return int(np.random.SeedSequence((spec_seed, plan.seed, f)).generate_state(1)[0])


def _fit_predict(spec: ModelSpec, train, test, plan: CvPlan, f: int) -> np.ndarray:
    y_train = _target_values(train, spec.target)
    if spec.kind == "constant":
        return ConstantBaseline().fit(y_train).predict(len(test))
    if spec.kind == "location_grid":
        model = LocationGridBaseline().fit(
            [r.location.plate_x for r in train], [r.location.plate_z for r in train], y_train
        )
        return model.predict(
            [r.location.plate_x for r in test], [r.location.plate_z for r in test]
        )
    if spec.kind == "rex":
        return fit_rex(train, spec.bin_spec).predict_many([r.game_state for r in test])
    if spec.kind == "bayes_rex":
        prior = spec.rex_prior or RexPriorConfig()
        prior = RexPriorConfig(**{**prior.to_dict(), "seed": _fold_seed(prior.seed, plan, f)})
        model = fit_bayes_rex(train, spec.bin_spec, prior)
        return model.predict_mean_many([r.game_state for r in test])
    if spec.kind == "tree":
        mode = "regression" if spec.target == "runs" else "probit"
        config = spec.tree_config or bart.default_config(mode)
        config = bart.EnsembleConfig(
            **{**config.to_dict(), "seed": _fold_seed(config.seed, plan, f)}
        )
        if spec.target == "runs":
            rows = [(r.game_state, float(r.swing), r.gstate) for r in train]
            meta = runs_metadata(rows)
            ens = bart.fit(runs_design(meta, rows), y_train, config, mode)
            test_rows = [(r.game_state, float(r.swing), r.gstate) for r in test]
            return ens.predict_mean(runs_design(meta, test_rows))
        meta = event_metadata(train, spec.include_g, spec.include_p, spec.include_l)
        ens = bart.fit(
            event_design(meta, train, spec.include_g, spec.include_p, spec.include_l),
            y_train, config, mode,
        )
        return ens.predict_mean(
            event_design(meta, test, spec.include_g, spec.include_p, spec.include_l)
        )
    raise ValueError(f"unknown model kind {spec.kind!r}")


@dataclass
class CvResult:
    spec_label: str
    fold_mse: list
    pooled_mse: float


def run_cv(spec: ModelSpec, records, plan: CvPlan) -> CvResult:
    """Out-of-sample MSE per fold plus the MSE pooled over all rows."""
    records = list(records)
    if len(records) != plan.n:
        raise ValueError("plan was built for a different row count")
    y = _target_values(records, spec.target)
    fold_mse = []
    sq_err_total = 0.0
    for f in range(plan.k):
        test_idx = plan.holdout(f)
        train = [records[i] for i in plan.train(f)]
        test = [records[i] for i in test_idx]
        pred = np.asarray(_fit_predict(spec, train, test, plan, f), dtype=np.float64)
        err = pred - y[test_idx]
        fold_mse.append(float((err ** 2).mean()))
        sq_err_total += float((err ** 2).sum())
    return CvResult(spec.label, fold_mse, sq_err_total / plan.n)


@dataclass
class RelativeMse:
    ratio: float
    percent: float


def relative_mse(candidate_mse: float, reference_mse: float) -> RelativeMse:
    """candidate/reference ratio and its percent difference."""
    if reference_mse <= 0.0:
        raise ValueError("reference MSE must be positive")
    ratio = candidate_mse / reference_mse
    return RelativeMse(ratio=ratio, percent=(ratio - 1.0) * 100.0)


def write_cv_report(results: list, reference_label: str, path) -> None:
    """Per-fold table plus relative-MSE summary against one reference model."""
    by_label = {r.spec_label: r for r in results}
    if reference_label not in by_label:
        raise ValueError(f"no results for reference {reference_label!r}")
    reference = by_label[reference_label]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["model", "fold", "mse"])
        for result in results:
            for f, mse in enumerate(result.fold_mse):
                writer.writerow([result.spec_label, f, repr(mse)])
        writer.writerow([])
        writer.writerow(["model", "pooled_mse", "relative_to_" + reference_label, "percent"])
        for result in results:
            rel = relative_mse(result.pooled_mse, reference.pooled_mse)
            writer.writerow([
                result.spec_label, repr(result.pooled_mse), repr(rel.ratio),
                f"{rel.percent:+.2f}%",
            ])
