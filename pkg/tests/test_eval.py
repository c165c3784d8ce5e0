"""CV harness, baselines, and sanity of the synthetic ground truth."""

import numpy as np
import pytest

from swingdecision.bart import EnsembleConfig
from swingdecision.evaluation import (
    ConstantBaseline,
    LocationGridBaseline,
    ModelSpec,
    SyntheticConfig,
    kfold_split,
    relative_mse,
    run_cv,
    synthesize,
)
from swingdecision.rex import BinSpec
from swingdecision.util import rng_from_seed

from tests.conftest import make_record


class TestKfold:
    def test_exact_division(self):
        plan = kfold_split(10, 10, seed=0)
        sizes = np.bincount(plan.fold)
        assert (sizes == 1).all()

    def test_remainder_distribution(self):
        plan = kfold_split(25, 10, seed=1)
        sizes = sorted(np.bincount(plan.fold))
        assert sizes == [2] * 5 + [3] * 5

    def test_partition_property(self):
        rng = rng_from_seed(2)
        for _ in range(30):
            n = int(rng.integers(5, 200))
            k = int(rng.integers(2, min(n, 12) + 1))
            plan = kfold_split(n, k, seed=int(rng.integers(10_000)))
            union = set()
            for f in range(k):
                held = set(plan.holdout(f).tolist())
                assert not union & held
                union |= held
                assert not held & set(plan.train(f).tolist())
            assert union == set(range(n))

    def test_deterministic(self):
        a = kfold_split(100, 7, seed=5)
        b = kfold_split(100, 7, seed=5)
        assert np.array_equal(a.fold, b.fold)

    def test_n_less_than_k(self):
        with pytest.raises(ValueError):
            kfold_split(3, 10, seed=0)


class TestRelativeMse:
    def test_identity(self):
        rel = relative_mse(0.5, 0.5)
        assert rel.ratio == 1.0 and rel.percent == 0.0

    def test_percent(self):
        assert relative_mse(1.018, 1.0).percent == pytest.approx(1.8)
        assert relative_mse(0.5, 1.0).percent == pytest.approx(-50.0)

    def test_zero_reference(self):
        with pytest.raises(ValueError):
            relative_mse(1.0, 0.0)


class TestBaselines:
    def test_constant_predicts_training_mean(self):
        base = ConstantBaseline().fit([0, 1, 1, 1])
        assert np.allclose(base.predict(3), 0.75)

    def test_location_grid_recovers_cells(self):
        rng = rng_from_seed(3)
        x = rng.uniform(-2, 2, 4000)
        z = rng.uniform(0.5, 4.5, 4000)
        y = (x > 0).astype(float)
        grid = LocationGridBaseline().fit(x, z, y)
        pred = grid.predict([1.5, -1.5], [2.0, 2.0])
        assert pred[0] > 0.9 and pred[1] < 0.1

    def test_location_grid_fallback(self):
        grid = LocationGridBaseline().fit([0.0], [2.0], [1.0])
        assert grid.predict([2.4], [4.9])[0] == 1.0  # empty cell -> global mean


class TestSynthetic:
    def test_outcome_frequencies_match_surfaces(self):
        records, truth = synthesize(SyntheticConfig(n_pitches=12_000, seed=4))
        takes = [r for r in records if not r.swing]
        # pick a tight location box near the zone edge and compare frequency
        box = [r for r in takes if 0.6 < r.location.plate_x < 1.1
               and 2.0 < r.location.plate_z < 3.0]
        assert len(box) > 80
        freq = np.mean([r.called_strike for r in box])
        probs = np.mean([
            truth.strike_prob(r.location.plate_x, r.location.plate_z, r.personnel.umpire_id)
            for r in box
        ])
        se = np.sqrt(probs * (1 - probs) / len(box))
        assert abs(freq - probs) < 4 * se

    def test_run_rate_plausible(self):
        records, _ = synthesize(SyntheticConfig(n_pitches=8000, seed=5))
        from swingdecision.data import group_half_innings

        halves = group_half_innings(records)
        runs = [group[0].runs_rest_of_inning + 0.0 for group in halves.values()]
        assert 0.2 < np.mean(runs) < 1.0

    def test_constant_surface_recovered(self):
        # flat truth at 0.5: held-out predictions should average near 0.5
        config = SyntheticConfig(n_pitches=4000, seed=11, strike_slope=0.0,
                                 strike_edge_logit=0.0, umpire_sd=0.0)
        records, truth = synthesize(config)
        takes = [r for r in records if not r.swing]
        assert truth.strike_prob(0.0, 2.5, "u000") == 0.5
        rng = rng_from_seed(12)
        perm = rng.permutation(len(takes))
        cut = int(0.8 * len(takes))
        train = [takes[i] for i in perm[:cut]]
        test = [takes[i] for i in perm[cut:]]
        from swingdecision.bart import fit
        from swingdecision.features import event_design, event_metadata

        meta = event_metadata(train)
        y = np.array([1.0 if r.called_strike else 0.0 for r in train])
        model = fit(event_design(meta, train), y,
                    EnsembleConfig(n_trees=20, burn_in=100, n_draws=100, seed=13),
                    "probit")
        pred = model.predict_mean(event_design(meta, test))
        assert abs(pred.mean() - 0.5) < 0.02

    def test_zero_noise_runs_recovered_exactly(self):
        # degenerate transitions: nothing ever reaches base, R is identically 0
        config = SyntheticConfig(
            n_pitches=1200, seed=6,
            inplay_probs={"field_out": 1.0, "single": 0.0, "double": 0.0,
                          "triple": 0.0, "home_run": 0.0},
            swing_base_logit=8.0, contact_base_logit=8.0,  # no walks: always in play
        )
        records, _ = synthesize(config)
        from swingdecision.rex import fit_rex

        model = fit_rex(records, BinSpec(outs=True, baserunners=True))
        occupied = model.counts > 0
        assert np.allclose(model.means[occupied], 0.0)


class TestRunCv:
    def pitches(self, n=400, seed=7):
        records, _ = synthesize(SyntheticConfig(n_pitches=n, seed=seed))
        return records

    def test_constant_on_constant_data_is_zero(self):
        records = [make_record(at_bat=i, runs=2) for i in range(40)]
        plan = kfold_split(40, 4, seed=0)
        result = run_cv(ModelSpec("constant", "runs"), records, plan)
        assert result.pooled_mse == 0.0

    def test_self_relative_is_one(self):
        records = self.pitches()
        plan = kfold_split(len(records), 5, seed=1)
        result = run_cv(ModelSpec("rex", "runs", bin_spec=BinSpec()), records, plan)
        assert relative_mse(result.pooled_mse, result.pooled_mse).ratio == 1.0

    def test_constant_brier_matches_analytic(self):
        records = self.pitches(n=3000, seed=8)
        takes = [r for r in records if not r.swing]
        plan = kfold_split(len(takes), 5, seed=2)
        result = run_cv(ModelSpec("constant", "strike"), takes, plan)
        p_bar = np.mean([r.called_strike for r in takes])
        assert result.pooled_mse == pytest.approx(p_bar * (1 - p_bar), rel=0.05)

    def test_deterministic_end_to_end(self):
        records = self.pitches(n=600, seed=9)
        takes = [r for r in records if not r.swing]
        plan = kfold_split(len(takes), 3, seed=3)
        cfg = EnsembleConfig(n_trees=5, burn_in=10, n_draws=10, seed=4)
        spec = ModelSpec("tree", "strike", tree_config=cfg)
        a = run_cv(spec, takes, plan)
        b = run_cv(spec, takes, plan)
        assert a.fold_mse == b.fold_mse

    def test_labels_unchanged_across_predictor_subsets(self):
        records = self.pitches(n=500, seed=10)
        takes = [r for r in records if not r.swing]
        from swingdecision.evaluation.cv import _target_values

        h1 = hash(tuple(_target_values(takes, "strike")))
        ModelSpec("tree", "strike", include_g=False, include_p=False)  # feature view only
        h2 = hash(tuple(_target_values(takes, "strike")))
        assert h1 == h2
