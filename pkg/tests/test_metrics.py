"""Panel bookkeeping, season aggregates, traditional heuristics, stability."""

import numpy as np
import pytest

from swingdecision.metrics import (
    ZoneSpec,
    batter_report,
    decompose_panels,
    panel_assign,
    proportion_optimal,
    runs_added,
    runs_lost,
    traditional_metrics,
    year_to_year_correlation,
)
from swingdecision.util import rng_from_seed

from tests.conftest import make_record


class TestPanels:
    def test_assignments(self):
        assert panel_assign(False, False) == "a"
        assert panel_assign(True, False) == "b"
        assert panel_assign(False, True) == "c"
        assert panel_assign(True, True) == "d"

    def test_negative_mean_swing_is_b(self):
        draws = np.array([[-0.05, -0.06, -0.04]])
        dec = decompose_panels(draws, np.array([True]))
        assert dec.counts_mean == {"a": 0, "b": 1, "c": 0, "d": 0}

    def test_partition_counts(self):
        rng = rng_from_seed(0)
        draws = rng.normal(0, 0.1, size=(40, 16))
        actual = rng.random(40) < 0.5
        dec = decompose_panels(draws, actual)
        assert sum(dec.counts_mean.values()) == 40
        per_draw_total = sum(dec.counts_draws.values())
        assert (per_draw_total == 40).all()


FIXTURE = [  # (swung, edge) from the four-pitch example
    (True, 0.2), (False, -0.1), (False, 0.3), (True, -0.05),
]


class TestRunsAddedLost:
    def draws(self):
        edge = np.array([v for _, v in FIXTURE])[:, None]
        actual = np.array([s for s, _ in FIXTURE])
        return edge, actual

    def test_four_pitch_fixture(self):
        edge, actual = self.draws()
        assert runs_added(edge, actual)[0] == pytest.approx(-0.05)
        assert runs_lost(edge, actual)[0] == pytest.approx(0.35)

    def test_flip_negates_added(self):
        edge, actual = self.draws()
        assert runs_added(edge, ~actual)[0] == pytest.approx(0.05)

    def test_always_optimal_loses_nothing(self):
        edge = np.array([[0.2], [-0.4], [0.1]])
        actual = np.array([True, False, True])
        assert runs_lost(edge, actual)[0] == 0.0
        assert runs_added(edge, actual)[0] == pytest.approx(0.7)

    def test_positive_negative_part_identity(self):
        rng = rng_from_seed(1)
        edge = rng.normal(0, 0.2, size=(60, 8))
        actual = rng.random(60) < 0.5
        added = runs_added(edge, actual)
        lost = runs_lost(edge, actual)
        signs = np.where(actual, 1.0, -1.0)[:, None]
        gained = np.maximum(0.0, signs * edge).sum(axis=0)
        assert np.allclose(added + lost, gained)
        assert (lost >= 0).all()
        assert (lost >= -added).all()

    def test_per_pitch_oracle(self):
        rng = rng_from_seed(2)
        for trial in range(25):
            n, k = int(rng.integers(1, 30)), int(rng.integers(1, 6))
            edge = rng.normal(0, 0.3, size=(n, k))
            actual = rng.random(n) < 0.5
            signs = np.where(actual, 1.0, -1.0)
            added_oracle = np.zeros(k)
            lost_oracle = np.zeros(k)
            for i in range(n):
                for j in range(k):
                    a = signs[i] * edge[i, j]
                    added_oracle[j] += a
                    lost_oracle[j] += max(0.0, -a)
            assert np.allclose(runs_added(edge, actual), added_oracle)
            assert np.allclose(runs_lost(edge, actual), lost_oracle)

    def test_panel_sum_formulas(self):
        rng = rng_from_seed(3)
        edge = rng.normal(0, 0.2, size=(50, 10))
        actual = rng.random(50) < 0.5
        dec = decompose_panels(edge, actual)
        added = (dec.sums_draws["d"] - dec.sums_draws["c"]) - (
            dec.sums_draws["a"] - dec.sums_draws["b"])
        assert np.allclose(added, runs_added(edge, actual))
        lost = dec.sums_draws["c"] - dec.sums_draws["b"]
        assert np.allclose(lost, runs_lost(edge, actual))


class TestProportionOptimal:
    def test_always_right(self):
        edge = np.abs(rng_from_seed(4).normal(size=(10, 7))) + 0.01
        prop = proportion_optimal(edge, np.ones(10, dtype=bool))
        assert np.array_equal(prop, np.ones(7))

    def test_enumeration_oracle(self):
        edge = np.array([[0.1, -0.1], [-0.2, -0.2], [0.3, 0.05]])
        actual = np.array([True, False, False])
        # draw 0: optimal = swing,take,swing -> agree on pitches 0,1 -> 2/3
        # draw 1: optimal = take,take,swing -> agree on pitch 1 -> 1/3
        prop = proportion_optimal(edge, actual)
        assert prop == pytest.approx([2 / 3, 1 / 3])

    def test_depends_only_on_per_draw_signs(self):
        # widening the draws symmetrically (scaling) flips no signs, so the
        # per-draw proportions are exactly unchanged
        rng = rng_from_seed(11)
        edge = rng.normal(0, 0.1, size=(40, 12))
        actual = rng.random(40) < 0.5
        base = proportion_optimal(edge, actual)
        assert np.array_equal(base, proportion_optimal(edge * 5.0, actual))
        assert np.array_equal(base, proportion_optimal(edge * 0.01, actual))

    def test_report_bundles_summaries(self):
        rng = rng_from_seed(5)
        edge = rng.normal(0.02, 0.1, size=(120, 64))
        actual = rng.random(120) < 0.45
        rep = batter_report("b9", edge, actual)
        assert rep.n_pitches == 120
        assert 0.0 <= rep.proportion_optimal.mean <= 1.0
        assert rep.proportion_optimal.lo <= rep.proportion_optimal.mean <= rep.proportion_optimal.hi
        assert (rep.runs_lost.draws >= 0).all()
        assert rep.runs_added_per_pitch() == pytest.approx(rep.runs_added.mean / 120)


class TestTraditional:
    def test_zone_membership(self):
        mid = make_record(x=0.0, z=2.5, swing=True)
        outside = make_record(x=3.0, z=2.5, swing=False)
        m = traditional_metrics([mid, outside])
        assert m.z_swing_pct == 1.0
        assert m.o_swing_pct == 0.0
        assert m.correct_decision_pct == 1.0

    def test_pitch_level_bounds_used_when_present(self):
        low = make_record(x=0.0, z=1.2, swing=True, sz_bot=1.0, sz_top=3.0)
        assert traditional_metrics([low]).z_swing_pct == 1.0
        fixed = make_record(x=0.0, z=1.2, swing=True, sz_bot=None, sz_top=None)
        assert traditional_metrics([fixed]).z_swing_pct is None  # out of fixed zone

    def test_invariant_to_draws(self):
        # geometry only: no posterior input at all
        records = [make_record(x=0.4, z=2.0, swing=True),
                   make_record(x=1.5, z=3.9, swing=False)]
        a = traditional_metrics(records)
        b = traditional_metrics(records)
        assert a == b

    def test_zone_spec_validation(self):
        with pytest.raises(ValueError):
            ZoneSpec(half_width=-1)
        with pytest.raises(ValueError):
            ZoneSpec(fixed_bottom=4.0, fixed_top=3.0)


class TestYearToYear:
    def test_identical_vectors(self):
        values = {2018: {"a": 0.1, "b": 0.2, "c": 0.3},
                  2019: {"a": 0.1, "b": 0.2, "c": 0.3}}
        pitches = {y: {b: 1500 for b in "abc"} for y in (2018, 2019)}
        seasons, corr = year_to_year_correlation(values, pitches)
        assert seasons == [2018, 2019]
        assert corr[0, 1] == pytest.approx(1.0)

    def test_negated_vector(self):
        values = {2018: {"a": 0.1, "b": 0.2, "c": 0.35},
                  2019: {"a": -0.1, "b": -0.2, "c": -0.35}}
        pitches = {y: {b: 1500 for b in "abc"} for y in (2018, 2019)}
        _, corr = year_to_year_correlation(values, pitches)
        assert corr[0, 1] == pytest.approx(-1.0)

    def test_qualification_threshold(self):
        values = {2018: {"a": 0.1, "b": 0.2, "c": 0.3},
                  2019: {"a": 0.1, "b": 0.2, "c": 0.3}}
        pitches = {2018: {"a": 1500, "b": 900, "c": 1500},
                   2019: {"a": 1500, "b": 1500, "c": 1500}}
        with pytest.raises(ValueError, match="qualify"):
            year_to_year_correlation(values, pitches, min_pitches=1000)
