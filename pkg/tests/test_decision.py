"""Branch composition, the swing edge, and pitch scoring against stub models."""

import numpy as np
import pytest

from swingdecision.decision import (
    BranchDraws,
    branch_expectations,
    ev_diff,
    score_pitches,
    summarize_decision,
)
from swingdecision.util import rng_from_seed

from tests.conftest import (
    constant_event_model,
    ensemble_from_trees,
    make_record,
    make_state,
)


def branch(p_contact, p_strike, xr_contact, xr_miss, xr_strike, xr_ball):
    to_arr = lambda v: np.asarray(v, dtype=np.float64)
    return BranchDraws(
        to_arr(p_contact), to_arr(p_strike), to_arr(xr_contact),
        to_arr(xr_miss), to_arr(xr_strike), to_arr(xr_ball),
    )


class TestBranchExpectations:
    def test_hand_arithmetic(self):
        b = branch([0.8], [0.5], [0.6], [0.1], [0.2], [0.3])
        swing_ev, take_ev = branch_expectations(b)
        assert swing_ev[0] == pytest.approx(0.50)
        assert take_ev[0] == pytest.approx(0.25)

    def test_degenerate_probability(self):
        b = branch([1.0 - 1e-12], [0.5], [0.6], [-5.0], [0.0], [0.0])
        swing_ev, _ = branch_expectations(b)
        assert swing_ev[0] == pytest.approx(0.6, abs=1e-9)

    def test_convex_combination_bounds(self):
        rng = rng_from_seed(0)
        n = 10_000
        b = branch(rng.uniform(1e-6, 1 - 1e-6, n), rng.uniform(1e-6, 1 - 1e-6, n),
                   rng.normal(0, 1, n), rng.normal(0, 1, n),
                   rng.normal(0, 1, n), rng.normal(0, 1, n))
        swing_ev, take_ev = branch_expectations(b)
        lo = np.minimum(b.xr_contact, b.xr_miss)
        hi = np.maximum(b.xr_contact, b.xr_miss)
        assert ((swing_ev >= lo) & (swing_ev <= hi)).all()
        lo_t = np.minimum(b.xr_strike, b.xr_ball)
        hi_t = np.maximum(b.xr_strike, b.xr_ball)
        assert ((take_ev >= lo_t) & (take_ev <= hi_t)).all()

    def test_validation(self):
        with pytest.raises(ValueError, match="strictly inside"):
            branch([0.0], [0.5], [0], [0], [0], [0])
        with pytest.raises(ValueError, match="share one length"):
            branch([0.5, 0.5], [0.5], [0], [0], [0], [0])
        with pytest.raises(ValueError, match="finite"):
            branch([0.5], [0.5], [np.inf], [0], [0], [0])


class TestEvDiff:
    def test_identity_and_antisymmetry(self):
        swing_ev = np.array([0.5, 0.2])
        take_ev = np.array([0.45, 0.3])
        d = ev_diff(swing_ev, take_ev)
        assert d == pytest.approx([0.05, -0.1])
        assert np.array_equal(ev_diff(take_ev, swing_ev), -d)
        assert np.array_equal(ev_diff(swing_ev, swing_ev), np.zeros(2))


class TestSummarize:
    def test_p_swing_optimal_proportion(self):
        rng = rng_from_seed(1)
        draws = np.concatenate([rng.uniform(0.01, 1, 614), rng.uniform(-1, -0.01, 386)])
        rng.shuffle(draws)
        s = summarize_decision(draws)
        assert s.p_swing_optimal == pytest.approx(0.614)

    def test_tie_goes_to_take(self):
        s = summarize_decision(np.zeros(100))
        assert s.optimal == "take"
        assert s.p_swing_optimal == 0.0

    def test_interval_endpoints_are_order_statistics(self):
        # 20 draws: 5% quantile = 1st order stat, 95% = 19th
        draws = np.array([-0.04] + [0.01] * 17 + [0.08, 0.09])
        rng_from_seed(2).shuffle(draws)
        s = summarize_decision(draws)
        assert s.lo == -0.04
        assert s.hi == 0.08
        assert s.lo in draws and s.hi in draws

    def test_mean_interval_shape(self):
        draws = np.array([-0.04, 0.01, 0.08])
        s = summarize_decision(draws)
        assert s.mean == pytest.approx(np.mean(draws))
        assert s.lo == -0.04 and s.hi == 0.08
        assert s.optimal == "swing"

    def test_empty_draws_rejected(self):
        with pytest.raises(ValueError):
            summarize_decision(np.empty(0))

    def test_panel_attached_with_actual(self):
        s = summarize_decision(np.array([0.2, 0.3]), actual_swing=False)
        assert s.actual == "take" and s.panel == "c"


def runs_stub(runs_meta, values_per_gstate, n_draws=2):
    """Runs model: categorical split on gstate; contact/else values."""
    contact_code = runs_meta.levels[0]["contact"]
    ball_code = runs_meta.levels[0]["ball"]
    c, s, b = values_per_gstate
    draws = [[
        ("cat", 0, {contact_code}, ("leaf", c), ("leaf", 0.0)),
        ("cat", 0, {ball_code}, ("leaf", b), ("leaf", 0.0)),
        ("cat", 0, {contact_code, ball_code}, ("leaf", 0.0), ("leaf", s)),
    ] for _ in range(n_draws)]
    return ensemble_from_trees(runs_meta, "regression", draws)


class TestScorePitches:
    def test_constant_runs_model_collapses(self, event_meta, runs_meta):
        strike = constant_event_model(event_meta, n_draws=3)
        contact = constant_event_model(event_meta, n_draws=3)
        runs = constant_event_model(runs_meta, mode="regression", value=0.7, n_draws=3)
        pitches = [make_record(swing=True), make_record(swing=False)]
        out = score_pitches(strike, contact, runs, pitches)
        for s in out:
            assert np.allclose(s.draws, 0.0)
            assert s.p_swing_optimal == 0.0
            assert s.optimal == "take"

    def test_hand_built_models_match_hand_arithmetic(self, event_meta, runs_meta):
        # probit zero leaves: p = Phi(0) = 0.5 each
        strike = constant_event_model(event_meta, n_draws=2)
        contact = constant_event_model(event_meta, n_draws=2)
        runs = runs_stub(runs_meta, (1.0, 0.25, 0.5))
        pitch = make_record(swing=True)
        (summary,) = score_pitches(strike, contact, runs, [pitch])
        # swing: 0.5*1.0 + 0.5*0.25 = 0.625 ; take: 0.5*0.25 + 0.5*0.5 = 0.375
        assert np.allclose(summary.draws, 0.25)
        assert summary.mean == pytest.approx(0.25)
        assert summary.panel == "d"

    def test_draw_alignment_subsamples_longer_chains(self, event_meta, runs_meta):
        strike = constant_event_model(event_meta, n_draws=6)
        contact = constant_event_model(event_meta, n_draws=3)
        runs = runs_stub(runs_meta, (0.9, 0.2, 0.4), n_draws=9)
        (summary,) = score_pitches(strike, contact, runs, [make_record()])
        assert summary.draws.shape == (3,)

    def test_missing_model_rejected(self, event_meta):
        with pytest.raises(ValueError, match="required"):
            score_pitches(None, constant_event_model(event_meta), None, [make_record()])


class TestAntisymmetry:
    def test_branch_swap_flips_everything(self):
        rng = rng_from_seed(6)
        n = 2000
        b = branch(rng.uniform(0.2, 0.8, n), rng.uniform(0.2, 0.8, n),
                   rng.normal(size=n), rng.normal(size=n),
                   rng.normal(size=n), rng.normal(size=n))
        swing_ev, take_ev = branch_expectations(b)
        base = summarize_decision(ev_diff(swing_ev, take_ev))
        flipped = summarize_decision(ev_diff(take_ev, swing_ev))
        ties = float((swing_ev == take_ev).mean())
        assert flipped.p_swing_optimal == pytest.approx(
            1.0 - base.p_swing_optimal - ties)
        assert base.mean != 0.0
        assert {base.optimal, flipped.optimal} == {"swing", "take"}


class TestMonotonicity:
    def test_delta_shift_moves_every_draw_by_delta(self):
        rng = rng_from_seed(3)
        n = 1000
        b = branch(rng.uniform(0.2, 0.8, n), rng.uniform(0.2, 0.8, n),
                   rng.normal(size=n), rng.normal(size=n),
                   rng.normal(size=n), rng.normal(size=n))
        swing_ev, take_ev = branch_expectations(b)
        base = ev_diff(swing_ev, take_ev)
        delta = 0.17
        shifted = branch(b.p_contact, b.p_strike, b.xr_contact + delta,
                         b.xr_miss + delta, b.xr_strike, b.xr_ball)
        swing2, take2 = branch_expectations(shifted)
        moved = ev_diff(swing2, take2)
        assert np.allclose(moved - base, delta, atol=1e-12)
        assert (moved > 0).mean() >= (base > 0).mean()
