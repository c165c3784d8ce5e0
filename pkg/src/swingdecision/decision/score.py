"""Scoring pitches against the three fitted component models."""

from ..data.types import GSTATE_BALL, GSTATE_CONTACT, GSTATE_STRIKE
from ..features import event_design, runs_design
from ..util import even_subsample
from .compose import BranchDraws, DecisionSummary, branch_expectations, ev_diff, summarize_decision


def _aligned_draw_indices(models, n_draws=None):
    counts = [m.n_draws for m in models]
    k = min(counts) if n_draws is None else n_draws
    if k < 1:
        raise ValueError("no posterior draws to align")
    if any(c < k for c in counts):
        raise ValueError(f"requested {k} draws but models have {counts}")
    return [even_subsample(c, k) for c in counts]


def score_pitches(strike_model, contact_model, runs_model, pitches,
                  n_draws: int | None = None, level: float = 0.90,
                  include_g=True, include_p=True, include_l=True):
    """One DecisionSummary per pitch.

    The strike model is queried at the pitch context, the contact model at
    the same context, and the runs model at the pre-pitch game state under
    each of the four outcomes. Longer chains are evenly subsampled so draw j
    pairs with draw j everywhere.
    """
    if strike_model is None or contact_model is None or runs_model is None:
        raise ValueError("all three component models are required")
    pitches = list(pitches)
    if not pitches:
        return []
    strike_idx, contact_idx, runs_idx = _aligned_draw_indices(
        [strike_model, contact_model, runs_model], n_draws
    )

    strike_des = event_design(strike_model.meta, pitches, include_g, include_p, include_l)
    contact_des = event_design(contact_model.meta, pitches, include_g, include_p, include_l)
    p_strike = strike_model.predict(strike_des, draw_indices=strike_idx)
    p_contact = contact_model.predict(contact_des, draw_indices=contact_idx)

    outcome_rows = []
    for pitch in pitches:
        g = pitch.game_state
        outcome_rows.append((g, 1.0, GSTATE_CONTACT))
        outcome_rows.append((g, 1.0, GSTATE_STRIKE))
        outcome_rows.append((g, 0.0, GSTATE_STRIKE))
        outcome_rows.append((g, 0.0, GSTATE_BALL))
    runs_des = runs_design(runs_model.meta, outcome_rows)
    xr = runs_model.predict(runs_des, draw_indices=runs_idx)
    xr = xr.reshape(len(pitches), 4, -1)

    summaries = []
    for i, pitch in enumerate(pitches):
        branch = BranchDraws(
            p_contact=p_contact[i],
            p_strike=p_strike[i],
            xr_contact=xr[i, 0],
            xr_miss=xr[i, 1],
            xr_strike=xr[i, 2],
            xr_ball=xr[i, 3],
        )
        swing_ev, take_ev = branch_expectations(branch)
        diff = ev_diff(swing_ev, take_ev)
        actual = pitch.swing if hasattr(pitch, "swing") else None
        summaries.append(summarize_decision(diff, level=level, actual_swing=actual))
    return summaries


def component_means(strike_model, contact_model, runs_model, pitch,
                    n_draws: int | None = None,
                    include_g=True, include_p=True, include_l=True) -> dict:
    """Posterior-mean components for one context (for reports and the UI)."""
    strike_idx, contact_idx, runs_idx = _aligned_draw_indices(
        [strike_model, contact_model, runs_model], n_draws
    )
    strike_des = event_design(strike_model.meta, [pitch], include_g, include_p, include_l)
    contact_des = event_design(contact_model.meta, [pitch], include_g, include_p, include_l)
    g = pitch.game_state
    runs_des = runs_design(runs_model.meta, [
        (g, 1.0, GSTATE_CONTACT), (g, 1.0, GSTATE_STRIKE),
        (g, 0.0, GSTATE_STRIKE), (g, 0.0, GSTATE_BALL),
    ])
    xr = runs_model.predict(runs_des, draw_indices=runs_idx)
    return {
        "p_strike": float(strike_model.predict(strike_des, draw_indices=strike_idx).mean()),
        "p_contact": float(contact_model.predict(contact_des, draw_indices=contact_idx).mean()),
        "xr_contact": float(xr[0].mean()),
        "xr_miss": float(xr[1].mean()),
        "xr_strike": float(xr[2].mean()),
        "xr_ball": float(xr[3].mean()),
    }
