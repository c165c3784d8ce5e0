"""Request handlers behind the API, framework-free and replay-identical.

Every response is a pure function of the loaded model files, the query, and
the query's draw-subsample seed.
"""

from dataclasses import dataclass
from types import SimpleNamespace

import numpy as np

from ..data.types import (
    GSTATE_BALL,
    GSTATE_CONTACT,
    GSTATE_STRIKE,
    GameState,
    Location,
    PLATE_X_BOUND,
    PLATE_Z_MAX,
    PLATE_Z_MIN,
    Personnel,
)
from ..decision.compose import BranchDraws, branch_expectations, ev_diff, summarize_decision
from ..features import event_design, runs_design
from ..metrics.batter import batter_report
from ..metrics.traditional import ZoneSpec, traditional_metrics
from ..util import even_subsample, rng_from_seed

MAX_GRID = 101
DEFAULT_WHATIF_DRAWS = 200


class ApiError(Exception):
    def __init__(self, code: str, message: str, status: int = 400):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


@dataclass
class GridSpec:
    x_min: float
    x_max: float
    z_min: float
    z_max: float
    nx: int
    nz: int

    def validate(self) -> None:
        if not (1 <= self.nx <= MAX_GRID and 1 <= self.nz <= MAX_GRID):
            raise ApiError("grid_too_large", f"grid resolution capped at {MAX_GRID} per axis")
        if self.x_min > self.x_max or self.z_min > self.z_max:
            raise ApiError("bad_grid", "grid ranges must be ordered")
        if abs(self.x_min) > PLATE_X_BOUND or abs(self.x_max) > PLATE_X_BOUND:
            raise ApiError("bad_grid", f"|x| must stay within {PLATE_X_BOUND} ft")
        if self.z_min < PLATE_Z_MIN or self.z_max > PLATE_Z_MAX:
            raise ApiError("bad_grid", f"z must stay within [{PLATE_Z_MIN}, {PLATE_Z_MAX}] ft")

    def locations(self):
        xs = np.linspace(self.x_min, self.x_max, self.nx)
        zs = np.linspace(self.z_min, self.z_max, self.nz)
        return [(float(x), float(z)) for x in xs for z in zs]


@dataclass
class WhatIfQuery:
    game_state: GameState
    batter_id: str = "GENERIC"
    pitcher_id: str = "GENERIC"
    catcher_id: str = "GENERIC"
    umpire_id: str = "GENERIC"
    batter_hand: str = "R"
    pitcher_hand: str = "R"
    batter_quality: float | None = None
    pitcher_quality: float | None = None
    location: tuple | None = None  # (x, z); exclusive with grid
    grid: GridSpec | None = None
    n_draws: int | None = DEFAULT_WHATIF_DRAWS
    seed: int = 0


def _known_levels(meta, name: str) -> dict:
    try:
        j = meta.categorical_names.index(name)
    except ValueError:
        return {}
    return meta.levels[j]


def _resolve_quality(query_value, player_id, known, medians_key, extras, kind):
    if query_value is not None:
        return float(query_value)
    if player_id != "GENERIC" and player_id not in known:
        # Probably a typo rather than an intentional counterfactual.
        sample = sorted(known)[:20]
        raise ApiError(
            "unknown_player",
            f"unknown {kind} id {player_id!r} and no explicit quality given; "
            f"known ids include {sample}",
            status=404,
        )
    value = extras.get(medians_key)
    if value is None:
        raise ApiError(
            "no_generic_quality",
            f"model stores no median {kind} quality; pass {kind}_quality explicitly",
        )
    return float(value)


def _resolve_personnel(query: WhatIfQuery, strike_model) -> Personnel:
    extras = strike_model.extras
    meta = strike_model.meta
    batter_quality = _resolve_quality(
        query.batter_quality, query.batter_id, _known_levels(meta, "batter_id"),
        "median_batter_quality", extras, "batter",
    )
    pitcher_quality = _resolve_quality(
        query.pitcher_quality, query.pitcher_id, _known_levels(meta, "pitcher_id"),
        "median_pitcher_quality", extras, "pitcher",
    )
    return Personnel(
        batter_id=query.batter_id,
        pitcher_id=query.pitcher_id,
        catcher_id=query.catcher_id,
        umpire_id=query.umpire_id,
        batter_hand=query.batter_hand,
        pitcher_hand=query.pitcher_hand,
        batter_quality=batter_quality,
        pitcher_quality=pitcher_quality,
    )


def _aligned_subsample(models, n_draws, seed):
    common = min(m.n_draws for m in models)
    base = [even_subsample(m.n_draws, common) for m in models]
    if n_draws is None or n_draws >= common:
        return base
    rng = rng_from_seed(seed)
    sub = np.sort(rng.choice(common, size=n_draws, replace=False))
    return [b[sub] for b in base]


def handle_whatif(strike_model, contact_model, runs_model, query: WhatIfQuery) -> dict:
    """Decision surface over the queried location(s) for one game context."""
    try:
        query.game_state.validate()
    except ValueError as exc:
        raise ApiError("bad_game_state", str(exc))
    if (query.location is None) == (query.grid is None):
        raise ApiError("bad_query", "provide exactly one of location or grid")
    if query.grid is not None:
        query.grid.validate()
        cells = query.grid.locations()
    else:
        cells = [(float(query.location[0]), float(query.location[1]))]

    personnel = _resolve_personnel(query, strike_model)
    strike_idx, contact_idx, runs_idx = _aligned_subsample(
        [strike_model, contact_model, runs_model], query.n_draws, query.seed
    )

    contexts = [
        SimpleNamespace(game_state=query.game_state, personnel=personnel,
                        location=Location(x, z))
        for x, z in cells
    ]
    p_strike = strike_model.predict(
        event_design(strike_model.meta, contexts), draw_indices=strike_idx)
    p_contact = contact_model.predict(
        event_design(contact_model.meta, contexts), draw_indices=contact_idx)

    g = query.game_state
    xr = runs_model.predict(
        runs_design(runs_model.meta, [
            (g, 1.0, GSTATE_CONTACT), (g, 1.0, GSTATE_STRIKE),
            (g, 0.0, GSTATE_STRIKE), (g, 0.0, GSTATE_BALL),
        ]),
        draw_indices=runs_idx,
    )

    out_cells = []
    for i, (x, z) in enumerate(cells):
        branch = BranchDraws(
            p_contact=p_contact[i], p_strike=p_strike[i],
            xr_contact=xr[0], xr_miss=xr[1], xr_strike=xr[2], xr_ball=xr[3],
        )
        swing_ev, take_ev = branch_expectations(branch)
        summary = summarize_decision(ev_diff(swing_ev, take_ev))
        out_cells.append({
            "x": x,
            "z": z,
            "mean_evdiff": summary.mean,
            "lo": summary.lo,
            "hi": summary.hi,
            "p_swing_optimal": summary.p_swing_optimal,
            "optimal": summary.optimal,
            "components": {
                "p_strike": float(p_strike[i].mean()),
                "p_contact": float(p_contact[i].mean()),
                "xr_contact": float(xr[0].mean()),
                "xr_miss": float(xr[1].mean()),
                "xr_strike": float(xr[2].mean()),
                "xr_ball": float(xr[3].mean()),
            },
        })
    return {
        "n_draws": int(len(strike_idx)),
        "seed": query.seed,
        "grid": (
            {"nx": query.grid.nx, "nz": query.grid.nz} if query.grid is not None
            else {"nx": 1, "nz": 1}
        ),
        "zone": {"half_width": 0.83, "bottom": 1.5, "top": 3.5},
        "cells": out_cells,
    }


@dataclass
class ScoredSeason:
    """Scored-pitch rows plus their per-draw swing-edge matrix."""

    season: int
    rows: list
    draws: np.ndarray  # (n_pitches, n_draws)

    def __post_init__(self):
        if len(self.rows) != self.draws.shape[0]:
            raise ValueError("scored rows and draw matrix are misaligned")

    def batter_indexes(self) -> dict:
        out: dict = {}
        for i, row in enumerate(self.rows):
            out.setdefault(row["batter_id"], []).append(i)
        return out


def list_batters(season_data: ScoredSeason, min_pitches: int = 0) -> list:
    counts = {b: len(ix) for b, ix in season_data.batter_indexes().items()}
    return [
        {"batter_id": b, "n_pitches": n, "season": season_data.season}
        for b, n in sorted(counts.items())
        if n >= min_pitches
    ]


def handle_batter_report(season_data: ScoredSeason, batter_id: str,
                         min_pitches: int = 1000, zone: ZoneSpec | None = None) -> dict:
    """Season aggregates plus the per-pitch rows behind the four-panel view."""
    indexes = season_data.batter_indexes().get(batter_id)
    if not indexes:
        raise ApiError("unknown_batter", f"no scored pitches for {batter_id!r}", status=404)
    rows = [season_data.rows[i] for i in indexes]
    diff_draws = season_data.draws[indexes]
    actual_swing = np.array([r["actual"] == "swing" for r in rows])
    report = batter_report(batter_id, diff_draws, actual_swing)

    pitch_like = [
        SimpleNamespace(
            swing=r["actual"] == "swing",
            location=SimpleNamespace(plate_x=r["plate_x"], plate_z=r["plate_z"]),
            sz_top=r["sz_top"], sz_bot=r["sz_bot"],
        )
        for r in rows
    ]
    trad = traditional_metrics(pitch_like, zone)

    def summary(ms):
        return {"mean": ms.mean, "lo": ms.lo, "hi": ms.hi}

    return {
        "batter_id": batter_id,
        "season": season_data.season,
        "n_pitches": report.n_pitches,
        "qualified": report.n_pitches >= min_pitches,
        "min_pitches": min_pitches,
        "proportion_optimal": summary(report.proportion_optimal),
        "runs_added": summary(report.runs_added),
        "runs_lost": summary(report.runs_lost),
        "runs_added_per_pitch": report.runs_added_per_pitch(),
        "runs_lost_per_pitch": report.runs_lost_per_pitch(),
        "panel_counts": report.panels.counts_mean,
        "panel_sums": report.panels.sums_mean,
        "traditional": {
            "correct_decision_pct": trad.correct_decision_pct,
            "o_swing_pct": trad.o_swing_pct,
            "z_swing_pct": trad.z_swing_pct,
        },
        "proportion_optimal_draws": [float(v) for v in report.proportion_optimal.draws],
        "runs_added_draws": [float(v) for v in report.runs_added.draws],
        "runs_lost_draws": [float(v) for v in report.runs_lost.draws],
        "pitches": rows,
    }
