"""HTTP API over the fitted models and scored-pitch store.

    POST /whatif                         decision surface for a context
    GET  /batters?season=Y&min_pitches=N scored batters
    GET  /batters/{id}/report?season=Y   season aggregates + per-pitch rows
    GET  /health                         liveness + loaded artifacts

Errors come back as {"error": {"code", "message"}} with a matching status.
"""

import re
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..data.types import GameState
from ..decision.output import read_evdiff_draws, read_scored
from .handlers import (
    ApiError,
    GridSpec,
    ScoredSeason,
    WhatIfQuery,
    handle_batter_report,
    handle_whatif,
    list_batters,
)

SCORED_PATTERN = re.compile(r"scored_(\d{4})\.csv$")


class GameStateBody(BaseModel):
    balls: int = 0
    strikes: int = 0
    outs: int = 0
    on_first: bool = False
    on_second: bool = False
    on_third: bool = False
    score_diff: int = 0
    inning: int = 1
    top_inning: bool = True


class GridBody(BaseModel):
    x_min: float = -2.0
    x_max: float = 2.0
    z_min: float = 0.5
    z_max: float = 4.5
    nx: int = 41
    nz: int = 41


class WhatIfBody(BaseModel):
    game_state: GameStateBody = Field(default_factory=GameStateBody)
    batter_id: str = "GENERIC"
    pitcher_id: str = "GENERIC"
    catcher_id: str = "GENERIC"
    umpire_id: str = "GENERIC"
    batter_hand: str = "R"
    pitcher_hand: str = "R"
    batter_quality: float | None = None
    pitcher_quality: float | None = None
    x: float | None = None
    z: float | None = None
    grid: GridBody | None = None
    n_draws: int | None = 200
    seed: int = 0


def load_scored_dir(scored_dir) -> dict:
    """scored_{year}.csv plus scored_{year}_draws.npz per season."""
    seasons: dict = {}
    root = Path(scored_dir)
    for csv_path in sorted(root.glob("scored_*.csv")):
        match = SCORED_PATTERN.search(csv_path.name)
        if not match:
            continue
        season = int(match.group(1))
        draws_path = root / f"scored_{season}_draws.npz"
        if not draws_path.exists():
            continue
        rows = read_scored(csv_path)
        _, draws = read_evdiff_draws(draws_path)
        seasons[season] = ScoredSeason(season=season, rows=rows, draws=draws)
    return seasons


def build_app(strike_model, contact_model, runs_model, seasons: dict | None = None,
              frontend_dist=None) -> FastAPI:
    app = FastAPI(title="swingdecision", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"],
    )
    seasons = seasons or {}

    @app.exception_handler(ApiError)
    async def api_error_handler(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": {"code": exc.code, "message": exc.message}},
        )

    @app.get("/health")
    def health():
        return {
            "status": "ok",
            "models": {
                "strike": strike_model is not None,
                "contact": contact_model is not None,
                "runs": runs_model is not None,
            },
            "seasons": sorted(seasons),
        }

    @app.post("/whatif")
    def whatif(body: WhatIfBody):
        if strike_model is None or contact_model is None or runs_model is None:
            raise ApiError("models_missing", "strike, contact, and runs models are required", 503)
        grid = None
        location = None
        if body.grid is not None:
            grid = GridSpec(**body.grid.model_dump())
        elif body.x is not None and body.z is not None:
            location = (body.x, body.z)
        else:
            raise ApiError("bad_query", "provide x,z or a grid")
        query = WhatIfQuery(
            game_state=GameState(**body.game_state.model_dump()),
            batter_id=body.batter_id,
            pitcher_id=body.pitcher_id,
            catcher_id=body.catcher_id,
            umpire_id=body.umpire_id,
            batter_hand=body.batter_hand,
            pitcher_hand=body.pitcher_hand,
            batter_quality=body.batter_quality,
            pitcher_quality=body.pitcher_quality,
            location=location,
            grid=grid,
            n_draws=body.n_draws,
            seed=body.seed,
        )
        return handle_whatif(strike_model, contact_model, runs_model, query)

    def _season(season: int | None) -> ScoredSeason:
        if not seasons:
            raise ApiError("no_scored_data", "no scored seasons loaded", 503)
        if season is None:
            season = max(seasons)
        if season not in seasons:
            raise ApiError("unknown_season", f"no scored data for {season}", 404)
        return seasons[season]

    @app.get("/batters")
    def batters(season: int | None = None, min_pitches: int = 0):
        return {"batters": list_batters(_season(season), min_pitches)}

    @app.get("/batters/{batter_id}/report")
    def report(batter_id: str, season: int | None = None, min_pitches: int = 1000):
        return handle_batter_report(_season(season), batter_id, min_pitches)

    if frontend_dist is not None and Path(frontend_dist).is_dir():
        app.mount("/ui", StaticFiles(directory=frontend_dist, html=True), name="ui")

    return app
