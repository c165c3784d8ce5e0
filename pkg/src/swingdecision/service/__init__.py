"""CLI entry points, model store wiring, and the serving API."""

from .handlers import (
    ApiError,
    GridSpec,
    ScoredSeason,
    WhatIfQuery,
    handle_batter_report,
    handle_whatif,
    list_batters,
)

__all__ = [
    "ApiError",
    "GridSpec",
    "ScoredSeason",
    "WhatIfQuery",
    "handle_batter_report",
    "handle_whatif",
    "list_batters",
]
