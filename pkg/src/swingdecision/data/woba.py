"""Running player-quality covariates from weighted on-base average.

A player's quality entering game t is the mean of their per-game wOBA over
games 1..t-1 of the season; before their first game it is the previous
season's league average. Weights are standard published linear weights and
can be overridden in config.
"""

from collections import defaultdict
from dataclasses import dataclass, field

DEFAULT_WEIGHTS = {
    "walk": 0.69,
    "hit_by_pitch": 0.72,
    "single": 0.89,
    "double": 1.27,
    "triple": 1.62,
    "home_run": 2.10,
}

# Plate-appearance outcomes that enter the denominator with weight zero.
OUT_EVENTS = {
    "strikeout", "strikeout_double_play", "field_out", "force_out",
    "grounded_into_double_play", "double_play", "triple_play",
    "fielders_choice", "fielders_choice_out", "field_error", "sac_fly",
    "sac_fly_double_play", "other_out",
}

# Recognized but excluded from both numerator and denominator.
NEUTRAL_EVENTS = {"sac_bunt", "sac_bunt_double_play", "catcher_interf", "intent_walk", "truncated_pa"}

DEFAULT_LEAGUE_PRIOR = 0.320


@dataclass
class WobaConfig:
    weights: dict = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))
    count_outs_in_denominator: bool = True
    exclude_neutral_events: bool = True
    league_prior: dict | float = DEFAULT_LEAGUE_PRIOR  # per season, or one value

    def __post_init__(self):
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("wOBA weights must be >= 0")
        priors = (
            self.league_prior.values()
            if isinstance(self.league_prior, dict)
            else [self.league_prior]
        )
        if any(p <= 0 for p in priors):
            raise ValueError("league prior must be positive")

    def prior_for(self, year: int) -> float:
        if isinstance(self.league_prior, dict):
            return self.league_prior.get(year, DEFAULT_LEAGUE_PRIOR)
        return self.league_prior


def game_woba(events, config: WobaConfig):
    """(wOBA, diagnostics) for one game's plate-appearance events.

    Returns (None, ...) when no event qualifies for the denominator.
    """
    numer = 0.0
    denom = 0
    unknown = []
    for event in events:
        if event in config.weights:
            numer += config.weights[event]
            denom += 1
        elif event in OUT_EVENTS:
            if config.count_outs_in_denominator:
                denom += 1
        elif event in NEUTRAL_EVENTS and config.exclude_neutral_events:
            continue
        else:
            unknown.append(event)
    if denom == 0:
        return None, unknown
    return numer / denom, unknown


def running_woba(game_events: dict, config: WobaConfig, year: int):
    """Per-game quality for one player from their per-game event lists.

    ``game_events`` maps an orderable game key to that game's events; quality
    entering game t averages the per-game wOBA of strictly earlier games, so
    a game's own events never influence its own value.
    """
    quality: dict = {}
    history: list[float] = []
    unknown_all: list[str] = []
    for game_key in sorted(game_events):
        if history:
            quality[game_key] = sum(history) / len(history)
        else:
            quality[game_key] = config.prior_for(year)
        woba, unknown = game_woba(game_events[game_key], config)
        unknown_all.extend(unknown)
        if woba is not None:
            history.append(woba)
    return quality, unknown_all


def _collect_events(records, id_getter):
    """(year, player) -> game_pk -> PA events, deduped by at-bat.

    Every appearance registers its game (possibly with no qualifying events)
    so the running average is defined for event-less games too.
    """
    seen = set()
    events: dict = defaultdict(dict)
    for record in records:
        player = id_getter(record)
        games = events[(record.year, player)]
        games.setdefault(record.game_pk, [])
        if record.event is None:
            continue
        key = (record.game_pk, record.at_bat_number)
        if key in seen:
            continue
        seen.add(key)
        games[record.game_pk].append(record.event)
    return events


def attach_quality(records, config: WobaConfig | None = None):
    """Fill batter_quality and pitcher_quality on every record, in place.

    Returns the list of event codes that were not recognized (each occurrence
    was excluded from both numerator and denominator).
    """
    config = config or WobaConfig()
    unknown: list[str] = []
    for attr, getter in (
        ("batter_quality", lambda r: r.personnel.batter_id),
        ("pitcher_quality", lambda r: r.personnel.pitcher_id),
    ):
        per_player = _collect_events(records, getter)
        tables = {}
        for (year, player), games in per_player.items():
            table, bad = running_woba(games, config, year)
            unknown.extend(bad)
            tables[(year, player)] = table
        for record in records:
            table = tables.get((record.year, getter(record)), {})
            value = table.get(record.game_pk)
            if value is None:
                value = config.prior_for(record.year)
            setattr(record.personnel, attr, value)
    return unknown
