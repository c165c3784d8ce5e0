"""Synthetic pitch generator with known ground truth.

Strike and contact probabilities are smooth logistic functions of the scaled
distance from the zone center plus per-umpire / per-batter offsets. Run
labels come from simulating each half-inning to completion with a small
transition model (walks and strikeouts from count bookkeeping, a fixed
in-play event distribution, single-base advancement), so every downstream-run
label is an exact replay of the simulated event log.
"""

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from ..data.types import GameState, Location, Personnel, PitchRecord, derive_gstate
from ..util import rng_from_seed

DEFAULT_INPLAY = {
    "field_out": 0.75,
    "single": 0.155,
    "double": 0.05,
    "triple": 0.005,
    "home_run": 0.04,
}


@dataclass
class SyntheticConfig:
    n_pitches: int = 20000
    seed: int = 0
    year: int = 2019
    n_batters: int = 50
    n_pitchers: int = 30
    n_catchers: int = 10
    n_umpires: int = 8
    # zone geometry used by the true surfaces
    zone_center_z: float = 2.5
    zone_rx: float = 0.83
    zone_rz: float = 1.0
    # strike surface: logit = edge_logit - slope * (d - 1) + umpire offset
    strike_edge_logit: float = 0.0
    strike_slope: float = 6.0
    umpire_sd: float = 0.3
    # contact surface: logit = base - slope * d + batter offset
    contact_base_logit: float = 2.2
    contact_slope: float = 1.4
    batter_sd: float = 0.25
    # swing policy: logit = base - slope * (d - 1)
    swing_base_logit: float = 0.6
    swing_slope: float = 1.4
    # half-inning transition probabilities
    foul_prob: float = 0.35
    inplay_probs: dict = field(default_factory=lambda: dict(DEFAULT_INPLAY))
    # pitch location distribution
    loc_x_sd: float = 0.9
    loc_z_sd: float = 0.8

    def __post_init__(self):
        total = sum(self.inplay_probs.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"in-play probabilities sum to {total}, not 1")
        for p in (self.foul_prob, *self.inplay_probs.values()):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")


def _sigmoid(x: float) -> float:
    return 1.0 / (1.0 + math.exp(-x))


@dataclass
class SyntheticTruth:
    config: SyntheticConfig
    umpire_offsets: dict
    batter_offsets: dict

    def _distance(self, x: float, z: float) -> float:
        c = self.config
        return math.sqrt((x / c.zone_rx) ** 2 + ((z - c.zone_center_z) / c.zone_rz) ** 2)

    def strike_prob(self, x: float, z: float, umpire_id: str) -> float:
        c = self.config
        logit = (
            c.strike_edge_logit
            - c.strike_slope * (self._distance(x, z) - 1.0)
            + self.umpire_offsets.get(umpire_id, 0.0)
        )
        return _sigmoid(logit)

    def contact_prob(self, x: float, z: float, batter_id: str) -> float:
        c = self.config
        logit = (
            c.contact_base_logit
            - c.contact_slope * self._distance(x, z)
            + self.batter_offsets.get(batter_id, 0.0)
        )
        return _sigmoid(logit)

    def swing_prob(self, x: float, z: float) -> float:
        c = self.config
        return _sigmoid(c.swing_base_logit - c.swing_slope * (self._distance(x, z) - 1.0))


class _Bases:
    __slots__ = ("first", "second", "third")

    def __init__(self):
        self.first = self.second = self.third = False

    def force_walk(self) -> int:
        runs = 0
        if self.first and self.second and self.third:
            runs = 1
        elif self.first and self.second:
            self.third = True
        elif self.first:
            self.second = True
        self.first = True
        return runs

    def advance(self, n_bases: int) -> int:
        """Batter reaches n_bases; every runner advances the same amount."""
        runs = 0
        for _ in range(n_bases):
            if self.third:
                runs += 1
            self.third, self.second, self.first = self.second, self.first, False
        if n_bases == 1:
            self.first = True
        elif n_bases == 2:
            self.second = True
        elif n_bases == 3:
            self.third = True
        else:  # home run
            runs += 1
        return runs


def synthesize(config: SyntheticConfig | None = None):
    """Generate at least ``n_pitches`` records plus the true surfaces.

    Generation always finishes the half-inning in progress so run labels are
    exact; the returned list may therefore slightly exceed the target count.
    """
    config = config or SyntheticConfig()
    rng = rng_from_seed(config.seed)

    batters = [f"b{i:03d}" for i in range(config.n_batters)]
    pitchers = [f"p{i:03d}" for i in range(config.n_pitchers)]
    catchers = [f"c{i:03d}" for i in range(config.n_catchers)]
    umpires = [f"u{i:03d}" for i in range(config.n_umpires)]
    batter_hand = {b: ("L" if rng.random() < 0.3 else "R") for b in batters}
    pitcher_hand = {p: ("L" if rng.random() < 0.3 else "R") for p in pitchers}
    batter_quality = {b: float(np.clip(0.320 + rng.normal(0, 0.03), 0.2, 0.5)) for b in batters}
    pitcher_quality = {p: float(np.clip(0.320 + rng.normal(0, 0.02), 0.2, 0.5)) for p in pitchers}

    truth = SyntheticTruth(
        config=config,
        umpire_offsets={u: float(rng.normal(0, config.umpire_sd)) for u in umpires},
        batter_offsets={b: float(rng.normal(0, config.batter_sd)) for b in batters},
    )

    events = sorted(config.inplay_probs)
    event_p = np.array([config.inplay_probs[e] for e in events])
    records: list[PitchRecord] = []
    game_index = 0

    while len(records) < config.n_pitches:
        game_index += 1
        game_pk = f"syn{config.year}-{game_index:05d}"
        umpire = umpires[int(rng.integers(config.n_umpires))]
        catcher = catchers[int(rng.integers(config.n_catchers))]
        score = {True: 0, False: 0}  # batting-team totals by top flag
        at_bat_number = 0

        for inning in range(1, 10):
            for top in (True, False):
                outs = 0
                bases = _Bases()
                half_records: list[PitchRecord] = []
                pitcher = pitchers[int(rng.integers(config.n_pitchers))]
                while outs < 3:
                    at_bat_number += 1
                    batter = batters[int(rng.integers(config.n_batters))]
                    balls = strikes = 0
                    pitch_number = 0
                    event = None
                    while event is None:
                        pitch_number += 1
                        x = float(np.clip(rng.normal(0.0, config.loc_x_sd), -2.5, 2.5))
                        z = float(np.clip(rng.normal(config.zone_center_z, config.loc_z_sd), 0.0, 5.0))
                        swing = rng.random() < truth.swing_prob(x, z)
                        runs_on_play = 0
                        if swing:
                            contact = rng.random() < truth.contact_prob(x, z, batter)
                            called_strike = None
                            if contact:
                                if rng.random() < config.foul_prob:
                                    play = "foul"
                                else:
                                    play = events[int(rng.choice(len(events), p=event_p))]
                            else:
                                play = "strike"
                        else:
                            contact = None
                            called_strike = rng.random() < truth.strike_prob(x, z, umpire)
                            play = "strike" if called_strike else "ball"

                        record = PitchRecord(
                            game_pk=game_pk,
                            at_bat_number=at_bat_number,
                            pitch_number=pitch_number,
                            year=config.year,
                            game_state=GameState(
                                balls=balls, strikes=strikes, outs=outs,
                                on_first=bases.first, on_second=bases.second,
                                on_third=bases.third,
                                score_diff=score[top] - score[not top],
                                inning=inning, top_inning=top,
                            ),
                            personnel=Personnel(
                                batter_id=batter, pitcher_id=pitcher,
                                catcher_id=catcher, umpire_id=umpire,
                                batter_hand=batter_hand[batter],
                                pitcher_hand=pitcher_hand[pitcher],
                                batter_quality=batter_quality[batter],
                                pitcher_quality=pitcher_quality[pitcher],
                            ),
                            location=Location(x, z),
                            swing=swing,
                            contact=contact,
                            called_strike=called_strike,
                            gstate=derive_gstate(swing, contact, called_strike),
                            bat_score=score[top],
                            sz_top=config.zone_center_z + config.zone_rz,
                            sz_bot=config.zone_center_z - config.zone_rz,
                        )

                        if play == "ball":
                            balls += 1
                            if balls == 4:
                                event = "walk"
                                runs_on_play = bases.force_walk()
                        elif play == "strike":
                            strikes += 1
                            if strikes == 3:
                                event = "strikeout"
                                outs += 1
                        elif play == "foul":
                            if strikes < 2:
                                strikes += 1
                        elif play == "field_out":
                            event = play
                            outs += 1
                        else:  # single / double / triple / home_run
                            event = play
                            runs_on_play = bases.advance(
                                {"single": 1, "double": 2, "triple": 3, "home_run": 4}[play]
                            )
                        score[top] += runs_on_play
                        record.post_bat_score = score[top]
                        half_records.append(record)
                    half_records[-1].event = event
                final = score[top]
                for record in half_records:
                    record.runs_rest_of_inning = final - record.bat_score
                records.extend(half_records)
    return records, truth


def _statcast_description(record: PitchRecord) -> str:
    if not record.swing:
        return "called_strike" if record.called_strike else "ball"
    if not record.contact:
        return "swinging_strike"
    in_play = record.event in ("single", "double", "triple", "home_run", "field_out")
    return "hit_into_play" if in_play else "foul"


def write_statcast_csv(records, path) -> None:
    """Emit records in raw Statcast column format (for exercising ingest)."""
    columns = [
        "game_pk", "game_year", "at_bat_number", "pitch_number",
        "balls", "strikes", "outs_when_up", "on_1b", "on_2b", "on_3b",
        "inning", "inning_topbot", "bat_score", "fld_score", "post_bat_score",
        "batter", "pitcher", "fielder_2", "stand", "p_throws",
        "plate_x", "plate_z", "sz_top", "sz_bot", "description", "events",
    ]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        for r in records:
            g = r.game_state
            writer.writerow([
                r.game_pk, r.year, r.at_bat_number, r.pitch_number,
                g.balls, g.strikes, g.outs,
                "900001" if g.on_first else "",
                "900002" if g.on_second else "",
                "900003" if g.on_third else "",
                g.inning, "Top" if g.top_inning else "Bot",
                r.bat_score, r.bat_score - g.score_diff, r.post_bat_score,
                r.personnel.batter_id, r.personnel.pitcher_id,
                r.personnel.catcher_id, r.personnel.batter_hand,
                r.personnel.pitcher_hand,
                repr(r.location.plate_x), repr(r.location.plate_z),
                "" if r.sz_top is None else repr(r.sz_top),
                "" if r.sz_bot is None else repr(r.sz_bot),
                _statcast_description(r), r.event or "",
            ])


def umpire_table(records) -> dict:
    """game_pk -> umpire id join table for the generated games."""
    return {r.game_pk: r.personnel.umpire_id for r in records}


def write_umpire_csv(records, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["game_pk", "umpire_id"])
        for game_pk, umpire in sorted(umpire_table(records).items()):
            writer.writerow([game_pk, umpire])
