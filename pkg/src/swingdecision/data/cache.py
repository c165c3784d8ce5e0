"""Delimited cache of parsed pitch records.

First line is a version tag, then a plain CSV. Floats are written with
repr so a read-back record reproduces the original field-for-field.
"""

import csv

from .types import GameState, Location, Personnel, PitchRecord

CACHE_TAG = "#swingdecision-pitch-cache v1"

_COLUMNS = (
    "game_pk", "at_bat_number", "pitch_number", "year",
    "balls", "strikes", "outs", "on_first", "on_second", "on_third",
    "score_diff", "inning", "top_inning",
    "batter_id", "pitcher_id", "catcher_id", "umpire_id",
    "batter_hand", "pitcher_hand", "batter_quality", "pitcher_quality",
    "plate_x", "plate_z", "swing", "contact", "called_strike", "gstate",
    "bat_score", "post_bat_score", "runs_rest_of_inning", "event",
    "sz_top", "sz_bot",
)


def _opt(value):
    return "" if value is None else value


def _fmt_bool(value):
    return "" if value is None else ("1" if value else "0")


def _parse_bool(text):
    return None if text == "" else text == "1"


def _parse_opt_int(text):
    return None if text == "" else int(text)


def _parse_opt_float(text):
    return None if text == "" else float(text)


def write_pitch_cache(records, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(CACHE_TAG + "\n")
        writer = csv.writer(fh)
        writer.writerow(_COLUMNS)
        for r in records:
            g, p, loc = r.game_state, r.personnel, r.location
            writer.writerow([
                r.game_pk, r.at_bat_number, r.pitch_number, r.year,
                g.balls, g.strikes, g.outs,
                _fmt_bool(g.on_first), _fmt_bool(g.on_second), _fmt_bool(g.on_third),
                g.score_diff, g.inning, _fmt_bool(g.top_inning),
                p.batter_id, p.pitcher_id, p.catcher_id, p.umpire_id,
                p.batter_hand, p.pitcher_hand,
                repr(p.batter_quality), repr(p.pitcher_quality),
                repr(loc.plate_x), repr(loc.plate_z),
                _fmt_bool(r.swing), _fmt_bool(r.contact), _fmt_bool(r.called_strike),
                r.gstate, r.bat_score, _opt(r.post_bat_score),
                _opt(r.runs_rest_of_inning), _opt(r.event),
                "" if r.sz_top is None else repr(r.sz_top),
                "" if r.sz_bot is None else repr(r.sz_bot),
            ])


def read_pitch_cache(path) -> list:
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        tag = fh.readline().strip()
        if tag != CACHE_TAG:
            raise ValueError(f"not a pitch cache (header {tag!r})")
        reader = csv.DictReader(fh)
        for row in reader:
            records.append(PitchRecord(
                game_pk=row["game_pk"],
                at_bat_number=int(row["at_bat_number"]),
                pitch_number=int(row["pitch_number"]),
                year=int(row["year"]),
                game_state=GameState(
                    balls=int(row["balls"]),
                    strikes=int(row["strikes"]),
                    outs=int(row["outs"]),
                    on_first=_parse_bool(row["on_first"]),
                    on_second=_parse_bool(row["on_second"]),
                    on_third=_parse_bool(row["on_third"]),
                    score_diff=int(row["score_diff"]),
                    inning=int(row["inning"]),
                    top_inning=_parse_bool(row["top_inning"]),
                ),
                personnel=Personnel(
                    batter_id=row["batter_id"],
                    pitcher_id=row["pitcher_id"],
                    catcher_id=row["catcher_id"],
                    umpire_id=row["umpire_id"],
                    batter_hand=row["batter_hand"],
                    pitcher_hand=row["pitcher_hand"],
                    batter_quality=float(row["batter_quality"]),
                    pitcher_quality=float(row["pitcher_quality"]),
                ),
                location=Location(float(row["plate_x"]), float(row["plate_z"])),
                swing=_parse_bool(row["swing"]),
                contact=_parse_bool(row["contact"]),
                called_strike=_parse_bool(row["called_strike"]),
                gstate=row["gstate"],
                bat_score=int(row["bat_score"]),
                post_bat_score=_parse_opt_int(row["post_bat_score"]),
                runs_rest_of_inning=_parse_opt_int(row["runs_rest_of_inning"]),
                event=row["event"] or None,
                sz_top=_parse_opt_float(row["sz_top"]),
                sz_bot=_parse_opt_float(row["sz_bot"]),
            ))
    return records
