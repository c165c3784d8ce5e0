"""Statcast-style CSV ingestion.

Column names are remappable through a schema dict (logical name -> actual
column). Swing/outcome labels come from the pitch ``description`` via the
table below; rows whose description is not listed carry no usable decision
and are dropped with a diagnostic count.

    called_strike                     -> take, called strike
    ball, blocked_ball, pitchout      -> take, ball
    swinging_strike, swinging_strike_blocked, missed_bunt
                                      -> swing, miss
    foul, foul_bunt, bunt_foul_tip,
    hit_into_play*                    -> swing, contact
    foul_tip                          -> swing, contact; with two strikes it
                                         ends the at bat like a miss
"""

import csv
import io

from .types import (
    GameState,
    IngestDiagnostics,
    Location,
    Personnel,
    PitchRecord,
    SchemaError,
    derive_gstate,
)

DEFAULT_SCHEMA = {
    "balls": "balls",
    "strikes": "strikes",
    "outs": "outs_when_up",
    "on_1b": "on_1b",
    "on_2b": "on_2b",
    "on_3b": "on_3b",
    "inning": "inning",
    "inning_topbot": "inning_topbot",
    "bat_score": "bat_score",
    "fld_score": "fld_score",
    "batter": "batter",
    "pitcher": "pitcher",
    "catcher": "fielder_2",
    "stand": "stand",
    "p_throws": "p_throws",
    "plate_x": "plate_x",
    "plate_z": "plate_z",
    "description": "description",
    "events": "events",
    "game_pk": "game_pk",
    "at_bat_number": "at_bat_number",
    "pitch_number": "pitch_number",
    # year comes from game_year when present, else the game_date prefix
    "game_year": "game_year",
    "game_date": "game_date",
    # optional columns
    "post_bat_score": "post_bat_score",
    "sz_top": "sz_top",
    "sz_bot": "sz_bot",
}

REQUIRED = (
    "balls", "strikes", "outs", "on_1b", "on_2b", "on_3b", "inning",
    "inning_topbot", "bat_score", "fld_score", "batter", "pitcher", "catcher",
    "stand", "p_throws", "plate_x", "plate_z", "description", "events",
    "game_pk", "at_bat_number", "pitch_number",
)

OPTIONAL = ("post_bat_score", "sz_top", "sz_bot", "game_year", "game_date")

_TAKE_STRIKE = {"called_strike"}
_TAKE_BALL = {"ball", "blocked_ball", "pitchout"}
_SWING_MISS = {"swinging_strike", "swinging_strike_blocked", "missed_bunt"}
_SWING_CONTACT = {"foul", "foul_bunt", "bunt_foul_tip"}


def classify_description(description: str, strikes: int):
    """(swing, contact, called_strike) for a description, or None."""
    d = description.strip()
    if d in _TAKE_STRIKE:
        return (False, None, True)
    if d in _TAKE_BALL:
        return (False, None, False)
    if d in _SWING_MISS:
        return (True, False, None)
    if d in _SWING_CONTACT or d.startswith("hit_into_play"):
        return (True, True, None)
    if d == "foul_tip":
        return (True, strikes < 2, None)
    return None


def load_schema_file(path) -> dict:
    """key=value schema overrides; '#' starts a comment."""
    schema = dict(DEFAULT_SCHEMA)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SchemaError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            schema[key] = value
    return schema


def load_umpire_table(path) -> dict:
    """CSV with columns game_pk, umpire_id."""
    table = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"game_pk", "umpire_id"} <= set(reader.fieldnames):
            raise SchemaError("umpire table needs columns game_pk, umpire_id")
        for row in reader:
            table[row["game_pk"].strip()] = row["umpire_id"].strip()
    return table


def _open_text(source):
    if isinstance(source, (str, bytes)) and not isinstance(source, bytes):
        return open(source, newline="", encoding="utf-8")
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        return io.StringIO(data)
    raise TypeError(f"unsupported source {type(source)!r}")


def parse_statcast_csv(source, schema: dict | None = None, umpire_join: dict | None = None):
    """Parse pitch rows into records plus ingest diagnostics.

    Rows with a missing or implausible location, an unlisted description, or
    a malformed numeric cell are dropped and counted; a missing required
    column fails fast with a SchemaError naming it.
    """
    schema = {**DEFAULT_SCHEMA, **(schema or {})}
    umpire_join = umpire_join or {}
    diag = IngestDiagnostics()
    records: list[PitchRecord] = []

    with _open_text(source) as fh:
        reader = csv.DictReader(fh)
        header = set(reader.fieldnames or ())
        for logical in REQUIRED:
            if schema[logical] not in header:
                raise SchemaError(f"missing required column {schema[logical]!r} ({logical})")
        has = {name: schema[name] in header for name in OPTIONAL}
        if not has["game_year"] and not has["game_date"]:
            raise SchemaError("need a season column: game_year or game_date")

        def cell(row, logical):
            return row[schema[logical]].strip()

        def runner(row, logical):
            # Occupied bases carry a runner id; empty/zero/NaN mean vacant.
            value = cell(row, logical).lower()
            return value not in ("", "0", "na", "nan", "none")

        for row in reader:
            diag.rows_read += 1
            try:
                px_raw = cell(row, "plate_x")
                pz_raw = cell(row, "plate_z")
                if not px_raw or not pz_raw:
                    diag.missing_location += 1
                    continue
                location = Location(float(px_raw), float(pz_raw))
                if not location.plausible():
                    diag.implausible_location += 1
                    continue

                strikes = int(cell(row, "strikes"))
                outcome = classify_description(cell(row, "description"), strikes)
                if outcome is None:
                    diag.undecidable_outcome += 1
                    continue
                swing, contact, called_strike = outcome

                bat_score = int(cell(row, "bat_score"))
                fld_score = int(cell(row, "fld_score"))
                game_pk = cell(row, "game_pk")
                if has["game_year"] and cell(row, "game_year"):
                    year = int(cell(row, "game_year"))
                else:
                    year = int(cell(row, "game_date")[:4])

                state = GameState(
                    balls=int(cell(row, "balls")),
                    strikes=strikes,
                    outs=int(cell(row, "outs")),
                    on_first=runner(row, "on_1b"),
                    on_second=runner(row, "on_2b"),
                    on_third=runner(row, "on_3b"),
                    score_diff=bat_score - fld_score,
                    inning=int(cell(row, "inning")),
                    top_inning=cell(row, "inning_topbot").lower().startswith("t"),
                )
                state.validate()
                personnel = Personnel(
                    batter_id=cell(row, "batter"),
                    pitcher_id=cell(row, "pitcher"),
                    catcher_id=cell(row, "catcher") or "UNKNOWN",
                    umpire_id=umpire_join.get(game_pk, "UNKNOWN"),
                    batter_hand=cell(row, "stand"),
                    pitcher_hand=cell(row, "p_throws"),
                )
                personnel.validate()

                record = PitchRecord(
                    game_pk=game_pk,
                    at_bat_number=int(cell(row, "at_bat_number")),
                    pitch_number=int(cell(row, "pitch_number")),
                    year=year,
                    game_state=state,
                    personnel=personnel,
                    location=location,
                    swing=swing,
                    contact=contact,
                    called_strike=called_strike,
                    gstate=derive_gstate(swing, contact, called_strike),
                    bat_score=bat_score,
                    post_bat_score=(
                        int(cell(row, "post_bat_score"))
                        if has["post_bat_score"] and cell(row, "post_bat_score")
                        else None
                    ),
                    event=cell(row, "events") or None,
                    sz_top=float(cell(row, "sz_top")) if has["sz_top"] and cell(row, "sz_top") else None,
                    sz_bot=float(cell(row, "sz_bot")) if has["sz_bot"] and cell(row, "sz_bot") else None,
                )
            except (ValueError, KeyError) as exc:
                diag.malformed += 1
                diag.note(f"row {diag.rows_read}: {exc}")
                continue
            records.append(record)
            diag.parsed += 1
    return records, diag
