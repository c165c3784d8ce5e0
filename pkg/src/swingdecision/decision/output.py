"""Scored-pitch artifacts: a delimited summary plus an optional draw dump.

The CSV carries one row per pitch (keys, context, decision summary); the
companion ``.npz`` holds the full per-draw matrix aligned row-for-row so
downstream metrics can recompute panel sums per draw.
"""

import csv

import numpy as np

SCORED_COLUMNS = (
    "game_pk", "at_bat_number", "pitch_number", "year", "batter_id",
    "plate_x", "plate_z", "balls", "strikes", "outs",
    "on_first", "on_second", "on_third", "sz_top", "sz_bot",
    "actual", "mean_evdiff", "lo", "hi", "p_swing_optimal", "optimal", "panel",
)


def write_scored(records, summaries, path) -> None:
    if len(records) != len(summaries):
        raise ValueError("records and summaries differ in length")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(SCORED_COLUMNS)
        for r, s in zip(records, summaries):
            g = r.game_state
            writer.writerow([
                r.game_pk, r.at_bat_number, r.pitch_number, r.year,
                r.personnel.batter_id,
                repr(r.location.plate_x), repr(r.location.plate_z),
                g.balls, g.strikes, g.outs,
                int(g.on_first), int(g.on_second), int(g.on_third),
                "" if r.sz_top is None else repr(r.sz_top),
                "" if r.sz_bot is None else repr(r.sz_bot),
                s.actual, repr(s.mean), repr(s.lo), repr(s.hi),
                repr(s.p_swing_optimal), s.optimal, s.panel or "",
            ])


def read_scored(path) -> list:
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            rows.append({
                "game_pk": row["game_pk"],
                "at_bat_number": int(row["at_bat_number"]),
                "pitch_number": int(row["pitch_number"]),
                "year": int(row["year"]),
                "batter_id": row["batter_id"],
                "plate_x": float(row["plate_x"]),
                "plate_z": float(row["plate_z"]),
                "balls": int(row["balls"]),
                "strikes": int(row["strikes"]),
                "outs": int(row["outs"]),
                "on_first": row["on_first"] == "1",
                "on_second": row["on_second"] == "1",
                "on_third": row["on_third"] == "1",
                "sz_top": float(row["sz_top"]) if row["sz_top"] else None,
                "sz_bot": float(row["sz_bot"]) if row["sz_bot"] else None,
                "actual": row["actual"],
                "mean_evdiff": float(row["mean_evdiff"]),
                "lo": float(row["lo"]),
                "hi": float(row["hi"]),
                "p_swing_optimal": float(row["p_swing_optimal"]),
                "optimal": row["optimal"],
                "panel": row["panel"] or None,
            })
    return rows


def write_evdiff_draws(records, summaries, path) -> None:
    keys = np.array(
        [f"{r.game_pk}|{r.at_bat_number}|{r.pitch_number}" for r in records]
    )
    draws = np.stack([s.draws for s in summaries])
    np.savez_compressed(path, keys=keys, draws=draws)


def read_evdiff_draws(path):
    data = np.load(path, allow_pickle=False)
    return data["keys"], data["draws"]
