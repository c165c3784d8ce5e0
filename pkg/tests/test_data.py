"""Ingestion, run labels, running quality, partitions, and the cache file."""

import io

import numpy as np
import pytest

from swingdecision.data import (
    DataIntegrityError,
    SchemaError,
    WobaConfig,
    attach_quality,
    classify_description,
    derive_final_scores,
    game_woba,
    label_runs,
    parse_statcast_csv,
    partition,
    read_pitch_cache,
    running_woba,
    write_pitch_cache,
)
from swingdecision.evaluation import SyntheticConfig, synthesize, umpire_table, write_statcast_csv
from swingdecision.util import rng_from_seed

from tests.conftest import make_record, make_state

HEADER = (
    "game_pk,game_year,at_bat_number,pitch_number,balls,strikes,outs_when_up,"
    "on_1b,on_2b,on_3b,inning,inning_topbot,bat_score,fld_score,post_bat_score,"
    "batter,pitcher,fielder_2,stand,p_throws,plate_x,plate_z,sz_top,sz_bot,"
    "description,events"
)


def csv_bytes(rows):
    return ("\n".join([HEADER] + rows) + "\n").encode()


def row(description="called_strike", plate_x="0.1", plate_z="2.4", strikes=0,
        events="", balls=0, post="0"):
    return (
        f"g1,2019,1,1,{balls},{strikes},0,,,,1,Top,0,0,{post},b1,p1,c1,R,R,"
        f"{plate_x},{plate_z},3.4,1.6,{description},{events}"
    )


class TestDescriptionTable:
    def test_called_strike(self):
        assert classify_description("called_strike", 0) == (False, None, True)

    def test_balls(self):
        for d in ("ball", "blocked_ball", "pitchout"):
            assert classify_description(d, 1) == (False, None, False)

    def test_misses(self):
        for d in ("swinging_strike", "swinging_strike_blocked", "missed_bunt"):
            assert classify_description(d, 0) == (True, False, None)

    def test_contact(self):
        for d in ("foul", "hit_into_play", "hit_into_play_score", "foul_bunt"):
            assert classify_description(d, 0) == (True, True, None)

    def test_foul_tip_depends_on_strikes(self):
        assert classify_description("foul_tip", 1) == (True, True, None)
        assert classify_description("foul_tip", 2) == (True, False, None)

    def test_unknown_is_none(self):
        assert classify_description("hit_by_pitch", 0) is None


class TestParse:
    def test_called_strike_row(self):
        records, diag = parse_statcast_csv(csv_bytes([row()]))
        assert diag.parsed == 1
        r = records[0]
        assert r.swing is False and r.called_strike is True and r.gstate == "strike"

    def test_missing_location_dropped(self):
        records, diag = parse_statcast_csv(
            csv_bytes([row(description="hit_into_play", plate_x="")])
        )
        assert not records
        assert diag.missing_location == 1

    def test_implausible_location_dropped(self):
        _, diag = parse_statcast_csv(csv_bytes([row(plate_x="9.5")]))
        assert diag.implausible_location == 1

    def test_undecidable_description_dropped(self):
        _, diag = parse_statcast_csv(csv_bytes([row(description="hit_by_pitch")]))
        assert diag.undecidable_outcome == 1

    def test_malformed_numeric_skips_row(self):
        records, diag = parse_statcast_csv(csv_bytes([row(balls="x"), row()]))
        assert diag.malformed == 1
        assert len(records) == 1

    def test_missing_required_column_names_it(self):
        bad = HEADER.replace("plate_x,", "") + "\n"
        with pytest.raises(SchemaError, match="plate_x"):
            parse_statcast_csv(bad.encode())

    def test_umpire_join(self):
        records, _ = parse_statcast_csv(csv_bytes([row()]), umpire_join={"g1": "ump9"})
        assert records[0].personnel.umpire_id == "ump9"
        records, _ = parse_statcast_csv(csv_bytes([row()]))
        assert records[0].personnel.umpire_id == "UNKNOWN"

    def test_roundtrip_through_synthetic_csv(self, tmp_path):
        records, _ = synthesize(SyntheticConfig(n_pitches=400, seed=2))
        path = tmp_path / "raw.csv"
        write_statcast_csv(records, path)
        parsed, diag = parse_statcast_csv(str(path), umpire_join=umpire_table(records))
        assert diag.parsed == len(records)
        label_runs(parsed)
        for a, b in zip(records, parsed):
            assert a.gstate == b.gstate
            assert a.runs_rest_of_inning == b.runs_rest_of_inning
            assert a.game_state == b.game_state
            assert a.personnel.umpire_id == b.personnel.umpire_id


class TestLabelRuns:
    def make_half(self, scores, post=None, game="g1"):
        records = []
        for i, s in enumerate(scores):
            records.append(make_record(game_pk=game, at_bat=i + 1, bat_score=s,
                                       post_bat_score=post[i] if post else None))
        return records

    def test_no_runs_scored(self):
        records = self.make_half([0, 0, 0], post=[0, 0, 0])
        label_runs(records)
        assert [r.runs_rest_of_inning for r in records] == [0, 0, 0]

    def test_simple_subtraction(self):
        records = self.make_half([2, 2, 4], post=[2, 4, 5])
        label_runs(records)
        # half ends at 5: labels are 3, 3, 1
        assert [r.runs_rest_of_inning for r in records] == [3, 3, 1]

    def test_non_monotone_score_raises(self):
        records = self.make_half([0, 3, 1], post=[3, 3, 3])
        with pytest.raises(DataIntegrityError, match="g1"):
            label_runs(records)

    def test_replay_oracle_on_synthetic_halves(self):
        records, _ = synthesize(SyntheticConfig(n_pitches=2500, seed=5))
        generated = [r.runs_rest_of_inning for r in records]
        for r in records:
            r.runs_rest_of_inning = None
        label_runs(records)
        # oracle: accumulate per-pitch run deltas from the end backwards
        from swingdecision.data import group_half_innings

        for group in group_half_innings(records).values():
            tail = 0
            for r in reversed(group):
                tail += r.post_bat_score - r.bat_score
                assert r.runs_rest_of_inning == tail
        assert [r.runs_rest_of_inning for r in records] == generated

    def test_r_non_increasing_within_half(self):
        records, _ = synthesize(SyntheticConfig(n_pitches=1500, seed=6))
        from swingdecision.data import group_half_innings

        for group in group_half_innings(records).values():
            runs = [r.runs_rest_of_inning for r in group]
            assert all(a >= b for a, b in zip(runs, runs[1:]))

    def test_continuity_fallback(self):
        first = self.make_half([0, 0], game="g2")
        later = [make_record(game_pk="g2", at_bat=9, bat_score=2,
                             state=make_state(inning=2))]
        for r in first + later:
            r.post_bat_score = None
        finals, underivable = derive_final_scores(first + later)
        assert finals[("g2", 1, True)] == 2
        assert ("g2", 2, True) in underivable


class TestWoba:
    def test_first_game_is_league_prior(self):
        quality, _ = running_woba({"g1": ["single"]}, WobaConfig(), 2019)
        assert quality["g1"] == WobaConfig().prior_for(2019)

    def test_single_home_run_game(self):
        config = WobaConfig()
        quality, _ = running_woba({"g1": ["home_run"], "g2": []}, config, 2019)
        assert quality["g2"] == config.weights["home_run"]

    def test_mean_of_two_games(self):
        config = WobaConfig(weights={"single": 0.3, "double": 0.5})
        quality, _ = running_woba(
            {"g1": ["single"], "g2": ["double"], "g3": []}, config, 2019)
        assert quality["g3"] == pytest.approx(0.4)

    def test_unknown_event_excluded(self):
        woba, unknown = game_woba(["single", "mystery_event"], WobaConfig())
        assert unknown == ["mystery_event"]
        assert woba == pytest.approx(WobaConfig().weights["single"])

    def test_no_leakage_from_current_game(self):
        config = WobaConfig()
        base, _ = running_woba({"g1": ["single"], "g2": ["walk"]}, config, 2019)
        perturbed, _ = running_woba({"g1": ["single"], "g2": ["home_run"] * 4}, config, 2019)
        assert base["g2"] == perturbed["g2"]

    def test_attach_quality_fills_records(self):
        records = [
            make_record(game_pk="g1", at_bat=1, event="home_run"),
            make_record(game_pk="g2", at_bat=2),
        ]
        attach_quality(records, WobaConfig())
        config = WobaConfig()
        assert records[0].personnel.batter_quality == config.prior_for(2019)
        assert records[1].personnel.batter_quality == config.weights["home_run"]


class TestPartition:
    def test_by_decision_and_year(self):
        records = [
            make_record(year=2019, swing=True),
            make_record(year=2019, swing=False),
            make_record(year=2016),
            make_record(year=2020),
        ]
        parts = partition(records)
        assert parts.swings == [records[0]]
        assert parts.takes == [records[1]]
        assert parts.rex_train == [records[2]]

    def test_disjoint_and_exhaustive(self):
        rng = rng_from_seed(1)
        records = [
            make_record(at_bat=i, year=int(rng.integers(2015, 2021)),
                        swing=bool(rng.integers(2)))
            for i in range(300)
        ]
        parts = partition(records)
        takes, swings, rex = map(set, (map(id, parts.takes), map(id, parts.swings),
                                       map(id, parts.rex_train)))
        assert not takes & swings
        event = {id(r) for r in records if r.year == 2019}
        assert takes | swings == event


class TestCache:
    def test_field_for_field_round_trip(self, tmp_path):
        records, _ = synthesize(SyntheticConfig(n_pitches=300, seed=7))
        attach_quality(records)
        path = tmp_path / "cache.csv"
        write_pitch_cache(records, path)
        back = read_pitch_cache(path)
        assert back == records

    def test_rejects_untagged_file(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("not,a,cache\n")
        with pytest.raises(ValueError, match="not a pitch cache"):
            read_pitch_cache(path)
