"""Downstream-run labels: runs the batting team scores from each pitch on.

The label for a pitch is the half-inning's final batting-team score minus
the score when the pitch was thrown, so runs scored on the pitch itself are
included.
"""

from collections import defaultdict

from .types import DataIntegrityError, PitchRecord


def half_inning_key(record: PitchRecord) -> tuple:
    return (record.game_pk, record.game_state.inning, record.game_state.top_inning)


def group_half_innings(records) -> dict:
    """Records per half-inning, each group in pitch order."""
    groups: dict = defaultdict(list)
    for record in records:
        groups[half_inning_key(record)].append(record)
    for group in groups.values():
        group.sort(key=lambda r: (r.at_bat_number, r.pitch_number))
    return dict(groups)


def derive_final_scores(records):
    """Final batting-team score per half-inning.

    Prefers the post-pitch score of the half-inning's last pitch; when that
    column was absent, falls back to the batting team's score at its next
    turn in the same game. Half-innings with neither are returned separately
    so callers can drop and count them.
    """
    groups = group_half_innings(records)
    finals: dict = {}
    underivable: list = []

    next_turn_score: dict = {}
    by_game_team: dict = defaultdict(list)
    for key, group in groups.items():
        game_pk, inning, top = key
        by_game_team[(game_pk, top)].append((inning, group))
    for (game_pk, top), turns in by_game_team.items():
        turns.sort()
        for (inning, _), (_, later_group) in zip(turns, turns[1:]):
            next_turn_score[(game_pk, inning, top)] = later_group[0].bat_score

    for key, group in groups.items():
        last = group[-1]
        if last.post_bat_score is not None:
            finals[key] = last.post_bat_score
        elif key in next_turn_score:
            finals[key] = next_turn_score[key]
        else:
            underivable.append(key)
    return finals, underivable


def label_runs(records, final_scores: dict | None = None):
    """Populate every record's downstream-run label in place.

    Returns the labeled records. Raises DataIntegrityError when a batting
    team's score decreases within a half-inning.
    """
    if final_scores is None:
        final_scores, underivable = derive_final_scores(records)
        if underivable:
            key = underivable[0]
            raise DataIntegrityError(
                f"no final score for half-inning {key} (and {len(underivable) - 1} more); "
                "provide final_scores or a post_bat_score column"
            )
    groups = group_half_innings(records)
    for key, group in groups.items():
        final = final_scores[key]
        prev = None
        for record in group:
            if prev is not None and record.bat_score < prev:
                raise DataIntegrityError(
                    f"score decreases within half-inning in game {key[0]}"
                )
            prev = record.bat_score
            runs = final - record.bat_score
            if runs < 0:
                raise DataIntegrityError(
                    f"final score below pitch score in game {key[0]}"
                )
            record.runs_rest_of_inning = runs
    return records
