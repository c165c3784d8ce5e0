"""Year-to-year stability of per-batter metrics."""

import numpy as np


def year_to_year_correlation(values_by_season: dict, pitches_by_season: dict,
                             min_pitches: int = 1000):
    """Pearson correlation matrix of a per-batter metric across seasons.

    ``values_by_season``: season -> {batter -> metric}; only batters meeting
    the pitch threshold in every season enter. Returns (seasons, matrix).
    """
    seasons = sorted(values_by_season)
    if len(seasons) < 2:
        raise ValueError("need at least two seasons")
    qualified = None
    for season in seasons:
        batters = {
            b for b, n in pitches_by_season[season].items()
            if n >= min_pitches and b in values_by_season[season]
        }
        qualified = batters if qualified is None else qualified & batters
    qualified = sorted(qualified)
    if len(qualified) < 3:
        raise ValueError(
            f"only {len(qualified)} batters qualify at {min_pitches}+ pitches; "
            "correlations would be unstable"
        )
    table = np.array(
        [[values_by_season[s][b] for b in qualified] for s in seasons], dtype=np.float64
    )
    return seasons, np.corrcoef(table)
