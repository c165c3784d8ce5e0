"""The three disjoint training sets: takes, swings, and run-expectancy years."""

from dataclasses import dataclass


@dataclass
class PartitionResult:
    takes: list
    swings: list
    rex_train: list
    event_year: int
    rex_years: tuple

    def summary(self) -> dict:
        return {
            "takes": len(self.takes),
            "swings": len(self.swings),
            "rex_train": len(self.rex_train),
            "event_year": self.event_year,
            "rex_years": list(self.rex_years),
        }


def partition(records, event_year: int = 2019, rex_years: tuple = (2015, 2018)) -> PartitionResult:
    """Split records by decision and season.

    takes / swings cover every pitch of the event season; the run-expectancy
    set covers the inclusive year range. The three sets are pairwise disjoint
    whenever the year ranges are.
    """
    lo, hi = rex_years
    takes, swings, rex_train = [], [], []
    for record in records:
        if record.year == event_year:
            (swings if record.swing else takes).append(record)
        if lo <= record.year <= hi:
            rex_train.append(record)
    return PartitionResult(takes, swings, rex_train, event_year, (lo, hi))
