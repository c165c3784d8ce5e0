"""Game-state binning for run-expectancy tables.

Bins are a mixed-radix index over the included factors, most significant
first in the fixed order (count, outs, baserunners):

    count        balls * 3 + strikes            12 levels
    outs         as-is                           3 levels
    baserunners  on_first + 2*on_second + 4*on_third   8 levels

With outs and baserunners included this yields the classic 24-state table;
adding the count gives 288 states.
"""

from dataclasses import dataclass

import numpy as np

_FACTORS = ("count", "outs", "baserunners")
_RADIX = {"count": 12, "outs": 3, "baserunners": 8}


@dataclass(frozen=True)
class BinSpec:
    count: bool = False
    outs: bool = True
    baserunners: bool = True

    def __post_init__(self):
        if not (self.count or self.outs or self.baserunners):
            raise ValueError("bin spec must include at least one factor")

    @property
    def factors(self) -> tuple[str, ...]:
        return tuple(f for f in _FACTORS if getattr(self, f))

    @property
    def n_bins(self) -> int:
        out = 1
        for f in self.factors:
            out *= _RADIX[f]
        return out

    def to_payload(self) -> dict:
        return {"count": self.count, "outs": self.outs, "baserunners": self.baserunners}

    @classmethod
    def from_payload(cls, payload: dict) -> "BinSpec":
        return cls(**payload)

    def label(self) -> str:
        return "+".join(self.factors)


def _factor_value(game_state, factor: str) -> int:
    if factor == "count":
        return game_state.balls * 3 + game_state.strikes
    if factor == "outs":
        return game_state.outs
    return (
        int(game_state.on_first)
        + 2 * int(game_state.on_second)
        + 4 * int(game_state.on_third)
    )


def assign_bin(game_state, spec: BinSpec) -> int:
    idx = 0
    for f in spec.factors:
        idx = idx * _RADIX[f] + _factor_value(game_state, f)
    return idx


def assign_bins(game_states, spec: BinSpec) -> np.ndarray:
    return np.fromiter(
        (assign_bin(g, spec) for g in game_states), dtype=np.int64, count=len(game_states)
    )
