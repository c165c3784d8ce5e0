"""Geometry-only plate-discipline heuristics (O-Swing%, Z-Swing%).

The "disciplined" decision under the traditional reading: swing inside the
strike zone, take outside it. The zone half-width defaults to the plate
half-width plus one ball radius; vertical bounds come from the per-pitch
sz_top/sz_bot columns when present, else fixed limits.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ZoneSpec:
    half_width: float = 0.83
    use_pitch_bounds: bool = True
    fixed_bottom: float = 1.5
    fixed_top: float = 3.5

    def __post_init__(self):
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.fixed_bottom >= self.fixed_top:
            raise ValueError("zone bottom must sit below the top")

    def in_zone(self, record) -> bool:
        if self.use_pitch_bounds and record.sz_bot is not None and record.sz_top is not None:
            bottom, top = record.sz_bot, record.sz_top
        else:
            bottom, top = self.fixed_bottom, self.fixed_top
        loc = record.location
        return abs(loc.plate_x) <= self.half_width and bottom <= loc.plate_z <= top


@dataclass
class TraditionalMetrics:
    o_swing_pct: float | None
    z_swing_pct: float | None
    correct_decision_pct: float
    n_pitches: int


def traditional_metrics(records, zone: ZoneSpec | None = None) -> TraditionalMetrics:
    zone = zone or ZoneSpec()
    in_zone_swings = in_zone_takes = out_swings = out_takes = 0
    for record in records:
        inside = zone.in_zone(record)
        if inside:
            if record.swing:
                in_zone_swings += 1
            else:
                in_zone_takes += 1
        elif record.swing:
            out_swings += 1
        else:
            out_takes += 1
    n_in = in_zone_swings + in_zone_takes
    n_out = out_swings + out_takes
    n = n_in + n_out
    if n == 0:
        raise ValueError("no pitches")
    return TraditionalMetrics(
        o_swing_pct=out_swings / n_out if n_out else None,
        z_swing_pct=in_zone_swings / n_in if n_in else None,
        correct_decision_pct=(in_zone_swings + out_takes) / n,
        n_pitches=n,
    )
