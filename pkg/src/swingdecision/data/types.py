"""Domain records for one pitch and its ingest diagnostics."""

from dataclasses import dataclass, field

GSTATE_BALL = "ball"
GSTATE_STRIKE = "strike"
GSTATE_CONTACT = "contact"


@dataclass
class GameState:
    balls: int
    strikes: int
    outs: int
    on_first: bool
    on_second: bool
    on_third: bool
    score_diff: int  # batting team minus fielding team
    inning: int
    top_inning: bool

    def validate(self) -> None:
        if not 0 <= self.balls <= 3:
            raise ValueError(f"balls out of range: {self.balls}")
        if not 0 <= self.strikes <= 2:
            raise ValueError(f"strikes out of range: {self.strikes}")
        if not 0 <= self.outs <= 2:
            raise ValueError(f"outs out of range: {self.outs}")
        if self.inning < 1:
            raise ValueError(f"inning out of range: {self.inning}")


@dataclass
class Personnel:
    batter_id: str
    pitcher_id: str
    catcher_id: str
    umpire_id: str
    batter_hand: str  # "L" | "R"
    pitcher_hand: str
    batter_quality: float = 0.0  # running wOBA entering the game
    pitcher_quality: float = 0.0

    def validate(self) -> None:
        for name in ("batter_id", "pitcher_id", "catcher_id", "umpire_id"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be nonempty")
        if self.batter_hand not in ("L", "R") or self.pitcher_hand not in ("L", "R"):
            raise ValueError("handedness must be L or R")
        for name in ("batter_quality", "pitcher_quality"):
            value = getattr(self, name)
            if not value >= 0.0 or value != value:
                raise ValueError(f"{name} must be finite and >= 0")


# Ingest-time plausibility bounds; readings outside them are tracking
# glitches and are dropped (logged), never propagated.
PLATE_X_BOUND = 5.0
PLATE_Z_MIN = -1.0
PLATE_Z_MAX = 8.0


@dataclass
class Location:
    plate_x: float  # feet from the center of home plate, catcher's view
    plate_z: float  # feet above the ground at the front edge of the plate

    def plausible(self) -> bool:
        return (
            abs(self.plate_x) <= PLATE_X_BOUND
            and PLATE_Z_MIN <= self.plate_z <= PLATE_Z_MAX
        )


@dataclass
class PitchRecord:
    game_pk: str
    at_bat_number: int
    pitch_number: int
    year: int
    game_state: GameState
    personnel: Personnel
    location: Location
    swing: bool
    contact: bool | None  # present iff swing
    called_strike: bool | None  # present iff take
    gstate: str
    bat_score: int
    post_bat_score: int | None = None
    runs_rest_of_inning: int | None = None
    event: str | None = None  # plate-appearance outcome on its final pitch
    sz_top: float | None = None
    sz_bot: float | None = None

    def validate(self) -> None:
        self.game_state.validate()
        self.personnel.validate()
        if self.swing:
            if self.contact is None or self.called_strike is not None:
                raise ValueError("swing records carry contact, not called_strike")
        else:
            if self.called_strike is None or self.contact is not None:
                raise ValueError("take records carry called_strike, not contact")
        expected = derive_gstate(self.swing, self.contact, self.called_strike)
        if self.gstate != expected:
            raise ValueError(f"gstate {self.gstate} inconsistent with outcome")
        if self.runs_rest_of_inning is not None and self.runs_rest_of_inning < 0:
            raise ValueError("downstream runs must be >= 0")


def derive_gstate(swing: bool, contact: bool | None, called_strike: bool | None) -> str:
    """Post-pitch game-state label; a called strike and a miss coincide."""
    if swing:
        return GSTATE_CONTACT if contact else GSTATE_STRIKE
    return GSTATE_STRIKE if called_strike else GSTATE_BALL


@dataclass
class IngestDiagnostics:
    rows_read: int = 0
    parsed: int = 0
    missing_location: int = 0
    implausible_location: int = 0
    undecidable_outcome: int = 0
    malformed: int = 0
    unlabeled_runs: int = 0
    messages: list = field(default_factory=list)
    _max_messages: int = 50

    def note(self, message: str) -> None:
        if len(self.messages) < self._max_messages:
            self.messages.append(message)

    def dropped(self) -> int:
        return (
            self.missing_location
            + self.implausible_location
            + self.undecidable_outcome
            + self.malformed
        )

    def report(self) -> str:
        lines = [
            "pitch ingest diagnostics",
            f"rows read:             {self.rows_read}",
            f"records parsed:        {self.parsed}",
            f"missing location:      {self.missing_location}",
            f"implausible location:  {self.implausible_location}",
            f"undecidable outcome:   {self.undecidable_outcome}",
            f"malformed cells:       {self.malformed}",
            f"unlabeled runs:        {self.unlabeled_runs}",
        ]
        if self.messages:
            lines.append("")
            lines.extend(self.messages)
        return "\n".join(lines) + "\n"


class SchemaError(ValueError):
    """A required input column is missing or unusable."""


class DataIntegrityError(ValueError):
    """Input rows contradict each other (e.g. score decreasing mid-inning)."""
