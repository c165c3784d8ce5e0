"""Pitch data: CSV ingestion, run labels, quality covariates, partitions."""

from .cache import read_pitch_cache, write_pitch_cache
from .labels import derive_final_scores, group_half_innings, half_inning_key, label_runs
from .partition import PartitionResult, partition
from .statcast import (
    DEFAULT_SCHEMA,
    classify_description,
    load_schema_file,
    load_umpire_table,
    parse_statcast_csv,
)
from .types import (
    DataIntegrityError,
    GameState,
    IngestDiagnostics,
    Location,
    Personnel,
    PitchRecord,
    SchemaError,
    derive_gstate,
)
from .woba import DEFAULT_WEIGHTS, WobaConfig, attach_quality, game_woba, running_woba

__all__ = [
    "DEFAULT_SCHEMA",
    "DEFAULT_WEIGHTS",
    "DataIntegrityError",
    "GameState",
    "IngestDiagnostics",
    "Location",
    "PartitionResult",
    "Personnel",
    "PitchRecord",
    "SchemaError",
    "WobaConfig",
    "attach_quality",
    "classify_description",
    "derive_final_scores",
    "derive_gstate",
    "game_woba",
    "group_half_innings",
    "half_inning_key",
    "label_runs",
    "load_schema_file",
    "load_umpire_table",
    "parse_statcast_csv",
    "partition",
    "read_pitch_cache",
    "running_woba",
    "write_pitch_cache",
]
