"""Cross-validation harness and the synthetic ground-truth fixture."""

from .baselines import ConstantBaseline, LocationGridBaseline
from .cv import (
    CvPlan,
    CvResult,
    ModelSpec,
    RelativeMse,
    kfold_split,
    relative_mse,
    run_cv,
    write_cv_report,
)
from .synthetic import (
    SyntheticConfig,
    SyntheticTruth,
    synthesize,
    umpire_table,
    write_statcast_csv,
    write_umpire_csv,
)

__all__ = [
    "ConstantBaseline",
    "CvPlan",
    "CvResult",
    "LocationGridBaseline",
    "ModelSpec",
    "RelativeMse",
    "SyntheticConfig",
    "SyntheticTruth",
    "kfold_split",
    "relative_mse",
    "run_cv",
    "synthesize",
    "umpire_table",
    "write_cv_report",
    "write_statcast_csv",
    "write_umpire_csv",
]
