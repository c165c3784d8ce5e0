"""Design-matrix construction for the three component models.

Predictors are split into a numeric block and a categorical block. The
game-state block (count, outs, runners, score, inning), the personnel block
(identities, handedness, running quality), and pitch location can each be
included or excluded so that the cross-validation harness can fit every
predictor subset.
"""

from dataclasses import dataclass

import numpy as np

from .util import stable_uhash

GSTATE_LEVELS = ("ball", "strike", "contact")


@dataclass
class PredictorMetadata:
    numeric_names: list[str]
    categorical_names: list[str]
    levels: list[dict]  # per categorical predictor: raw id -> code

    def n_levels(self, j: int) -> int:
        return len(self.levels[j])

    def to_payload(self) -> dict:
        return {
            "numeric": list(self.numeric_names),
            "categorical": list(self.categorical_names),
            "levels": [sorted(d.items(), key=lambda kv: kv[1]) for d in self.levels],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "PredictorMetadata":
        return cls(
            numeric_names=list(payload["numeric"]),
            categorical_names=list(payload["categorical"]),
            levels=[dict((str(k), int(v)) for k, v in pairs) for pairs in payload["levels"]],
        )


@dataclass
class Design:
    x_num: np.ndarray
    x_cat: np.ndarray
    x_uhash: np.ndarray
    meta: PredictorMetadata

    @property
    def n_rows(self) -> int:
        return self.x_num.shape[0] if self.meta.numeric_names else self.x_cat.shape[0]


def build_metadata(numeric_names, categorical_columns: dict) -> PredictorMetadata:
    """Metadata from training columns; level codes follow sorted raw ids."""
    names = list(categorical_columns)
    levels = []
    for name in names:
        uniq = sorted({str(v) for v in categorical_columns[name]})
        levels.append({raw: code for code, raw in enumerate(uniq)})
    return PredictorMetadata(list(numeric_names), names, levels)


def encode_design(meta: PredictorMetadata, numeric_columns: dict, categorical_columns: dict) -> Design:
    """Encode raw columns against fixed metadata.

    Categorical values absent from the metadata get code -1 plus a stable
    64-bit hash so the routing kernels can place them deterministically.
    """
    n = len(next(iter(numeric_columns.values()))) if numeric_columns else len(
        next(iter(categorical_columns.values()))
    )
    x_num = np.empty((n, len(meta.numeric_names)), dtype=np.float64, order="C")
    for j, name in enumerate(meta.numeric_names):
        x_num[:, j] = np.asarray(numeric_columns[name], dtype=np.float64)
    x_cat = np.empty((n, len(meta.categorical_names)), dtype=np.int64, order="C")
    x_uhash = np.zeros((n, len(meta.categorical_names)), dtype=np.uint64, order="C")
    for j, name in enumerate(meta.categorical_names):
        table = meta.levels[j]
        raw = [str(v) for v in categorical_columns[name]]
        for i, value in enumerate(raw):
            code = table.get(value, -1)
            x_cat[i, j] = code
            if code < 0:
                x_uhash[i, j] = stable_uhash(value)
    return Design(x_num, x_cat, x_uhash, meta)


def _event_columns(contexts, include_g: bool, include_p: bool, include_l: bool):
    num: dict[str, list] = {}
    cat: dict[str, list] = {}
    if include_g:
        for name in ("balls", "strikes", "outs", "score_diff", "inning"):
            num[name] = [getattr(c.game_state, name) for c in contexts]
        for name in ("on_first", "on_second", "on_third", "top_inning"):
            num[name] = [float(getattr(c.game_state, name)) for c in contexts]
    if include_p:
        num["batter_quality"] = [c.personnel.batter_quality for c in contexts]
        num["pitcher_quality"] = [c.personnel.pitcher_quality for c in contexts]
        num["batter_rhb"] = [float(c.personnel.batter_hand == "R") for c in contexts]
        num["pitcher_rhp"] = [float(c.personnel.pitcher_hand == "R") for c in contexts]
        for name in ("batter_id", "pitcher_id", "catcher_id", "umpire_id"):
            cat[name] = [getattr(c.personnel, name) for c in contexts]
    if include_l:
        num["plate_x"] = [c.location.plate_x for c in contexts]
        num["plate_z"] = [c.location.plate_z for c in contexts]
    return num, cat


def event_metadata(contexts, include_g=True, include_p=True, include_l=True) -> PredictorMetadata:
    num, cat = _event_columns(contexts, include_g, include_p, include_l)
    return build_metadata(list(num), cat)


def event_design(meta: PredictorMetadata, contexts, include_g=True, include_p=True, include_l=True) -> Design:
    num, cat = _event_columns(contexts, include_g, include_p, include_l)
    return encode_design(meta, num, cat)


def _runs_columns(rows):
    """rows: iterables of (game_state, swing, gstate)."""
    num: dict[str, list] = {}
    gs = [r[0] for r in rows]
    for name in ("balls", "strikes", "outs", "score_diff", "inning"):
        num[name] = [getattr(g, name) for g in gs]
    for name in ("on_first", "on_second", "on_third", "top_inning"):
        num[name] = [float(getattr(g, name)) for g in gs]
    num["swing"] = [float(r[1]) for r in rows]
    cat = {"gstate": [r[2] for r in rows]}
    return num, cat


def runs_metadata(rows) -> PredictorMetadata:
    num, cat = _runs_columns(rows)
    meta = build_metadata(list(num), cat)
    # gstate has a closed set of levels; pin them all even if a training
    # partition happens to miss one.
    meta.levels[meta.categorical_names.index("gstate")] = {
        name: code for code, name in enumerate(GSTATE_LEVELS)
    }
    return meta


def runs_design(meta: PredictorMetadata, rows) -> Design:
    num, cat = _runs_columns(rows)
    return encode_design(meta, num, cat)
