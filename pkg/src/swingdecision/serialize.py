"""Versioned, self-describing model files.

One JSON envelope covers every model kind. Node records are explicit
(kind, feature, threshold, left, right, value, left-level codes) with
child indices local to their tree, and floats survive the round trip at
full precision because writing is canonical (sorted keys, repr floats).
"""

import json

import numpy as np

from . import _kernels
from .bart.forest import FlatForest, PosteriorEnsemble
from .bart.sampler import EnsembleConfig
from .features import PredictorMetadata
from .rex.baseline import RexModel
from .rex.bayes import PooledRexModel

MODEL_FORMAT = "swingdecision.model"
MODEL_VERSION = 1

KIND_TREE = "tree_ensemble"
KIND_REX = "binned_rex"
KIND_POOLED = "pooled_rex"


def _decode_levels(words, n_levels: int) -> list:
    out = []
    for code in range(n_levels):
        if (int(words[code >> 6]) >> (code & 63)) & 1:
            out.append(code)
    return out


def _forest_to_draws(forest: FlatForest, n_cat_levels) -> list:
    draws = []
    m = forest.trees_per_draw
    for d in range(forest.n_draws):
        draw_end = int(forest.draw_node_start[d + 1])
        trees = []
        for t in range(m):
            start = int(forest.tree_roots[d * m + t])
            end = int(forest.tree_roots[d * m + t + 1]) if t + 1 < m else draw_end
            nodes = []
            for i in range(start, end):
                kind = int(forest.kind[i])
                if kind == _kernels.NODE_LEAF:
                    nodes.append([kind, -1, None, -1, -1, float(forest.value[i]), None])
                elif kind == _kernels.NODE_NUMERIC:
                    nodes.append([
                        kind, int(forest.feature[i]), float(forest.threshold[i]),
                        int(forest.left[i]) - start, int(forest.right[i]) - start,
                        None, None,
                    ])
                else:
                    feat = int(forest.feature[i])
                    n_words = (n_cat_levels[feat] + 63) // 64
                    cs = int(forest.cat_start[i])
                    nodes.append([
                        kind, feat, None,
                        int(forest.left[i]) - start, int(forest.right[i]) - start,
                        None,
                        _decode_levels(forest.cat_words[cs:cs + n_words], n_cat_levels[feat]),
                    ])
            trees.append(nodes)
        draws.append(trees)
    return draws


def _forest_from_draws(draws: list, trees_per_draw: int, n_cat_levels) -> FlatForest:
    kind, feature, threshold = [], [], []
    left, right, value, cat_start = [], [], [], []
    cat_words: list = []
    tree_roots = []
    draw_node_start = [0]
    for trees in draws:
        for nodes in trees:
            base = len(kind)
            tree_roots.append(base)
            for nkind, nfeat, nthr, nleft, nright, nvalue, nlevels in nodes:
                kind.append(nkind)
                feature.append(nfeat)
                threshold.append(np.nan if nthr is None else float(nthr))
                left.append(-1 if nleft < 0 else base + nleft)
                right.append(-1 if nright < 0 else base + nright)
                value.append(0.0 if nvalue is None else float(nvalue))
                if nkind == _kernels.NODE_CATEGORICAL:
                    cat_start.append(len(cat_words))
                    n_words = (n_cat_levels[nfeat] + 63) // 64
                    words = [0] * n_words
                    for code in nlevels:
                        words[code >> 6] |= 1 << (code & 63)
                    cat_words.extend(words)
                else:
                    cat_start.append(-1)
        draw_node_start.append(len(kind))
    return FlatForest(
        kind=np.asarray(kind, dtype=np.int8),
        feature=np.asarray(feature, dtype=np.int32),
        threshold=np.asarray(threshold, dtype=np.float64),
        left=np.asarray(left, dtype=np.int32),
        right=np.asarray(right, dtype=np.int32),
        value=np.asarray(value, dtype=np.float64),
        cat_start=np.asarray(cat_start, dtype=np.int64),
        cat_words=np.asarray(cat_words, dtype=np.uint64),
        tree_roots=np.asarray(tree_roots, dtype=np.int32),
        draw_node_start=np.asarray(draw_node_start, dtype=np.int64),
        n_draws=len(draws),
        trees_per_draw=trees_per_draw,
    )


def _jsonable_extras(extras: dict) -> dict:
    out = {}
    for key, val in extras.items():
        try:
            json.dumps(val)
        except TypeError:
            continue
        out[key] = val
    return out


def model_kind(model) -> str:
    if isinstance(model, PosteriorEnsemble):
        return KIND_TREE
    if isinstance(model, RexModel):
        return KIND_REX
    if isinstance(model, PooledRexModel):
        return KIND_POOLED
    raise TypeError(f"cannot serialize {type(model)!r}")


def model_to_payload(model) -> dict:
    kind = model_kind(model)
    if kind == KIND_TREE:
        n_cat = model.n_cat_levels()
        payload = {
            "mode": model.mode,
            "config": model.config.to_dict(),
            "meta": model.meta.to_payload(),
            "y_mean": model.y_mean,
            "y_sd": model.y_sd,
            "offset": model.offset,
            "sigma": None if model.sigma is None else [float(s) for s in model.sigma],
            "extras": _jsonable_extras(model.extras),
            "trees_per_draw": model.forest.trees_per_draw,
            "draws": _forest_to_draws(model.forest, n_cat),
        }
    else:
        payload = model.to_payload()
    return payload


def config_payload_of(payload: dict, kind: str) -> dict:
    """The configuration part of a payload, used for store keys."""
    if kind == KIND_TREE:
        return {"config": payload["config"], "mode": payload["mode"],
                "meta": payload["meta"]}
    if kind == KIND_REX:
        return {"spec": payload["spec"]}
    return {"spec": payload["spec"], "prior": payload["prior"]}


def model_to_bytes(model) -> bytes:
    envelope = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "kind": model_kind(model),
        "payload": model_to_payload(model),
    }
    return json.dumps(envelope, sort_keys=True, separators=(",", ":")).encode("utf-8")


def model_from_bytes(data: bytes):
    envelope = json.loads(data.decode("utf-8"))
    if envelope.get("format") != MODEL_FORMAT:
        raise ValueError("not a swingdecision model file")
    if envelope.get("version") != MODEL_VERSION:
        raise ValueError(f"unsupported model version {envelope.get('version')}")
    kind = envelope["kind"]
    payload = envelope["payload"]
    if kind == KIND_TREE:
        meta = PredictorMetadata.from_payload(payload["meta"])
        n_cat = [meta.n_levels(j) for j in range(len(meta.categorical_names))]
        return PosteriorEnsemble(
            mode=payload["mode"],
            config=EnsembleConfig.from_dict(payload["config"]),
            meta=meta,
            forest=_forest_from_draws(payload["draws"], payload["trees_per_draw"], n_cat),
            y_mean=float(payload["y_mean"]),
            y_sd=float(payload["y_sd"]),
            offset=float(payload["offset"]),
            sigma=None if payload["sigma"] is None else np.asarray(payload["sigma"]),
            extras=dict(payload["extras"]),
        )
    if kind == KIND_REX:
        return RexModel.from_payload(payload)
    if kind == KIND_POOLED:
        return PooledRexModel.from_payload(payload)
    raise ValueError(f"unknown model kind {kind!r}")


def save_model(model, path) -> bytes:
    data = model_to_bytes(model)
    with open(path, "wb") as fh:
        fh.write(data)
    return data


def load_model(path):
    with open(path, "rb") as fh:
        return model_from_bytes(fh.read())
