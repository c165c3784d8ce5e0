"""Flattened tree-ensemble storage and posterior prediction."""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

from .. import _kernels
from ..features import Design, PredictorMetadata
from .trees import Node, NumericRule

# Probit predictions are clamped into the open interval so downstream
# branch arithmetic never sees a degenerate 0 or 1.
_PROBIT_EPS = 1e-12


def _count_nodes(node: Node) -> int:
    if node.is_leaf:
        return 1
    return 1 + _count_nodes(node.left) + _count_nodes(node.right)


@dataclass
class FlatForest:
    """All kept draws, concatenated into contiguous node arrays."""

    kind: np.ndarray
    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray
    cat_start: np.ndarray
    cat_words: np.ndarray
    tree_roots: np.ndarray
    draw_node_start: np.ndarray
    n_draws: int
    trees_per_draw: int

    def predict_sums(self, design: Design, backend=None) -> np.ndarray:
        """Per-draw sum of tree outputs, shape (rows, draws)."""
        k = backend if backend is not None else _kernels
        return k.forest_predict(
            self.kind, self.feature, self.threshold, self.left, self.right,
            self.value, self.cat_start, self.cat_words, self.tree_roots,
            self.draw_node_start, self.n_draws, self.trees_per_draw,
            design.x_num, design.x_cat, design.x_uhash,
        )

    def select_draws(self, indices: np.ndarray, n_cat_levels) -> "FlatForest":
        """New forest containing only the requested draws."""
        builder = ForestBuilder(self.trees_per_draw, n_cat_levels=n_cat_levels)
        for d in indices:
            start = int(self.draw_node_start[d])
            stop = int(self.draw_node_start[d + 1])
            builder._append_raw_draw(self, start, stop, int(d))
        return builder.build()


class ForestBuilder:
    """Accumulates kept draws; trees are serialized in preorder."""

    def __init__(self, trees_per_draw: int, n_cat_levels):
        self.trees_per_draw = trees_per_draw
        self.n_cat_levels = n_cat_levels  # level count per categorical predictor
        self._kind = []
        self._feature = []
        self._threshold = []
        self._left = []
        self._right = []
        self._value = []
        self._cat_start = []
        self._cat_words = []
        self._tree_roots = []
        self._draw_node_start = [0]
        self.n_draws = 0

    def _emit(self, node: Node, base: int, order: list) -> int:
        idx = len(order)
        order.append(None)  # reserve
        if node.is_leaf:
            order[idx] = (_kernels.NODE_LEAF, -1, np.nan, -1, -1, float(node.mu), -1)
            return idx
        rule = node.rule
        li = self._emit(node.left, base, order)
        ri = self._emit(node.right, base, order)
        if isinstance(rule, NumericRule):
            order[idx] = (
                _kernels.NODE_NUMERIC, rule.feature, float(rule.threshold),
                base + li, base + ri, 0.0, -1,
            )
        else:
            cat_start = len(self._cat_words)
            n_words = (self.n_cat_levels[rule.feature] + 63) // 64
            words = [0] * n_words
            for code in rule.left_levels:
                words[code >> 6] |= 1 << (code & 63)
            self._cat_words.extend(words)
            order[idx] = (
                _kernels.NODE_CATEGORICAL, rule.feature, np.nan,
                base + li, base + ri, 0.0, cat_start,
            )
        return idx

    def add_draw(self, trees) -> None:
        for tree in trees:
            base = len(self._kind)
            order: list = []
            self._emit(tree.root, base, order)
            self._tree_roots.append(base)
            for kind, feat, thr, left, right, value, cat_start in order:
                self._kind.append(kind)
                self._feature.append(feat)
                self._threshold.append(thr)
                self._left.append(left)
                self._right.append(right)
                self._value.append(value)
                self._cat_start.append(cat_start)
        self.n_draws += 1
        self._draw_node_start.append(len(self._kind))

    def _append_raw_draw(self, forest: FlatForest, start: int, stop: int, d: int) -> None:
        base = len(self._kind)
        shift = base - start
        for i in range(start, stop):
            self._kind.append(int(forest.kind[i]))
            self._feature.append(int(forest.feature[i]))
            self._threshold.append(float(forest.threshold[i]))
            is_leaf = forest.kind[i] == _kernels.NODE_LEAF
            self._left.append(-1 if is_leaf else int(forest.left[i]) + shift)
            self._right.append(-1 if is_leaf else int(forest.right[i]) + shift)
            self._value.append(float(forest.value[i]))
            cs = int(forest.cat_start[i])
            if cs < 0:
                self._cat_start.append(-1)
            else:
                self._cat_start.append(len(self._cat_words))
                j = cs
                # words for one rule run until the next rule's start; copy by
                # re-deriving the word count from the node's predictor.
                n_words = self._n_words_for(forest, i)
                self._cat_words.extend(int(w) for w in forest.cat_words[j:j + n_words])
        m = self.trees_per_draw
        for t in range(m):
            self._tree_roots.append(int(forest.tree_roots[d * m + t]) + shift)
        self.n_draws += 1
        self._draw_node_start.append(len(self._kind))

    def _n_words_for(self, forest: FlatForest, i: int) -> int:
        if self.n_cat_levels is None:
            raise ValueError("categorical draws require level counts")
        return (self.n_cat_levels[int(forest.feature[i])] + 63) // 64

    def build(self) -> FlatForest:
        return FlatForest(
            kind=np.asarray(self._kind, dtype=np.int8),
            feature=np.asarray(self._feature, dtype=np.int32),
            threshold=np.asarray(self._threshold, dtype=np.float64),
            left=np.asarray(self._left, dtype=np.int32),
            right=np.asarray(self._right, dtype=np.int32),
            value=np.asarray(self._value, dtype=np.float64),
            cat_start=np.asarray(self._cat_start, dtype=np.int64),
            cat_words=np.asarray(self._cat_words, dtype=np.uint64),
            tree_roots=np.asarray(self._tree_roots, dtype=np.int32),
            draw_node_start=np.asarray(self._draw_node_start, dtype=np.int64),
            n_draws=self.n_draws,
            trees_per_draw=self.trees_per_draw,
        )


@dataclass
class PosteriorEnsemble:
    """Kept draws of a sum-of-trees model for one target."""

    mode: str  # "regression" | "probit"
    config: "EnsembleConfig"
    meta: PredictorMetadata
    forest: FlatForest
    y_mean: float = 0.0
    y_sd: float = 1.0
    offset: float = 0.0
    sigma: np.ndarray | None = None  # standardized-scale draws, regression only
    extras: dict = field(default_factory=dict)

    @property
    def n_draws(self) -> int:
        return self.forest.n_draws

    def _check_design(self, design: Design) -> None:
        if design.meta.numeric_names != self.meta.numeric_names:
            raise ValueError(
                f"numeric predictors {design.meta.numeric_names} do not match "
                f"model predictors {self.meta.numeric_names}"
            )
        if design.meta.categorical_names != self.meta.categorical_names:
            raise ValueError(
                f"categorical predictors {design.meta.categorical_names} do not "
                f"match model predictors {self.meta.categorical_names}"
            )

    def predict(self, design: Design, draw_indices=None, backend=None) -> np.ndarray:
        """Matrix of posterior draws, shape (rows, draws).

        Regression draws are reported on the original response scale; probit
        draws are probabilities strictly inside (0, 1).
        """
        self._check_design(design)
        forest = self.forest
        if draw_indices is not None:
            forest = forest.select_draws(
                np.asarray(draw_indices, dtype=np.int64), self.n_cat_levels()
            )
        raw = forest.predict_sums(design, backend=backend)
        if self.mode == "regression":
            return raw * self.y_sd + self.y_mean
        probs = ndtr(raw + self.offset)
        return np.clip(probs, _PROBIT_EPS, 1.0 - _PROBIT_EPS)

    def predict_mean(self, design: Design, backend=None) -> np.ndarray:
        return self.predict(design, backend=backend).mean(axis=1)

    def n_cat_levels(self) -> list[int]:
        return [self.meta.n_levels(j) for j in range(len(self.meta.categorical_names))]
