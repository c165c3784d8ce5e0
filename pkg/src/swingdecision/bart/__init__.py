"""Sum-of-trees models: sampler, ensemble storage, prediction."""

from .forest import FlatForest, ForestBuilder, PosteriorEnsemble
from .moves import TreePrior, leaf_log_marginal, propose_tree_move
from .sampler import (
    DegenerateDataError,
    EnsembleConfig,
    default_config,
    fit,
    sample_leaf_means,
    sample_sigma,
)
from .trees import CategoricalRule, Node, NumericRule, Tree

__all__ = [
    "CategoricalRule",
    "DegenerateDataError",
    "EnsembleConfig",
    "FlatForest",
    "ForestBuilder",
    "Node",
    "NumericRule",
    "PosteriorEnsemble",
    "Tree",
    "TreePrior",
    "default_config",
    "fit",
    "leaf_log_marginal",
    "propose_tree_move",
    "sample_leaf_means",
    "sample_sigma",
]
