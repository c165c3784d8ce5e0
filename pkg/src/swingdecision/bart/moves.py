"""Grow/prune Metropolis-Hastings proposals for one tree.

The rule at a grown node is drawn from the same distribution the tree prior
assigns to rules, so rule densities cancel from the acceptance ratio. What
remains is the split-probability ratio, the leaf/prunable-count proposal
asymmetry, and the marginal likelihood with leaf means integrated out.
"""

import math
from dataclasses import dataclass

import numpy as np

from .trees import CategoricalRule, Node, NumericRule, Tree


@dataclass(frozen=True)
class TreePrior:
    alpha_split: float
    beta_split: float

    def p_split(self, depth: int) -> float:
        return self.alpha_split * (1.0 + depth) ** (-self.beta_split)


@dataclass
class Proposal:
    kind: str  # "grow" | "prune"
    log_prior_transition: float
    log_marginal: float
    # grow payload
    slot: int = -1
    rule: object = None
    rows: np.ndarray | None = None
    go_left: np.ndarray | None = None
    # prune payload
    node: Node | None = None

    @property
    def log_accept(self) -> float:
        return self.log_prior_transition + self.log_marginal


def leaf_log_marginal(n: float, s: float, sigma2: float, leaf_var: float) -> float:
    """Log marginal of a leaf's residuals with the mean integrated out.

    Only the terms that differ between a split leaf and its children are
    kept; row-count and sum-of-squares terms shared by both sides cancel.
    """
    denom = sigma2 + n * leaf_var
    return 0.5 * math.log(sigma2 / denom) + leaf_var * s * s / (2.0 * sigma2 * denom)


def _split_log_prior(prior: TreePrior, depth: int) -> float:
    ps = prior.p_split(depth)
    ps_child = prior.p_split(depth + 1)
    return math.log(ps) + 2.0 * math.log1p(-ps_child) - math.log1p(-ps)


def _draw_rule(tree: Tree, leaf: Node, design, rows: np.ndarray, rng: np.random.Generator):
    """Uniform predictor with a prior-distributed rule; None if none legal."""
    p_num = len(design.meta.numeric_names)
    p_cat = len(design.meta.categorical_names)
    candidates = []
    if rows.size:  # numeric thresholds come from the observed range
        for j in range(p_num):
            vals = design.x_num[rows, j]
            lo = vals.min()
            hi = vals.max()
            if lo < hi:
                candidates.append(("num", j, lo, hi))
    for j in range(p_cat):
        avail = tree.available_levels(leaf, j, design.meta.n_levels(j))
        if len(avail) >= 2:
            candidates.append(("cat", j, avail, None))
    if not candidates:
        return None
    which, j, a, b = candidates[rng.integers(len(candidates))]
    if which == "num":
        return NumericRule(j, float(rng.uniform(a, b)))
    levels = sorted(a)
    while True:
        coin = rng.random(len(levels)) < 0.5
        if coin.any() and not coin.all():
            break
    return CategoricalRule(j, frozenset(lv for lv, c in zip(levels, coin) if c))


def _evaluate_rule(rule, design, rows: np.ndarray) -> np.ndarray:
    if isinstance(rule, NumericRule):
        return design.x_num[rows, rule.feature] <= rule.threshold
    codes = design.x_cat[rows, rule.feature]
    return np.isin(codes, np.fromiter(rule.left_levels, dtype=np.int64))


def propose_grow(tree, design, resid, sigma2, leaf_var, prior, rng, use_likelihood=True):
    slot = int(rng.integers(tree.n_leaves))
    leaf = tree.leaves[slot]
    rows = np.flatnonzero(tree.assign == slot)
    rule = _draw_rule(tree, leaf, design, rows, rng)
    if rule is None:
        return None
    go_left = _evaluate_rule(rule, design, rows)

    parent = leaf.parent
    parent_prunable = parent is not None and parent in tree.prunable
    n_prunable_after = len(tree.prunable) + 1 - (1 if parent_prunable else 0)
    log_pt = (
        _split_log_prior(prior, leaf.depth)
        + math.log(tree.n_leaves)
        - math.log(n_prunable_after)
    )

    log_ml = 0.0
    if use_likelihood:
        r = resid[rows]
        s = float(r.sum())
        s_left = float(r[go_left].sum())
        n = len(rows)
        n_left = int(go_left.sum())
        log_ml = (
            leaf_log_marginal(n_left, s_left, sigma2, leaf_var)
            + leaf_log_marginal(n - n_left, s - s_left, sigma2, leaf_var)
            - leaf_log_marginal(n, s, sigma2, leaf_var)
        )
    return Proposal("grow", log_pt, log_ml, slot=slot, rule=rule, rows=rows, go_left=go_left)


def propose_prune(tree, design, resid, sigma2, leaf_var, prior, rng, use_likelihood=True):
    if not tree.prunable:
        return None
    node = tree.prunable[int(rng.integers(len(tree.prunable)))]
    log_pt = (
        -_split_log_prior(prior, node.depth)
        + math.log(len(tree.prunable))
        - math.log(tree.n_leaves - 1)
    )
    log_ml = 0.0
    if use_likelihood:
        rows_left = np.flatnonzero(tree.assign == node.left.slot)
        rows_right = np.flatnonzero(tree.assign == node.right.slot)
        s_left = float(resid[rows_left].sum())
        s_right = float(resid[rows_right].sum())
        n_left = len(rows_left)
        n_right = len(rows_right)
        log_ml = (
            leaf_log_marginal(n_left + n_right, s_left + s_right, sigma2, leaf_var)
            - leaf_log_marginal(n_left, s_left, sigma2, leaf_var)
            - leaf_log_marginal(n_right, s_right, sigma2, leaf_var)
        )
    return Proposal("prune", log_pt, log_ml, node=node)


def propose_tree_move(
    tree, design, resid, sigma2, leaf_var, prior, rng,
    kind: str | None = None, use_likelihood: bool = True,
):
    """One grow-or-prune proposal; None when the drawn kind has no legal move."""
    if kind is None:
        kind = "grow" if rng.random() < 0.5 else "prune"
    if kind == "grow":
        return propose_grow(tree, design, resid, sigma2, leaf_var, prior, rng, use_likelihood)
    return propose_prune(tree, design, resid, sigma2, leaf_var, prior, rng, use_likelihood)


def apply_proposal(tree: Tree, prop: Proposal) -> None:
    if prop.kind == "grow":
        tree.grow(prop.slot, prop.rule, prop.rows, prop.go_left)
    else:
        tree.prune(prop.node)
