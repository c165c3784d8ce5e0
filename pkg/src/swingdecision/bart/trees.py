"""Mutable binary regression trees used inside the sampler.

A tree's leaves always partition predictor space. During sampling each leaf
owns a dense "slot" index so that row membership can be tracked in a flat
int array and per-leaf statistics come from ``np.bincount``.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NumericRule:
    feature: int
    threshold: float


@dataclass(frozen=True)
class CategoricalRule:
    feature: int
    left_levels: frozenset


class Node:
    __slots__ = ("rule", "left", "right", "parent", "is_left", "mu", "depth", "slot")

    def __init__(self, parent=None, is_left=False, depth=0):
        self.rule = None
        self.left = None
        self.right = None
        self.parent = parent
        self.is_left = is_left
        self.mu = 0.0
        self.depth = depth
        self.slot = -1

    @property
    def is_leaf(self):
        return self.rule is None


def is_prunable(node: Node) -> bool:
    """Internal node whose children are both leaves."""
    return node.rule is not None and node.left.is_leaf and node.right.is_leaf


class Tree:
    """One tree plus the leaf-slot assignment of every training row."""

    def __init__(self, n_rows: int):
        self.root = Node()
        self.root.slot = 0
        self.leaves: list[Node] = [self.root]
        self.prunable: list[Node] = []
        self.assign = np.zeros(n_rows, dtype=np.int32)

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    def leaf_values(self) -> np.ndarray:
        return np.array([leaf.mu for leaf in self.leaves], dtype=np.float64)

    def fitted(self) -> np.ndarray:
        return self.leaf_values()[self.assign]

    def grow(self, slot: int, rule, rows: np.ndarray, go_left: np.ndarray) -> Node:
        """Split the leaf in ``slot``; left child inherits the slot."""
        leaf = self.leaves[slot]
        left = Node(parent=leaf, is_left=True, depth=leaf.depth + 1)
        right = Node(parent=leaf, is_left=False, depth=leaf.depth + 1)
        left.mu = right.mu = leaf.mu
        leaf.rule = rule
        leaf.left = left
        leaf.right = right
        leaf.slot = -1

        left.slot = slot
        self.leaves[slot] = left
        right.slot = len(self.leaves)
        self.leaves.append(right)
        self.assign[rows[~go_left]] = right.slot

        self.prunable.append(leaf)
        parent = leaf.parent
        if parent is not None and parent in self.prunable:
            self.prunable.remove(parent)
        return leaf

    def prune(self, node: Node) -> None:
        """Collapse a prunable node back into a leaf."""
        if not is_prunable(node):
            raise ValueError("prune target must have two leaf children")
        sl = node.left.slot
        sr = node.right.slot
        self.assign[self.assign == sr] = sl

        node.rule = None
        node.left = None
        node.right = None
        node.slot = sl
        self.leaves[sl] = node

        last = len(self.leaves) - 1
        if sr != last:
            mover = self.leaves[last]
            self.leaves[sr] = mover
            mover.slot = sr
            self.assign[self.assign == last] = sr
        self.leaves.pop()

        self.prunable.remove(node)
        parent = node.parent
        if parent is not None and is_prunable(parent):
            self.prunable.append(parent)

    def available_levels(self, node: Node, feature: int, n_levels: int) -> frozenset:
        """Level set of a categorical predictor reachable at ``node``.

        Derived from the categorical rules on the path from the root: each
        split on the predictor partitions the set it received.
        """
        if node.parent is None:
            return frozenset(range(n_levels))
        parent_avail = self.available_levels(node.parent, feature, n_levels)
        rule = node.parent.rule
        if isinstance(rule, CategoricalRule) and rule.feature == feature:
            if node.is_left:
                return parent_avail & rule.left_levels
            return parent_avail - rule.left_levels
        return parent_avail

    def validate_partition(self, x_num, x_cat) -> bool:
        """Re-check that every row's tracked slot matches a fresh traversal."""
        for i in range(len(self.assign)):
            node = self.root
            while not node.is_leaf:
                rule = node.rule
                if isinstance(rule, NumericRule):
                    go_left = x_num[i, rule.feature] <= rule.threshold
                else:
                    go_left = int(x_cat[i, rule.feature]) in rule.left_levels
                node = node.left if go_left else node.right
            if node.slot != self.assign[i]:
                return False
        return True

    def depth_max(self) -> int:
        return max(leaf.depth for leaf in self.leaves)
