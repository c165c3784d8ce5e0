"""NumPy reference implementation of the tree-routing kernels.

The compiled extension (``_treecore``) implements the same operations with
identical arithmetic; either backend must produce bit-identical results.

Flat forest layout (arrays concatenated over kept draws):
    kind        int8     0 = leaf, 1 = numeric rule, 2 = categorical rule
    feature     int32    column index within the numeric / categorical block
    threshold   float64  numeric rules only
    left/right  int32    absolute child node indices
    value       float64  leaf output (0 for internal nodes)
    cat_start   int64    offset into ``cat_words`` for categorical rules
    cat_words   uint64   packed level bitmasks, one run per categorical rule

Routing: numeric rule sends a row left iff x <= threshold; categorical rule
sends it left iff the level bit is set. Rows with a level unseen at training
time (code -1) are routed by a splitmix64 hash of (level hash, node id within
its draw), giving a deterministic, unbiased-on-average assignment.
"""

import numpy as np

NODE_LEAF = 0
NODE_NUMERIC = 1
NODE_CATEGORICAL = 2

_MIX_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_A = np.uint64(0xBF58476D1CE4E5B9)
_MIX_B = np.uint64(0x94D049BB133111EB)


def unseen_goes_left(uhash: np.ndarray, node_rel: np.ndarray) -> np.ndarray:
    """Deterministic left/right coin for unseen categorical levels."""
    with np.errstate(over="ignore"):
        x = uhash.astype(np.uint64) ^ (node_rel.astype(np.uint64) * _MIX_GOLDEN)
        x ^= x >> np.uint64(30)
        x *= _MIX_A
        x ^= x >> np.uint64(27)
        x *= _MIX_B
        x ^= x >> np.uint64(31)
    return (x & np.uint64(1)).astype(bool)


def route_tree(
    kind,
    feature,
    threshold,
    left,
    right,
    cat_start,
    cat_words,
    root: int,
    draw_start: int,
    x_num,
    x_cat,
    x_uhash,
):
    """Absolute leaf-node index for every row routed through one tree."""
    n = x_num.shape[0] if x_num.ndim == 2 else x_cat.shape[0]
    cur = np.full(n, root, dtype=np.int64)
    active = np.flatnonzero(kind[cur] != NODE_LEAF)
    while active.size:
        nodes = cur[active]
        go_left = np.empty(active.size, dtype=bool)

        is_num = kind[nodes] == NODE_NUMERIC
        if is_num.any():
            sel = np.flatnonzero(is_num)
            nd = nodes[sel]
            vals = x_num[active[sel], feature[nd]]
            go_left[sel] = vals <= threshold[nd]

        is_cat = ~is_num
        if is_cat.any():
            sel = np.flatnonzero(is_cat)
            nd = nodes[sel]
            rows = active[sel]
            codes = x_cat[rows, feature[nd]]
            seen = codes >= 0
            res = np.empty(sel.size, dtype=bool)
            if seen.any():
                s = np.flatnonzero(seen)
                c = codes[s]
                words = cat_words[cat_start[nd[s]] + (c >> 6)]
                res[s] = (words >> (c.astype(np.uint64) & np.uint64(63))) & np.uint64(1) != 0
            if (~seen).any():
                u = np.flatnonzero(~seen)
                rel = (nd[u] - draw_start).astype(np.uint64)
                res[u] = unseen_goes_left(x_uhash[rows[u], feature[nd[u]]], rel)
            go_left[sel] = res

        cur[active] = np.where(go_left, left[nodes], right[nodes])
        active = active[kind[cur[active]] != NODE_LEAF]
    return cur


def forest_predict(
    kind,
    feature,
    threshold,
    left,
    right,
    value,
    cat_start,
    cat_words,
    tree_roots,
    draw_node_start,
    n_draws: int,
    trees_per_draw: int,
    x_num,
    x_cat,
    x_uhash,
):
    """Sum of leaf outputs per (row, draw); trees accumulated in order."""
    n = x_num.shape[0] if x_num.ndim == 2 else x_cat.shape[0]
    out = np.zeros((n, n_draws), dtype=np.float64)
    for d in range(n_draws):
        start = int(draw_node_start[d])
        col = out[:, d]
        for t in range(trees_per_draw):
            root = int(tree_roots[d * trees_per_draw + t])
            leaf = route_tree(
                kind, feature, threshold, left, right, cat_start, cat_words,
                root, start, x_num, x_cat, x_uhash,
            )
            col += value[leaf]
    return out
