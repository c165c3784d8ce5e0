# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled tree-routing kernels; arithmetic mirrors pybackend exactly."""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int8_t, int32_t, int64_t, uint64_t

cnp.import_array()

DEF NODE_LEAF = 0
DEF NODE_NUMERIC = 1


cdef inline bint _unseen_goes_left(uint64_t uhash, uint64_t node_rel) nogil:
    cdef uint64_t x = uhash ^ (node_rel * <uint64_t>0x9E3779B97F4A7C15UL)
    x ^= x >> 30
    x *= <uint64_t>0xBF58476D1CE4E5B9UL
    x ^= x >> 27
    x *= <uint64_t>0x94D049BB133111EBUL
    x ^= x >> 31
    return <bint>(x & 1UL)


cdef inline int64_t _route_one(
    const int8_t[::1] kind,
    const int32_t[::1] feature,
    const double[::1] threshold,
    const int32_t[::1] left,
    const int32_t[::1] right,
    const int64_t[::1] cat_start,
    const uint64_t[::1] cat_words,
    int64_t node,
    int64_t draw_start,
    const double[:, ::1] x_num,
    const int64_t[:, ::1] x_cat,
    const uint64_t[:, ::1] x_uhash,
    Py_ssize_t row,
) nogil:
    cdef int64_t code
    cdef bint go_left
    while kind[node] != NODE_LEAF:
        if kind[node] == NODE_NUMERIC:
            go_left = x_num[row, feature[node]] <= threshold[node]
        else:
            code = x_cat[row, feature[node]]
            if code >= 0:
                go_left = <bint>(
                    (cat_words[cat_start[node] + (code >> 6)]
                     >> (<uint64_t>code & 63UL)) & 1UL
                )
            else:
                go_left = _unseen_goes_left(
                    x_uhash[row, feature[node]],
                    <uint64_t>(node - draw_start),
                )
        node = left[node] if go_left else right[node]
    return node


def route_tree(
    const int8_t[::1] kind,
    const int32_t[::1] feature,
    const double[::1] threshold,
    const int32_t[::1] left,
    const int32_t[::1] right,
    const int64_t[::1] cat_start,
    const uint64_t[::1] cat_words,
    root,
    draw_start,
    const double[:, ::1] x_num,
    const int64_t[:, ::1] x_cat,
    const uint64_t[:, ::1] x_uhash,
):
    cdef Py_ssize_t n = x_num.shape[0]
    cdef int64_t c_root = root, c_start = draw_start
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] out_v = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            out_v[i] = _route_one(
                kind, feature, threshold, left, right, cat_start, cat_words,
                c_root, c_start, x_num, x_cat, x_uhash, i,
            )
    return out


def forest_predict(
    const int8_t[::1] kind,
    const int32_t[::1] feature,
    const double[::1] threshold,
    const int32_t[::1] left,
    const int32_t[::1] right,
    const double[::1] value,
    const int64_t[::1] cat_start,
    const uint64_t[::1] cat_words,
    const int32_t[::1] tree_roots,
    const int64_t[::1] draw_node_start,
    n_draws,
    trees_per_draw,
    const double[:, ::1] x_num,
    const int64_t[:, ::1] x_cat,
    const uint64_t[:, ::1] x_uhash,
):
    cdef Py_ssize_t n = x_num.shape[0]
    cdef Py_ssize_t nd = n_draws, m = trees_per_draw
    out = np.zeros((n, nd), dtype=np.float64)
    cdef double[:, ::1] out_v = out
    cdef Py_ssize_t d, t, i
    cdef int64_t start, root, leaf
    with nogil:
        for d in range(nd):
            start = draw_node_start[d]
            for t in range(m):
                root = tree_roots[d * m + t]
                for i in range(n):
                    leaf = _route_one(
                        kind, feature, threshold, left, right,
                        cat_start, cat_words, root, start,
                        x_num, x_cat, x_uhash, i,
                    )
                    out_v[i, d] += value[leaf]
    return out
