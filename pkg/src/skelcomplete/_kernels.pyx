# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: nearest-neighbor reduction, farthest sampling, auction.

Semantics (distance formula, tie-breaking, iteration order) mirror
``_kernels_py`` exactly; the dispatcher in ``kernels.py`` picks whichever
backend is importable.  All distances are computed from explicit coordinate
differences so the kernels stay translation-invariant to rounding level.
"""

import numpy as np

from libc.math cimport sqrt

BACKEND = "compiled"


def nearest_neighbors(double[:, ::1] x, double[:, ::1] y):
    """For each row of x, squared distance and index of its nearest row in y.

    Ties break to the lowest index. Returns (d2 (n,), idx (n,)).
    """
    cdef Py_ssize_t n = x.shape[0], m = y.shape[0], d = x.shape[1]
    d2 = np.empty(n, dtype=np.float64)
    idx = np.empty(n, dtype=np.int64)
    cdef double[::1] d2v = d2
    cdef long long[::1] idxv = idx
    cdef Py_ssize_t i, j, k, bj
    cdef double best, acc, diff
    for i in range(n):
        best = -1.0
        bj = 0
        for j in range(m):
            acc = 0.0
            for k in range(d):
                diff = x[i, k] - y[j, k]
                acc += diff * diff
            if best < 0.0 or acc < best:
                best = acc
                bj = j
        d2v[i] = best
        idxv[i] = bj
    return d2, idx


def farthest_sampling(double[:, ::1] p, Py_ssize_t k, Py_ssize_t seed_index):
    """Greedy max-min sampling of k row indices starting at seed_index.

    Already-selected rows are excluded; among equal min-distances the lowest
    unselected index wins.
    """
    cdef Py_ssize_t n = p.shape[0], d = p.shape[1]
    out = np.empty(k, dtype=np.int64)
    cdef long long[::1] outv = out
    mind_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] mind = mind_arr
    taken_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] taken = taken_arr
    cdef Py_ssize_t t, i, j, cur, bi
    cdef double best, acc, diff
    outv[0] = seed_index
    taken[seed_index] = 1
    cur = seed_index
    for i in range(n):
        mind[i] = 0.0
    for t in range(1, k):
        best = -1.0
        bi = -1
        for i in range(n):
            acc = 0.0
            for j in range(d):
                diff = p[i, j] - p[cur, j]
                acc += diff * diff
            if t == 1 or acc < mind[i]:
                mind[i] = acc
            if taken[i] == 0 and mind[i] > best:
                best = mind[i]
                bi = i
        cur = bi
        outv[t] = cur
        taken[cur] = 1
    return out


def auction_assignment(double[:, ::1] x, double[:, ::1] y, double eps_final):
    """epsilon-scaling forward auction for the min-cost bijection x -> y.

    Benefits are negated Euclidean distances; the final scale runs at
    eps_final, so the mean assignment cost is within eps_final of optimal.
    """
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1]
    mapping = np.empty(n, dtype=np.int64)
    cdef long long[::1] mapv = mapping
    cdef Py_ssize_t i, j, k
    if n == 1:
        mapv[0] = 0
        return mapping
    # price vector and bidder stack
    prices_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] prices = prices_arr
    owner_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] owner = owner_arr
    stack_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] stack = stack_arr
    cdef Py_ssize_t top
    cdef double lo, hi, span, eps, acc, diff, v, v1, v2, bid
    cdef Py_ssize_t bj, prev
    # initial epsilon from the joint bounding-box diagonal (cheap upper bound
    # on any pair distance)
    span = 0.0
    for k in range(d):
        lo = x[0, k]
        hi = x[0, k]
        for i in range(n):
            if x[i, k] < lo:
                lo = x[i, k]
            if x[i, k] > hi:
                hi = x[i, k]
            if y[i, k] < lo:
                lo = y[i, k]
            if y[i, k] > hi:
                hi = y[i, k]
        span += (hi - lo) * (hi - lo)
    span = sqrt(span)
    if span == 0.0:
        for i in range(n):
            mapv[i] = i
        return mapping
    eps = span / 2.0
    if eps < eps_final:
        eps = eps_final
    while True:
        # one auction scale: reset assignment, keep prices
        for i in range(n):
            owner[i] = -1
            mapv[i] = -1
        top = 0
        for i in range(n - 1, -1, -1):
            stack[top] = i
            top += 1
        while top > 0:
            top -= 1
            i = stack[top]
            v1 = 0.0
            v2 = 0.0
            bj = -1
            for j in range(n):
                acc = 0.0
                for k in range(d):
                    diff = x[i, k] - y[j, k]
                    acc += diff * diff
                v = -sqrt(acc) - prices[j]
                if bj < 0 or v > v1:
                    if bj >= 0:
                        v2 = v1
                    else:
                        v2 = v
                    v1 = v
                    bj = j
                elif j == 1 and bj == 0:
                    v2 = v
                elif v > v2 or (bj == 0 and j == 1):
                    v2 = v
            bid = v1 - v2 + eps
            prices[bj] += bid
            prev = owner[bj]
            if prev >= 0:
                mapv[prev] = -1
                stack[top] = prev
                top += 1
            owner[bj] = i
            mapv[i] = bj
        if eps <= eps_final:
            break
        eps /= 5.0
        if eps < eps_final:
            eps = eps_final
    return mapping
