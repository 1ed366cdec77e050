# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scan kernels. Signatures mirror :mod:`hvseq._pure`."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t
from libc.stdlib cimport malloc, free


def csr_overlap(const int64_t[::1] indptr, const int32_t[::1] indices,
                const uint8_t[::1] mask):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] o = out
    cdef Py_ssize_t i
    cdef int64_t j
    cdef int32_t c
    with nogil:
        for i in range(n):
            c = 0
            for j in range(indptr[i], indptr[i + 1]):
                c += mask[indices[j]]
            o[i] = c
    return out


cdef inline int32_t _lev(const int32_t* a, Py_ssize_t la,
                         const int32_t* b, Py_ssize_t lb,
                         int32_t* row) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef int32_t diag, up, best, cost
    for j in range(lb + 1):
        row[j] = <int32_t>j
    for i in range(1, la + 1):
        diag = row[0]
        row[0] = <int32_t>i
        for j in range(1, lb + 1):
            up = row[j]
            cost = 0 if a[i - 1] == b[j - 1] else 1
            best = diag + cost
            if up + 1 < best:
                best = up + 1
            if row[j - 1] + 1 < best:
                best = row[j - 1] + 1
            row[j] = best
            diag = up
    return row[lb]


def levenshtein_batch(const int32_t[::1] query, const int32_t[::1] flat,
                      const int64_t[::1] indptr):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] o = out
    cdef Py_ssize_t i, lq = query.shape[0], maxlen = 0
    for i in range(n):
        if indptr[i + 1] - indptr[i] > maxlen:
            maxlen = indptr[i + 1] - indptr[i]
    cdef int32_t* row = <int32_t*>malloc((maxlen + 1) * sizeof(int32_t))
    if row == NULL:
        raise MemoryError()
    cdef const int32_t* qp = &query[0] if lq > 0 else NULL
    cdef const int32_t* fp = &flat[0] if flat.shape[0] > 0 else NULL
    try:
        with nogil:
            for i in range(n):
                o[i] = _lev(qp, lq, fp + indptr[i], indptr[i + 1] - indptr[i], row)
    finally:
        free(row)
    return out


def symov_batch(const int32_t[::1] query, int64_t offset, const int32_t[::1] flat,
                const int64_t[::1] indptr, int64_t radius):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef Py_ssize_t i, lq = query.shape[0]
    cdef int64_t p, lb, j, lo, hi, d, s, base
    with nogil:
        for i in range(n):
            base = indptr[i]
            lb = indptr[i + 1] - base
            s = 0
            for p in range(lq):
                lo = p + offset - radius
                hi = p + offset + radius
                if lo < 0:
                    lo = 0
                if hi > lb - 1:
                    hi = lb - 1
                for j in range(lo, hi + 1):
                    if flat[base + j] == query[p]:
                        d = p + offset - j
                        if d < 0:
                            d = -d
                        s += radius - d
            o[i] = s
    return out


def hinge_sgd_epoch(const int64_t[::1] indptr, const int32_t[::1] indices,
                    const double[::1] y, const int64_t[::1] order,
                    double[::1] w, double[::1] state, double lam):
    """One Pegasos pass; ``state`` holds (scale, bias, t) and is updated in place."""
    cdef double scale = state[0], bias = state[1], t = state[2]
    cdef double eta, score, yi
    cdef Py_ssize_t k, r, dim = w.shape[0], d
    cdef int64_t j
    with nogil:
        for k in range(order.shape[0]):
            r = order[k]
            t += 1.0
            eta = 1.0 / (lam * t)
            yi = y[r]
            score = 0.0
            for j in range(indptr[r], indptr[r + 1]):
                score += w[indices[j]]
            score = scale * score + bias
            scale *= 1.0 - eta * lam
            if yi * score < 1.0:
                for j in range(indptr[r], indptr[r + 1]):
                    w[indices[j]] += eta * yi / scale
                bias += eta * yi
            if scale < 1e-9:
                for d in range(dim):
                    w[d] *= scale
                scale = 1.0
    state[0] = scale
    state[1] = bias
    state[2] = t
