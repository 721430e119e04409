# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edit-distance kernels: the hot inner loops of the clone search.

Mirrors the pure-Python implementations in clonefinder.align; the active
backend is chosen in clonefinder.kernels at import time.
"""
from libc.stdlib cimport free, malloc

cdef long long INF = 1 << 60

BACKEND_NAME = "native"


def prefix_match(const long long[::1] seq, Py_ssize_t ws, Py_ssize_t we,
                 Py_ssize_t j, long long budget):
    """See clonefinder.align.prefix_match."""
    cdef Py_ssize_t m = we - ws
    cdef Py_ssize_t n = seq.shape[0]
    cdef Py_ssize_t m_eff = 0
    while m_eff < m and seq[ws + m_eff] >= 0:
        m_eff += 1
    cdef Py_ssize_t t_lim = 0
    cdef Py_ssize_t t_cap = m_eff + budget
    while t_lim < t_cap and j + t_lim < n and seq[j + t_lim] >= 0:
        t_lim += 1

    cdef Py_ssize_t best_l = 0
    cdef Py_ssize_t best_k = j - 1
    cdef long long best_cost = 0
    if m_eff == 0:
        return best_l, best_k, best_cost

    cdef Py_ssize_t band = 2 * budget + 2
    cdef long long *prev = <long long *> malloc(band * sizeof(long long))
    cdef long long *cur = <long long *> malloc(band * sizeof(long long))
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()

    cdef Py_ssize_t prev_lo = 0
    cdef Py_ssize_t prev_hi = min(budget, t_lim)
    cdef Py_ssize_t l, lo, hi, t, tb
    cdef long long wsym, best, d, row_min
    cdef long long *tmp
    for t in range(prev_hi + 1):
        prev[t] = t

    try:
        for l in range(1, m_eff + 1):
            wsym = seq[ws + l - 1]
            lo = l - budget
            if lo < 0:
                lo = 0
            hi = l + budget
            if hi > t_lim:
                hi = t_lim
            if lo > hi:
                break
            row_min = INF
            for t in range(lo, hi + 1):
                best = INF
                if prev_lo <= t <= prev_hi:
                    d = prev[t - prev_lo] + 1
                    if d < best:
                        best = d
                if t > 0:
                    if prev_lo <= t - 1 <= prev_hi:
                        d = prev[t - 1 - prev_lo]
                        if wsym != seq[j + t - 1]:
                            d += 1
                        if d < best:
                            best = d
                    if t - 1 >= lo:
                        d = cur[t - 1 - lo] + 1
                        if d < best:
                            best = d
                cur[t - lo] = best
                if best < row_min:
                    row_min = best
            if row_min > budget:
                break
            best_l = l
            best_cost = row_min
            for t in range(hi, lo - 1, -1):
                if cur[t - lo] == row_min:
                    best_k = j + t - 1
                    break
            tmp = prev
            prev = cur
            cur = tmp
            prev_lo = lo
            prev_hi = hi
    finally:
        free(prev)
        free(cur)
    return best_l, best_k, best_cost


def edit_distance(const long long[::1] seq, Py_ssize_t a0, Py_ssize_t a1,
                  Py_ssize_t b0, Py_ssize_t b1, long long bound):
    """See clonefinder.align.edit_distance."""
    cdef Py_ssize_t la = a1 - a0
    cdef Py_ssize_t lb = b1 - b0
    cdef Py_ssize_t i, t, lo, hi
    if la - lb > bound or lb - la > bound:
        return bound + 1
    for i in range(a0, a1):
        if seq[i] < 0:
            return bound + 1
    for i in range(b0, b1):
        if seq[i] < 0:
            return bound + 1

    cdef Py_ssize_t band = 2 * bound + 2
    cdef long long *prev = <long long *> malloc(band * sizeof(long long))
    cdef long long *cur = <long long *> malloc(band * sizeof(long long))
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()

    cdef Py_ssize_t prev_lo = 0
    cdef Py_ssize_t prev_hi = min(bound, lb)
    cdef long long asym, best, d, row_min, result
    cdef long long *tmp
    for t in range(prev_hi + 1):
        prev[t] = t

    result = bound + 1
    try:
        for i in range(1, la + 1):
            asym = seq[a0 + i - 1]
            lo = i - bound
            if lo < 0:
                lo = 0
            hi = i + bound
            if hi > lb:
                hi = lb
            if lo > hi:
                return bound + 1
            row_min = INF
            for t in range(lo, hi + 1):
                best = INF
                if prev_lo <= t <= prev_hi:
                    d = prev[t - prev_lo] + 1
                    if d < best:
                        best = d
                if t > 0:
                    if prev_lo <= t - 1 <= prev_hi:
                        d = prev[t - 1 - prev_lo]
                        if asym != seq[b0 + t - 1]:
                            d += 1
                        if d < best:
                            best = d
                    if t - 1 >= lo:
                        d = cur[t - 1 - lo] + 1
                        if d < best:
                            best = d
                cur[t - lo] = best
                if best < row_min:
                    row_min = best
            if row_min > bound:
                return bound + 1
            tmp = prev
            prev = cur
            cur = tmp
            prev_lo = lo
            prev_hi = hi
        if la == 0:
            if lb <= bound:
                result = lb
        elif prev_lo <= lb <= prev_hi:
            d = prev[lb - prev_lo]
            if d <= bound:
                result = d
    finally:
        free(prev)
        free(cur)
    return result
