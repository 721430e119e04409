"""Pure-Python edit-distance kernels and alignment backtracking.

``prefix_match`` and ``edit_distance`` have Cython twins in ``_kernels``;
the backend actually used is selected in :mod:`clonefinder.kernels`.
Negative symbols are sentinels: they never match and can never be consumed
by an alignment, which keeps clones from crossing file/method boundaries.
"""
from __future__ import annotations

INF = 1 << 30

BACKEND_NAME = "python"


def prefix_match(seq, ws: int, we: int, j: int, budget: int):
    """Match the word ``seq[ws:we]`` against ``seq[j:]`` with at most *budget* edits.

    Returns ``(l, k, cost)``: the maximal ``l <= we - ws`` such that some
    ``k >= j - 1`` gives edit distance ``cost <= budget`` between
    ``seq[ws:ws+l]`` and ``seq[j:k+1]``; among valid ``k`` for that ``l``
    the cost is minimal and ``k`` maximal.
    """
    m = we - ws
    # cap the word at the first sentinel
    m_eff = 0
    while m_eff < m and seq[ws + m_eff] >= 0:
        m_eff += 1
    # cap consumable sequence at its end / first sentinel
    n = len(seq)
    t_lim = 0
    t_cap = m_eff + budget
    while t_lim < t_cap and j + t_lim < n and seq[j + t_lim] >= 0:
        t_lim += 1

    best_l, best_k, best_cost = 0, j - 1, 0
    if m_eff == 0:
        return best_l, best_k, best_cost

    # banded DP; row l holds D[l][t] for t in [lo, hi]
    hi0 = min(budget, t_lim)
    prev = list(range(hi0 + 1))
    prev_lo = 0
    for l in range(1, m_eff + 1):
        wsym = seq[ws + l - 1]
        lo = max(0, l - budget)
        hi = min(l + budget, t_lim)
        if lo > hi:
            break
        cur = [INF] * (hi - lo + 1)
        prev_hi = prev_lo + len(prev) - 1
        for t in range(lo, hi + 1):
            best = INF
            if prev_lo <= t <= prev_hi:
                d = prev[t - prev_lo] + 1  # drop word symbol
                if d < best:
                    best = d
            if t > 0:
                if prev_lo <= t - 1 <= prev_hi:
                    d = prev[t - 1 - prev_lo] + (0 if wsym == seq[j + t - 1] else 1)
                    if d < best:
                        best = d
                if t - 1 >= lo:
                    d = cur[t - 1 - lo] + 1  # extra sequence symbol
                    if d < best:
                        best = d
            cur[t - lo] = best
        row_min = min(cur)
        if row_min > budget:
            break  # row minima never decrease
        best_l = l
        best_cost = row_min
        for t in range(hi, lo - 1, -1):
            if cur[t - lo] == row_min:
                best_k = j + t - 1
                break
        prev, prev_lo = cur, lo
    return best_l, best_k, best_cost


def edit_distance(seq, a0: int, a1: int, b0: int, b1: int, bound: int) -> int:
    """Edit distance between ``seq[a0:a1]`` and ``seq[b0:b1]``, or ``bound + 1``."""
    la = a1 - a0
    lb = b1 - b0
    if abs(la - lb) > bound:
        return bound + 1
    for i in range(a0, a1):
        if seq[i] < 0:
            return bound + 1
    for i in range(b0, b1):
        if seq[i] < 0:
            return bound + 1
    prev = list(range(min(bound, lb) + 1))
    prev_lo = 0
    for i in range(1, la + 1):
        asym = seq[a0 + i - 1]
        lo = max(0, i - bound)
        hi = min(i + bound, lb)
        if lo > hi:
            return bound + 1
        cur = [INF] * (hi - lo + 1)
        prev_hi = prev_lo + len(prev) - 1
        for t in range(lo, hi + 1):
            best = INF
            if prev_lo <= t <= prev_hi:
                d = prev[t - prev_lo] + 1
                if d < best:
                    best = d
            if t > 0:
                if prev_lo <= t - 1 <= prev_hi:
                    d = prev[t - 1 - prev_lo] + (0 if asym == seq[b0 + t - 1] else 1)
                    if d < best:
                        best = d
                if t - 1 >= lo:
                    d = cur[t - 1 - lo] + 1
                    if d < best:
                        best = d
            cur[t - lo] = best
        if min(cur) > bound:
            return bound + 1
        prev, prev_lo = cur, lo
    if prev_lo <= lb <= prev_lo + len(prev) - 1:
        d = prev[lb - prev_lo]
        return d if d <= bound else bound + 1
    return bound + 1


OP_MATCH = "m"
OP_SUBST = "s"
OP_INSERT = "i"  # extra symbol in `a`
OP_DELETE = "d"  # extra symbol in `b`


def alignment(a, b, bound: int):
    """Optimal alignment of sequences *a* and *b* within *bound* edits.

    Returns ``(cost, ops)`` where ops is a list over OP_* codes from the
    start to the end of both sequences, or None if the distance exceeds
    *bound*.  Backtracking prefers matches near the end, so trailing-edit
    trimming removes as little as possible.
    """
    la, lb = len(a), len(b)
    if abs(la - lb) > bound:
        return None
    width = 2 * bound + 1
    rows = []
    prev = [t if t <= bound else INF for t in range(min(bound, lb) + 1)]
    rows.append((0, list(prev)))
    prev_lo = 0
    for i in range(1, la + 1):
        lo = max(0, i - bound)
        hi = min(i + bound, lb)
        if lo > hi:
            return None
        cur = [INF] * (hi - lo + 1)
        prev_hi = prev_lo + len(prev) - 1
        for t in range(lo, hi + 1):
            best = INF
            if prev_lo <= t <= prev_hi and prev[t - prev_lo] < INF:
                best = prev[t - prev_lo] + 1
            if t > 0:
                if prev_lo <= t - 1 <= prev_hi and prev[t - 1 - prev_lo] < INF:
                    d = prev[t - 1 - prev_lo] + (0 if a[i - 1] == b[t - 1] else 1)
                    if d < best:
                        best = d
                if t - 1 >= lo and cur[t - 1 - lo] < INF:
                    d = cur[t - 1 - lo] + 1
                    if d < best:
                        best = d
            cur[t - lo] = best
        rows.append((lo, list(cur)))
        prev, prev_lo = cur, lo
    lo, last = rows[la]
    if not (lo <= lb <= lo + len(last) - 1) or last[lb - lo] > bound:
        return None
    cost = last[lb - lo]

    def cell(i, t):
        lo_i, row = rows[i]
        if lo_i <= t <= lo_i + len(row) - 1:
            return row[t - lo_i]
        return INF

    ops = []
    i, t = la, lb
    while i > 0 or t > 0:
        here = cell(i, t)
        if i > 0 and t > 0 and a[i - 1] == b[t - 1] and cell(i - 1, t - 1) == here:
            ops.append(OP_MATCH)
            i -= 1
            t -= 1
        elif i > 0 and t > 0 and cell(i - 1, t - 1) + 1 == here:
            ops.append(OP_SUBST)
            i -= 1
            t -= 1
        elif i > 0 and cell(i - 1, t) + 1 == here:
            ops.append(OP_INSERT)
            i -= 1
        else:
            ops.append(OP_DELETE)
            t -= 1
    ops.reverse()
    return cost, ops
