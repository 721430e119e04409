"""Independent brute-force oracles used to check the detector.

Everything here is deliberately naive (full DP matrices, quadratic pair
enumeration, direct suffix insertion) and shares no code with the package
internals it verifies.
"""
from __future__ import annotations


def edit_distance_oracle(a, b) -> int:
    """Textbook full-matrix edit distance (insert / remove / change)."""
    la, lb = len(a), len(b)
    dist = [[0] * (lb + 1) for _ in range(la + 1)]
    for i in range(la + 1):
        dist[i][0] = i
    for j in range(lb + 1):
        dist[0][j] = j
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            dist[i][j] = min(
                dist[i - 1][j] + 1,
                dist[i][j - 1] + 1,
                dist[i - 1][j - 1] + cost,
            )
    return dist[la][lb]


def prefix_match_oracle(word, seq, j, budget):
    """Brute force over all (l, k): maximal l, then minimal cost, then maximal k."""
    def clean(xs):
        out = []
        for x in xs:
            if x < 0:
                break
            out.append(x)
        return out

    word = clean(word)
    tail = clean(seq[j:])
    best = (0, j - 1, 0)
    for l in range(1, len(word) + 1):
        found = None
        for t in range(0, len(tail) + 1):
            cost = edit_distance_oracle(word[:l], tail[:t])
            if cost <= budget:
                if found is None or cost < found[0] or (cost == found[0] and t > found[1]):
                    found = (cost, t)
        if found is not None:
            best = (l, j + found[1] - 1, found[0])
    return best


def _covered_free(pairs):
    def contains(outer, inner):
        return outer[0] <= inner[0] and inner[1] <= outer[1]

    ordered = sorted(
        pairs, key=lambda p: (-(p[0][1] - p[0][0] + p[1][1] - p[1][0]), p)
    )
    kept = []
    for a, b in ordered:
        covered = any(
            (contains(ka, a) and contains(kb, b)) or (contains(ka, b) and contains(kb, a))
            for ka, kb in kept
        )
        if not covered:
            kept.append((a, b))
    return set(kept)


def maximal_exact_pairs(symbols, min_len):
    """All left-maximal full-extension exact repeats, minus significantly
    overlapping pairs and pairs covered by another pair."""
    n = len(symbols)
    raw = set()
    for i in range(n):
        for j in range(i + 1, n):
            l = 0
            while (
                i + l < n
                and j + l < n
                and symbols[i + l] >= 0
                and symbols[i + l] == symbols[j + l]
            ):
                l += 1
            if l < min_len:
                continue
            if i > 0 and j > 0 and symbols[i - 1] >= 0 and symbols[i - 1] == symbols[j - 1]:
                continue
            a, b = (i, i + l - 1), (j, j + l - 1)
            inter = min(a[1], b[1]) - max(a[0], b[0]) + 1
            if inter > 0 and 2 * inter > l:
                continue
            raw.add((a, b))
    return _covered_free(raw)


def suffixes_oracle(symbols):
    """The sorted multiset of suffixes of a sequence (for tree checks)."""
    return sorted(tuple(symbols[i:]) for i in range(len(symbols)))
