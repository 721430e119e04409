"""Approximate clone search: edit-distance-budgeted suffix tree traversal.

From every corpus position a search descends the tree, matching tree words
against the sequence with a bounded edit distance.  Matches long enough are
reported, corrected so they end on an exact match, revalidated against the
true edit distance and finally reduced to a covered-pair-free set.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import align, kernels
from .config import SearchParams
from .suffixtree import Node, SuffixTree
from .units import UnitSequence

Region = tuple[int, int]  # inclusive corpus position range


@dataclass(frozen=True)
class CloneCandidate:
    """A searched region paired with the similar regions found for it.

    ``occurrences`` holds ``(start, end, distance)`` triples; each pairs the
    region ``[start, end]`` with the candidate's own ``[start, end]`` region
    at the given (exact, recomputed) edit distance.
    """

    start: int
    end: int
    occurrences: tuple[tuple[int, int, int], ...]

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def edit_cost(self) -> int:
        return max(d for _, _, d in self.occurrences)


def _descend_exact(tree: SuffixTree, start: int, length: int) -> tuple[Node, int] | None:
    """Exact zero-budget descent of ``text[start:start+length]`` from the root.

    Returns the reached location (node, symbols consumed on its edge); the
    path exists whenever the suffix at *start* is that long, since every
    suffix is in the tree.
    """
    text = tree.text
    node = tree.root
    off = 0
    pos = start
    for _ in range(length):
        if off == node.end - node.start:
            child = node.children.get(text[pos])
            if child is None:
                return None
            node = child
            off = 0
        if text[node.start + off] != text[pos]:
            return None
        off += 1
        pos += 1
    return node, off


def _finalize(
    seq_arr,
    tree: SuffixTree,
    node: Node,
    start: int,
    end: int,
    word_len: int,
    path_cost: int,
    params: SearchParams,
    backend,
    pairs: dict[tuple[Region, Region], int],
) -> None:
    """Turn one raw report into validated, tail-corrected clone pairs."""
    occs = tree.occurrences(node)
    if not occs or (len(occs) == 1 and occs[0] == start):
        return
    p0 = None
    for p in occs:
        if p != start:
            p0 = p
            break
    if p0 is None:
        return

    # all occurrences share the matched word's content, so distance and the
    # trailing-edit correction are computed once
    searched = list(seq_arr[start:end + 1])
    word = list(seq_arr[p0:p0 + word_len])
    result = align.alignment(searched, word, path_cost)
    if result is None:
        return
    cost, ops = result
    trim_a = 0
    trim_w = 0
    idx = len(ops)
    while idx > 0 and ops[idx - 1] != align.OP_MATCH:
        op = ops[idx - 1]
        if op in (align.OP_MATCH, align.OP_SUBST, align.OP_INSERT):
            trim_a += 1
        if op in (align.OP_MATCH, align.OP_SUBST, align.OP_DELETE):
            trim_w += 1
        idx -= 1
    if idx == 0:
        return
    new_end = end - trim_a
    new_word_len = word_len - trim_w
    span = new_end - start + 1
    if span < params.min_clone_length or new_word_len < 1:
        return
    distance = backend.edit_distance(
        seq_arr, start, new_end + 1, p0, p0 + new_word_len, params.max_edit_distance
    )
    if distance > params.max_edit_distance:
        return

    region_a = (start, new_end)
    len_a = span
    for p in occs:
        if p == start:
            continue
        region_b = (p, p + new_word_len - 1)
        # significant overlap: intersection above half the shorter region
        inter = min(region_a[1], region_b[1]) - max(region_a[0], region_b[0]) + 1
        if inter > 0 and 2 * inter > min(len_a, new_word_len):
            continue
        key = (region_a, region_b) if region_a <= region_b else (region_b, region_a)
        prior = pairs.get(key)
        if prior is None or distance < prior:
            pairs[key] = distance


def _suppress_covered(
    pairs: dict[tuple[Region, Region], int]
) -> dict[tuple[Region, Region], int]:
    """Drop pairs whose both regions lie inside another pair's regions."""

    def contains(outer: Region, inner: Region) -> bool:
        return outer[0] <= inner[0] and inner[1] <= outer[1]

    ordered = sorted(
        pairs.items(),
        key=lambda item: (
            -(item[0][0][1] - item[0][0][0] + item[0][1][1] - item[0][1][0]),
            item[0],
        ),
    )
    kept: dict[tuple[Region, Region], int] = {}
    # coverers must be at least as long, so scanning longest-first suffices
    kept_list: list[tuple[Region, Region]] = []
    for (a, b), dist in ordered:
        covered = False
        for ka, kb in kept_list:
            if (contains(ka, a) and contains(kb, b)) or (contains(ka, b) and contains(kb, a)):
                covered = True
                break
        if not covered:
            kept[(a, b)] = dist
            kept_list.append((a, b))
    return kept


def detect(
    seq: UnitSequence,
    tree: SuffixTree,
    params: SearchParams,
    backend=None,
) -> list[CloneCandidate]:
    """Run the budgeted search from every position and return clone candidates.

    Self matches are dropped, candidates are corrected to end on an exact
    match, revalidated against the true edit distance and pairs covered by
    another pair are suppressed.
    """
    params.validate()
    if backend is None:
        backend = kernels
    n = len(seq)
    if n == 0:
        return []
    seq_arr = array("q", tree.text)
    min_len = params.min_clone_length
    e_max = params.max_edit_distance
    head = params.head_equality
    chunk = params.max_word_chunk
    text = tree.text

    # distance from each position to the next sentinel (or end of text)
    run_end = [0] * (len(text) + 1)
    run_end[len(text)] = len(text)
    for i in range(len(text) - 1, -1, -1):
        run_end[i] = i if text[i] < 0 else run_end[i + 1]

    pairs: dict[tuple[Region, Region], int] = {}
    prefix_match = backend.prefix_match

    for i in range(n):
        if run_end[i] - i < min_len:
            continue
        location = _descend_exact(tree, i, head)
        if location is None:
            continue
        start_node, start_off = location
        # stack of (node, edge offset, sequence cursor, budget left,
        #           cost spent, matched word length)
        stack = [(start_node, start_off, i + head, e_max, 0, head)]
        while stack:
            node, off, j, e_left, cost, wlen = stack.pop()
            edge_len = node.end - node.start
            if off >= edge_len:
                for child in node.children.values():
                    stack.append((child, 0, j, e_left, cost, wlen))
                continue
            ws = node.start + off
            we = min(node.end, ws + chunk)
            l, k, step_cost = prefix_match(seq_arr, ws, we, j, e_left)
            if l == we - ws:
                if we < node.end:
                    # word longer than the chunk cap: continue within the edge
                    stack.append((node, off + l, k + 1, e_left - step_cost, cost + step_cost, wlen + l))
                elif node.children:
                    for child in node.children.values():
                        stack.append((child, 0, k + 1, e_left - step_cost, cost + step_cost, wlen + l))
                # a fully matched leaf edge cannot happen: leaves end in a sentinel
            elif k - i + 1 >= min_len:
                _finalize(
                    seq_arr, tree, node, i, k, wlen + l, cost + step_cost,
                    params, backend, pairs,
                )

    surviving = _suppress_covered(pairs)

    by_region: dict[Region, list[tuple[int, int, int]]] = {}
    for (a, b), dist in surviving.items():
        by_region.setdefault(a, []).append((b[0], b[1], dist))
    candidates = [
        CloneCandidate(start=a[0], end=a[1], occurrences=tuple(sorted(occ)))
        for a, occ in sorted(by_region.items())
    ]
    return candidates


def detect_in_sequence(seq: UnitSequence, params: SearchParams, backend=None) -> list[CloneCandidate]:
    """Convenience wrapper: build the suffix tree, then run :func:`detect`."""
    from . import suffixtree

    tree = suffixtree.build(seq.symbols)
    return detect(seq, tree, params, backend=backend)
