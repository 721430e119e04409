"""Clones, clone pairs and clone groups, plus the post-detection filters.

Groups are connected components of the pair graph.  The filter pipeline
runs overlap → ratio → containment → merge and is deterministic: all
collections are canonically ordered.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import SearchParams
from .search import CloneCandidate
from .units import UnitSequence


@dataclass(frozen=True, order=True)
class Clone:
    start: int  # corpus position, inclusive
    end: int
    file: str
    first_line: int
    last_line: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def key(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class ClonePair:
    a: Clone
    b: Clone
    distance: int


@dataclass
class CloneGroup:
    clones: list[Clone]
    pairs: list[ClonePair]

    @property
    def kind(self) -> str:
        return "inconsistent" if any(p.distance > 0 for p in self.pairs) else "exact"

    def sort_key(self):
        return tuple(c.key() for c in self.clones)


class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # deterministic: smaller key becomes the root
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def _region_clone(seq: UnitSequence, region: tuple[int, int]) -> Clone:
    first = seq.unit_at(region[0])
    last = seq.unit_at(region[1])
    return Clone(
        start=region[0],
        end=region[1],
        file=first.file,
        first_line=first.first_line,
        last_line=last.last_line,
    )


def group(candidates: list[CloneCandidate], seq: UnitSequence) -> list[CloneGroup]:
    """Form clone groups as connected components over shared clone regions."""
    clones: dict[tuple[int, int], Clone] = {}
    raw_pairs: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
    for cand in candidates:
        region_a = (cand.start, cand.end)
        if region_a not in clones:
            clones[region_a] = _region_clone(seq, region_a)
        for b_start, b_end, dist in cand.occurrences:
            region_b = (b_start, b_end)
            if region_b not in clones:
                clones[region_b] = _region_clone(seq, region_b)
            key = (region_a, region_b) if region_a <= region_b else (region_b, region_a)
            prior = raw_pairs.get(key)
            if prior is None or dist < prior:
                raw_pairs[key] = dist

    uf = UnionFind()
    for (ka, kb) in raw_pairs:
        uf.union(ka, kb)
    members: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for key in clones:
        members.setdefault(uf.find(key), []).append(key)

    groups = []
    for root, keys in members.items():
        if len(keys) < 2:
            continue
        keys.sort()
        group_pairs = [
            ClonePair(clones[ka], clones[kb], dist)
            for (ka, kb), dist in sorted(raw_pairs.items())
            if uf.find(ka) == root
        ]
        groups.append(CloneGroup(clones=[clones[k] for k in keys], pairs=group_pairs))
    groups.sort(key=CloneGroup.sort_key)
    return groups


def filter_overlapping(groups: list[CloneGroup]) -> list[CloneGroup]:
    """Remove groups containing two clones with intersecting unit ranges."""
    out = []
    for g in groups:
        ordered = sorted(g.clones, key=Clone.key)
        overlapping = any(
            ordered[i].end >= ordered[i + 1].start for i in range(len(ordered) - 1)
        )
        if not overlapping:
            out.append(g)
    return out


def filter_ratio(groups: list[CloneGroup], params: SearchParams) -> list[CloneGroup]:
    """Remove groups with a pair whose relative edit distance is too high."""
    cap = params.max_inconsistency_ratio
    out = []
    for g in groups:
        bad = any(
            p.distance / min(p.a.length, p.b.length) > cap for p in g.pairs
        )
        if not bad:
            out.append(g)
    return out


def _contained_in(g: CloneGroup, h: CloneGroup) -> bool:
    if len(h.clones) < len(g.clones):
        return False
    for c in g.clones:
        if not any(hc.start <= c.start and c.end <= hc.end for hc in h.clones):
            return False
    return True


def filter_contained(groups: list[CloneGroup]) -> list[CloneGroup]:
    """Remove groups whose every clone lies inside a clone of a kept group.

    Groups are visited largest-extent first so that mutual (identical)
    containment deterministically keeps the smallest canonical key.
    """
    ordered = sorted(
        groups,
        key=lambda g: (-sum(c.length for c in g.clones), -len(g.clones), g.sort_key()),
    )
    kept: list[CloneGroup] = []
    for g in ordered:
        if any(_contained_in(g, h) for h in kept):
            continue
        kept.append(g)
    kept.sort(key=CloneGroup.sort_key)
    return kept


def merge_shared(groups: list[CloneGroup]) -> list[CloneGroup]:
    """Union groups transitively whenever they share a clone region."""
    uf = UnionFind()
    owner: dict[tuple[int, int], int] = {}
    for idx, g in enumerate(groups):
        uf.union(idx, idx)
        for c in g.clones:
            key = c.key()
            if key in owner:
                uf.union(owner[key], idx)
            else:
                owner[key] = idx
    merged: dict[int, list[CloneGroup]] = {}
    for idx, g in enumerate(groups):
        merged.setdefault(uf.find(idx), []).append(g)
    out = []
    for parts in merged.values():
        if len(parts) == 1:
            out.append(parts[0])
            continue
        clones: dict[tuple[int, int], Clone] = {}
        pairs: dict[tuple[tuple[int, int], tuple[int, int]], ClonePair] = {}
        for part in parts:
            for c in part.clones:
                clones[c.key()] = c
            for p in part.pairs:
                pairs[(p.a.key(), p.b.key())] = p
        out.append(
            CloneGroup(
                clones=[clones[k] for k in sorted(clones)],
                pairs=[pairs[k] for k in sorted(pairs)],
            )
        )
    out.sort(key=CloneGroup.sort_key)
    return out


def build_groups(
    candidates: list[CloneCandidate],
    seq: UnitSequence,
    params: SearchParams,
) -> list[CloneGroup]:
    """Full post-processing pipeline: group, filter, merge."""
    groups = group(candidates, seq)
    groups = filter_overlapping(groups)
    groups = filter_ratio(groups, params)
    groups = filter_contained(groups)
    groups = merge_shared(groups)
    return groups
