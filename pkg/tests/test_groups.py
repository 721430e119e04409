import random

from clonefinder import groups as G
from clonefinder import search
from clonefinder.config import SearchParams
from clonefinder.search import CloneCandidate
from helpers import symbol_sequence


def cand(a, occs):
    return CloneCandidate(start=a[0], end=a[1], occurrences=tuple(occs))


def seq_of(n):
    return symbol_sequence(list(range(n)))


def keys(group):
    return [c.key() for c in group.clones]


def test_three_way_connected_component_is_one_group():
    seq = seq_of(60)
    cands = [
        cand((0, 9), [(20, 29, 0)]),
        cand((20, 29), [(40, 49, 1)]),
    ]
    result = G.group(cands, seq)
    assert len(result) == 1
    assert keys(result[0]) == [(0, 9), (20, 29), (40, 49)]
    assert result[0].kind == "inconsistent"


def test_exact_group_kind():
    seq = seq_of(40)
    result = G.group([cand((0, 9), [(20, 29, 0)])], seq)
    assert result[0].kind == "exact"


def test_disjoint_components_stay_separate():
    seq = seq_of(100)
    cands = [
        cand((0, 9), [(20, 29, 0)]),
        cand((50, 59), [(70, 79, 0)]),
    ]
    result = G.group(cands, seq)
    assert len(result) == 2


def test_duplicate_pair_keeps_min_distance():
    seq = seq_of(40)
    cands = [
        cand((0, 9), [(20, 29, 2)]),
        cand((20, 29), [(0, 9, 1)]),
    ]
    result = G.group(cands, seq)
    assert len(result) == 1
    assert [p.distance for p in result[0].pairs] == [1]


def test_filter_overlapping_drops_self_overlap_group():
    seq = seq_of(40)
    overlapping = G.group([cand((0, 14), [(10, 24, 0)])], seq)
    assert G.filter_overlapping(overlapping) == []
    clean = G.group([cand((0, 9), [(20, 29, 0)])], seq)
    assert G.filter_overlapping(clean) == clean


def test_filter_ratio():
    seq = seq_of(60)
    params = SearchParams(max_inconsistency_ratio=0.2)
    ok = G.group([cand((0, 9), [(20, 29, 2)])], seq)  # 2/10 = 0.2, kept
    bad = G.group([cand((30, 39), [(45, 54, 3)])], seq)  # 3/10 > 0.2, dropped
    assert G.filter_ratio(ok, params) == ok
    assert G.filter_ratio(bad, params) == []


def test_filter_contained_drops_nested_group():
    seq = seq_of(80)
    big = G.group([cand((0, 19), [(40, 59, 0)])], seq)
    small = G.group([cand((5, 14), [(45, 54, 0)])], seq)
    kept = G.filter_contained(big + small)
    assert len(kept) == 1
    assert keys(kept[0]) == [(0, 19), (40, 59)]


def test_filter_contained_keeps_larger_cardinality_subset():
    # a group with MORE clones is not contained in one with fewer, even if
    # the regions nest
    seq = seq_of(120)
    two = G.group([cand((0, 19), [(40, 59, 0)])], seq)
    three = G.group([cand((5, 14), [(45, 54, 0), (80, 89, 0)])], seq)
    kept = G.filter_contained(two + three)
    assert len(kept) == 2


def test_merge_shared_unions_groups_with_common_clone():
    seq = seq_of(100)
    g1 = G.group([cand((0, 9), [(20, 29, 0)])], seq)
    g2 = G.group([cand((20, 29), [(60, 69, 1)])], seq)
    merged = G.merge_shared(g1 + g2)
    assert len(merged) == 1
    assert keys(merged[0]) == [(0, 9), (20, 29), (60, 69)]
    assert merged[0].kind == "inconsistent"


def test_merge_shared_no_shared_clone_is_noop():
    seq = seq_of(100)
    g1 = G.group([cand((0, 9), [(20, 29, 0)])], seq)
    g2 = G.group([cand((50, 59), [(70, 79, 0)])], seq)
    assert G.merge_shared(g1 + g2) == g1 + g2


def test_build_groups_end_to_end_three_copies():
    rng = random.Random(0)
    block = [100 + i for i in range(12)]
    junk = lambda n, b: [b + rng.randrange(10**6) * 10 + i for i in range(n)]
    syms = block + junk(4, 10**7) + block + junk(4, 2 * 10**7) + block
    seq = symbol_sequence(syms)
    params = SearchParams(min_clone_length=10, max_edit_distance=0, head_equality=2)
    cands = search.detect_in_sequence(seq, params)
    result = G.build_groups(cands, seq, params)
    assert len(result) == 1
    assert len(result[0].clones) == 3
    assert result[0].kind == "exact"


def test_build_groups_invariants_on_random_corpora():
    params = SearchParams(min_clone_length=5, max_edit_distance=2,
                          max_inconsistency_ratio=0.4, head_equality=1)
    for trial in range(25):
        rng = random.Random(trial)
        n = rng.randint(40, 250)
        syms = [rng.randrange(rng.randint(4, 8)) for _ in range(n)]
        seq = symbol_sequence(syms)
        cands = search.detect_in_sequence(seq, params)
        result = G.build_groups(cands, seq, params)
        seen_regions = set()
        for g in result:
            assert len(g.clones) >= 2
            assert g.pairs
            ordered = sorted(g.clones, key=G.Clone.key)
            assert [c.key() for c in g.clones] == [c.key() for c in ordered]
            # no two clones of one group overlap
            for c1, c2 in zip(ordered, ordered[1:]):
                assert c1.end < c2.start
            # ratio cap respected
            for p in g.pairs:
                assert p.distance / min(p.a.length, p.b.length) <= params.max_inconsistency_ratio
            # after merging, a clone region belongs to exactly one group
            for c in g.clones:
                assert c.key() not in seen_regions
                seen_regions.add(c.key())


def test_group_determinism():
    params = SearchParams(min_clone_length=5, max_edit_distance=2,
                          max_inconsistency_ratio=0.4, head_equality=1)
    rng = random.Random(99)
    syms = [rng.randrange(6) for _ in range(200)]
    seq = symbol_sequence(syms)
    cands = search.detect_in_sequence(seq, params)
    first = G.build_groups(cands, seq, params)
    second = G.build_groups(list(reversed(cands)), seq, params)
    assert [g.sort_key() for g in first] == [g.sort_key() for g in second]
