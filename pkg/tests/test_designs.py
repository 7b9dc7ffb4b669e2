from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxarcs.arcs import denniston_arc
from maxarcs.designs import (
    Design,
    Resolution,
    check_resolution,
    compatible,
    design_from_arc,
    enumerate_parallel_classes,
    enumerate_resolutions,
    exact_covers,
    find_hyperovals,
    greedy_compatible_set,
    is_steiner,
    max_compatible_bound_check,
    parse_design,
    parse_resolution,
    resolutions_from_embedding,
    serialize_design,
    serialize_resolution,
    steiner_violations,
)
from maxarcs.errors import NotPairwiseCompatible
from maxarcs.geometry import Gf2mField


@pytest.mark.parametrize("m", [2, 3, 4])
def test_every_denniston_design_is_steiner(planes, m):
    f = Gf2mField(m)
    for s in range(1, m + 1):
        d = design_from_arc(denniston_arc(f, s, plane=planes[m]))
        assert is_steiner(d)
        assert d.b * d.k == d.v * d.r


def test_steiner_violations_detects_missing_pair():
    d = Design(4, 2, ((1, 2), (3, 4)))
    assert (1, 3, 0) in steiner_violations(d)
    assert not is_steiner(d)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.frozensets(st.integers(0, 6), min_size=1, max_size=4), min_size=1, max_size=9))
def test_exact_covers_against_brute_force(options):
    options = [sorted(o) for o in options]
    expected = set()
    for r in range(1, len(options) + 1):
        for combo in combinations(range(len(options)), r):
            cells = [x for j in combo for x in options[j]]
            if sorted(cells) == list(range(7)):
                expected.add(combo)
    got = {tuple(s) for s in exact_covers(range(7), options)}
    assert got == expected


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_compiled_exact_cover_matches_python(seed):
    import random

    from maxarcs import designs

    if designs._compiled is None:
        pytest.skip("numba not installed")
    rng = random.Random(seed)
    n = rng.randint(6, 16)
    options = [sorted(rng.sample(range(n), rng.randint(2, 4))) for _ in range(rng.randint(64, 100))]
    slow = sorted(map(tuple, exact_covers(range(n), options, compiled=False)))
    fast = sorted(map(tuple, exact_covers(range(n), options, compiled=True)))
    assert slow == fast


def test_m2_classes_and_resolution(design_m2):
    pcs = enumerate_parallel_classes(design_m2)
    assert len(pcs) == 5
    res = enumerate_resolutions(design_m2, pcs)
    assert len(res) == 1 and check_resolution(design_m2, res[0])


def test_m3_resolutions_and_embedding(arc_m3, design_m3):
    res = enumerate_resolutions(design_m3)
    assert len(res) == 10
    emb = resolutions_from_embedding(arc_m3, design_m3)
    assert len(emb) == len(arc_m3.exterior_lines()) == 10
    assert set(emb) <= set(res)
    report = max_compatible_bound_check(emb, 2, 4)
    assert report == {"m": 10, "bound": 10, "passed": True, "equality": True}
    assert len(greedy_compatible_set(res)) == 10


def test_incompatible_pair_raises(design_m3):
    res = enumerate_resolutions(design_m3)
    with pytest.raises(NotPairwiseCompatible):
        max_compatible_bound_check([res[0], res[0]], 2, 4)
    assert not compatible(res[0], res[0])


def test_hyperoval_counts(design_m2, design_m3):
    for d, expected in ((design_m2, 48), (design_m3, 84)):
        hs = find_hyperovals(d)
        assert len(hs) == expected
        for h in hs[:10]:
            pts = set(h.points)
            assert len(pts) == d.r + 1
            assert all(len(pts & set(b)) in (0, 2) for b in d.blocks)


def test_hyperovals_brute_force(design_m2):
    masks = design_m2.block_masks()
    brute = 0
    for combo in combinations(range(design_m2.v), 6):
        s = sum(1 << p for p in combo)
        if all(bin(s & m).count("1") in (0, 2) for m in masks):
            brute += 1
    assert brute == len(find_hyperovals(design_m2))


def test_text_roundtrip(design_m3):
    d = parse_design(serialize_design(design_m3))
    assert d.blocks == design_m3.blocks
    r = enumerate_resolutions(design_m3)[3]
    assert parse_resolution(serialize_resolution(r)) == r
    assert Resolution.of(reversed([c.block_ids for c in r.classes])) == r
