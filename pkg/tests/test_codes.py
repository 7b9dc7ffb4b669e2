import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxarcs.codes import (
    WeightDistribution,
    check_minimum_words_are_blocks,
    code_of_design,
    krawtchouk_column,
    low_weight_words,
    macwilliams,
    majority_logic_decode,
    minimum_distance,
    punctured_sphere_packing_ok,
    rank_bounds,
    sphere_packing_ok,
    verify_code_properties,
    weight_distribution,
)
from maxarcs.errors import DecodingFailure, InconsistentParameters, ZeroCode
from maxarcs.gf2 import BitVector, code_from_rows, dual_code, iter_codeword_bits, popcount, weight_counts


@st.composite
def codes(draw, max_n=14):
    n = draw(st.integers(2, max_n))
    rows = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=n))
    return code_from_rows(rows, n)


def test_krawtchouk_small():
    # K_j(0) = C(n, j)
    assert krawtchouk_column(5, 0) == [1, 5, 10, 10, 5, 1]
    assert krawtchouk_column(4, 4) == [1, -4, 6, -4, 1]


@settings(max_examples=150, deadline=None)
@given(codes())
def test_macwilliams_matches_enumeration(c):
    d = dual_code(c)
    assert macwilliams(weight_counts(d), c.n) == weight_counts(c)
    assert weight_distribution(c).counts == tuple(weight_counts(c))


def test_macwilliams_on_design_codes(design_m2, design_m3):
    for d in (design_m2, design_m3):
        c = code_of_design(d)
        assert c.k <= 20
        assert macwilliams(weight_counts(dual_code(c)), c.n) == weight_counts(c)


@settings(max_examples=60, deadline=None)
@given(codes(max_n=12), st.integers(1, 4))
def test_low_weight_words(c, w):
    words = sorted(tuple(j for j in range(c.n) if x >> j & 1) for x in iter_codeword_bits(c) if popcount(x) == w)
    assert low_weight_words(c, w) == words


def test_minimum_distance_and_zero_code():
    assert minimum_distance(code_from_rows([0b111, 0b011], 3)) == 1
    with pytest.raises(ZeroCode):
        minimum_distance(code_from_rows([], 3))


def test_weight_distribution_type():
    wd = WeightDistribution(4, (1, 0, 3, 0, 0))
    assert wd.min_distance == 2 and wd.size == 4 and wd[9] == 0 and wd.nonzero() == {0: 1, 2: 3}


def test_rank_bounds_m2():
    b = rank_bounds(16, 2, 2, 4, 6, True)
    assert (b.lower, b.upper, b.t) == (8, 11, 2)
    assert 9 in b


def test_rank_bounds_consistency():
    with pytest.raises(InconsistentParameters):
        rank_bounds(17, 2, 2, 4, 6)
    with pytest.raises(InconsistentParameters):
        rank_bounds(16, 2, 2, 4, 6, has_hyperoval=False)
    with pytest.raises(InconsistentParameters):
        rank_bounds(16, 2, 2, 3, 6)


def test_sphere_packing():
    assert sphere_packing_ok(7, 4, 3)
    assert not sphere_packing_ok(7, 5, 3)
    assert punctured_sphere_packing_ok(8, 4, 4)
    assert not punctured_sphere_packing_ok(51, 45, 4)


def test_decoder_corrects_all_small_patterns_m2(design_m2):
    d = design_m2
    cp = dual_code(code_of_design(d))
    t = 2  # 2^(m-1)
    patterns = [0] + [1 << i for i in range(d.v)] + [(1 << i) | (1 << j) for i in range(d.v) for j in range(i)]
    for word in iter_codeword_bits(cp):
        for e in patterns:
            out = majority_logic_decode(d, BitVector(d.v, word ^ e))
            assert out.codeword.bits == word
            assert out.within_capacity
            assert popcount(e) <= t


def test_decoder_failure_is_reported(design_m2):
    # a word the decoder cannot bring into C-perp, if one exists, raises
    rng = random.Random(1)
    for _ in range(200):
        x = rng.getrandbits(design_m2.v)
        try:
            out = majority_logic_decode(design_m2, BitVector(design_m2.v, x))
        except DecodingFailure as exc:
            assert exc.word is not None
        else:
            assert out.codeword.bits in dual_code(code_of_design(design_m2))


def test_verify_code_properties(design_m2, design_m3):
    r2 = verify_code_properties(design_m2, decode_trials=50)
    assert r2["code"] == [16, 9, 4] and r2["dual_code"] == [16, 7, 6]
    r3 = verify_code_properties(design_m3, decode_trials=50)
    assert r3["code"] == [28, 19, 4] and r3["dual_code"] == [28, 9, 10]
    assert r3["A_d_perp"] == r3["hyperovals"] == 84


def test_minimum_words_are_blocks(design_m2, design_m3):
    for d in (design_m2, design_m3):
        rep = check_minimum_words_are_blocks(d)
        assert rep["all_min_words_are_blocks"] and rep["A_4"] == d.b
