import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lzonline.wavelet import CHUNK_BITS, DynamicBitVector, DynamicWaveletTree


def naive_rank(bits, bit, i):
    return sum(1 for b in bits[:i] if b == bit)


def naive_select(bits, bit, k):
    seen = 0
    for i, b in enumerate(bits, 1):
        if b == bit:
            seen += 1
            if seen == k:
                return i
    raise AssertionError


def test_bitvector_hand_examples():
    bv = DynamicBitVector()
    bv.insert(0, 1)
    assert bv.access(1) == 1
    bv = DynamicBitVector([1, 0, 1])
    assert bv.rank1(3) == 2
    assert bv.rank1(0) == 0
    assert bv.select0(1) == 2
    assert bv.select1(2) == 3
    with pytest.raises(IndexError):
        bv.select1(3)
    with pytest.raises(IndexError):
        bv.insert(5, 1)
    with pytest.raises(IndexError):
        bv.access(0)


def test_insert_returns_rank():
    bv = DynamicBitVector([1, 0, 1, 1])
    assert bv.insert(3, 1) == 2
    assert bv.insert(4, 0) == 1
    assert bv.to_list() == [1, 0, 1, 1, 0, 1]


@settings(max_examples=60)
@given(st.lists(st.tuples(st.floats(0, 1), st.integers(0, 1)), max_size=400))
def test_bitvector_against_list(ops):
    bv, ref = DynamicBitVector(), []
    for frac, bit in ops:
        pos = int(frac * len(ref))
        bv.insert(pos, bit)
        ref.insert(pos, bit)
    assert bv.to_list() == ref
    assert len(bv) == len(ref) and bv.ones == sum(ref)
    for i in range(len(ref) + 1):
        assert bv.rank1(i) == naive_rank(ref, 1, i)
        assert bv.rank0(i) == naive_rank(ref, 0, i)


def test_bitvector_many_chunks():
    rng = random.Random(9)
    bv, ref = DynamicBitVector(), []
    for _ in range(6 * CHUNK_BITS):
        pos = rng.randint(0, len(ref))
        bit = rng.random() < 0.3
        bv.insert(pos, bit)
        ref.insert(pos, int(bit))
    assert bv.to_list() == ref
    ones = [i for i, b in enumerate(ref, 1) if b]
    zeros = [i for i, b in enumerate(ref, 1) if not b]
    for k in range(1, len(ones) + 1, 37):
        assert bv.select1(k) == ones[k - 1]
    for k in range(1, len(zeros) + 1, 41):
        assert bv.select0(k) == zeros[k - 1]
    for i in range(0, len(ref) + 1, 53):
        assert bv.rank(1, i) == naive_rank(ref, 1, i)


def test_wavelet_examples():
    wt = DynamicWaveletTree(4)
    wt.insert(0, 3)
    assert wt.access(1) == 3
    wt = DynamicWaveletTree(4)
    for k, v in enumerate([2, 0, 3, 1]):
        wt.insert(k, v)
    assert wt.access(3) == 3
    assert wt.range_candidates(2, 4, 1, 3) == [3, 4]
    assert wt.range_candidates(3, 2, 0, 4) == []
    picked = wt.range_candidates(1, 4, 0, 3)
    assert len(picked) == 3 and set(picked) <= {1, 2, 3, 4}
    with pytest.raises(ValueError):
        wt.insert(0, 5)
    with pytest.raises(IndexError):
        wt.insert(9, 0)


def test_sentinel_only_sequence_reports_nothing():
    wt = DynamicWaveletTree(16)
    for k in range(20):
        wt.insert(k, 16)
    assert wt.range_candidates(1, 20, 0, 15) == []
    assert len(wt.range_candidates(1, 20, 0, 16)) == 3


def _check_candidates(ref, wt, s, e, lo, hi, limit=3):
    got = wt.range_candidates(s, e, lo, hi, limit)
    matches = [i for i in range(max(s, 1), min(e, len(ref)) + 1) if lo <= ref[i - 1] <= hi]
    assert got == sorted(set(got))
    assert set(got) <= set(matches)
    assert len(got) == min(limit, len(matches))


@settings(max_examples=80)
@given(st.integers(1, 40), st.data())
def test_wavelet_against_list(max_value, data):
    ops = data.draw(st.lists(st.tuples(st.floats(0, 1), st.integers(0, max_value)), max_size=120))
    wt, ref = DynamicWaveletTree(max_value), []
    for frac, v in ops:
        k = int(frac * len(ref))
        wt.insert(k, v)
        ref.insert(k, v)
    assert wt.to_list() == ref
    for _ in range(10):
        s = data.draw(st.integers(0, len(ref) + 1))
        e = data.draw(st.integers(0, len(ref) + 1))
        lo = data.draw(st.integers(0, max_value))
        hi = data.draw(st.integers(lo, max_value))
        _check_candidates(ref, wt, s, e, lo, hi)


def test_range_query_touches_few_nodes():
    rng = random.Random(4)
    w = 10
    top = 1 << w
    wt, ref = DynamicWaveletTree(top), []
    for _ in range(3000):
        k = rng.randint(0, len(ref))
        v = rng.randint(0, top)
        wt.insert(k, v)
        ref.insert(k, v)
    depth = (top).bit_length() + 1
    for _ in range(300):
        s, e = sorted(rng.sample(range(1, len(ref) + 1), 2))
        lo = rng.randint(0, top)
        hi = rng.randint(lo, top)
        _check_candidates(ref, wt, s, e, lo, hi)
        assert wt.visited <= 4 * depth + 1
        assert wt.walks <= 3
