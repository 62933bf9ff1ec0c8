import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lzonline.core_params import (
    PackedText,
    choose_parameters,
    common_prefix,
    extract_char,
    lcp,
    pack_block,
    pack_codes,
    reversed_value,
    y_range,
)


@pytest.mark.parametrize(
    "n, sigma, r, bpc, w",
    [(65536, 4, 2, 2, 4), (256, 256, 1, 8, 8), (1 << 20, 2, 5, 1, 5), (1, 1, 1, 1, 1)],
)
def test_parameter_formula(n, sigma, r, bpc, w):
    p = choose_parameters(n, sigma)
    assert (p.r, p.bpc, p.w) == (r, bpc, w)
    assert p.sentinel == 1 << w


def test_parameter_errors():
    with pytest.raises(ValueError):
        choose_parameters(0, 2)
    with pytest.raises(ValueError):
        choose_parameters(10, 0)
    with pytest.raises(ValueError):
        choose_parameters(10, 2, r=0)
    assert choose_parameters(10, 2, r=3).r == 3


def _params(sigma, r):
    return choose_parameters(100, sigma, r)


def test_pack_examples():
    p = _params(4, 2)
    a, b, c, d = range(4)
    assert pack_codes([b, a], p) == 4
    assert pack_codes([a, a], p) == 0
    assert pack_codes([d, c], p) == 14
    assert extract_char(4, 1, p) == b
    assert extract_char(4, 2, p) == a
    assert extract_char(14, 2, p) == c
    assert reversed_value(0b0100, p) == 0b0010
    assert reversed_value(0, p) == 0
    assert reversed_value(0b1110, p) == 0b0111


@given(st.integers(2, 40), st.integers(1, 5), st.data())
def test_pack_extract_round_trip(sigma, r, data):
    p = _params(sigma, r)
    block = data.draw(st.lists(st.integers(0, sigma - 1), min_size=r, max_size=r))
    v = pack_codes(block, p)
    assert 0 <= v < p.sentinel
    assert [extract_char(v, k, p) for k in range(1, r + 1)] == block
    rev = reversed_value(v, p)
    assert format(rev, f"0{p.w}b") == format(v, f"0{p.w}b")[::-1]
    assert reversed_value(rev, p) == v


def test_pack_rejects_wrong_length():
    with pytest.raises(ValueError):
        pack_codes([0], _params(2, 2))


def test_y_range_examples():
    p = _params(2, 2)
    assert y_range([1], p) == (2, 3)
    assert y_range([0, 1], p) == (2, 2)
    assert y_range([], p) == (0, p.sentinel - 1)
    with pytest.raises(ValueError):
        y_range([0, 0, 0], p)


@pytest.mark.parametrize("sigma, r", [(2, 2), (2, 3), (3, 2), (4, 2), (5, 1)])
def test_y_range_matches_enumeration(sigma, r):
    p = _params(sigma, r)
    blocks = list(itertools.product(range(sigma), repeat=r))
    for ylen in range(r + 1):
        for y in itertools.product(range(sigma), repeat=ylen):
            lo, hi = y_range(y, p)
            for blk in blocks:
                inside = lo <= reversed_value(pack_codes(blk, p), p) <= hi
                assert inside == (blk[r - ylen :] == y)


def test_packed_text_access_and_validation():
    p = choose_parameters(6, 3, r=2)
    t = PackedText(p)
    t.append([0, 1, 2])
    t.append([2, 1])
    assert len(t) == 5
    assert t.char(1) == 0 and t.char(5) == 1
    assert t.substring(2, 4) == [1, 2, 2]
    assert pack_block(t, 3) == pack_codes([2, 2], p)
    with pytest.raises(IndexError):
        pack_block(t, 5)
    with pytest.raises(ValueError):
        t.append([3])
    with pytest.raises(IndexError):
        t.char(0)
    t.append([0])
    with pytest.raises(ValueError):
        t.append([0])


def test_wide_alphabet_storage():
    p = choose_parameters(3, 70000 // 2)
    t = PackedText(p)
    t.append([0, 30000, 34999])
    assert t.substring(1, 3) == [0, 30000, 34999]


def test_lcp_examples():
    p = choose_parameters(4, 2, r=1)
    t = PackedText(p)
    t.append([0, 1, 0, 1])
    assert lcp(t, 1, 3) == 2
    assert lcp(t, 2, 2, cap=2) == 2
    u = PackedText(p)
    u.append([0, 0, 0, 0])
    assert lcp(u, 1, 2) == 3
    assert lcp(u, 1, 1) == 4


@given(st.lists(st.integers(0, 2), max_size=300), st.data())
def test_common_prefix_matches_scan(codes, data):
    buf = bytes(codes)
    n = len(buf)
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(0, n))
    limit = n - max(a, b)
    expected = 0
    while expected < limit and buf[a + expected] == buf[b + expected]:
        expected += 1
    assert common_prefix(buf, a, b, limit) == expected
