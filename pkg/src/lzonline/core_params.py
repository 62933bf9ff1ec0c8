"""Block parameters and the packed representation of text and blocks.

A block of ``r`` characters is packed into one integer (a *meta-character*)
by concatenating the ``bpc``-bit codes of its characters, first character in
the most significant position.  The bit-reversal of a meta-character is the
symbol stored in the wavelet tree; reversing makes "blocks ending with Y" a
contiguous integer interval (see :func:`y_range`).

Positions handed to the public functions here are 1-based, like the text
positions used throughout the package.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "Params",
    "PackedText",
    "choose_parameters",
    "pack_block",
    "pack_codes",
    "extract_char",
    "reversed_value",
    "y_range",
    "lcp",
]

MAX_SIGMA = 1 << 16


@dataclass(frozen=True)
class Params:
    n: int
    sigma: int
    bpc: int
    r: int

    @property
    def w(self) -> int:
        """Width of a meta-character in bits."""
        return self.r * self.bpc

    @property
    def sentinel(self) -> int:
        """Wavelet symbol for "no preceding block"; larger than any packed block."""
        return 1 << self.w

    @property
    def formula_chosen(self) -> bool:
        return self.r == _formula_r(self.n, self.bpc) and self.r >= 1


def _bits_per_char(sigma: int) -> int:
    return max(1, math.ceil(math.log2(max(sigma, 2))))


def _formula_r(n: int, bpc: int) -> int:
    # exact integer floor(log2(n)) avoids float trouble at powers of two
    return (n.bit_length() - 1) // (4 * bpc)


def choose_parameters(n: int, sigma: int, r: Optional[int] = None) -> Params:
    """Pick the block size for a text of length ``n`` over ``sigma`` symbols.

    ``r = floor(log2(n) / (4 * bpc))`` clamped to at least 1.  Passing ``r``
    overrides the formula (used by tests to force small blocks).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= sigma <= MAX_SIGMA:
        raise ValueError(f"sigma must lie in [1, {MAX_SIGMA}]")
    bpc = _bits_per_char(sigma)
    if r is None:
        r = max(1, _formula_r(n, bpc))
    elif r < 1:
        raise ValueError("block size override must be >= 1")
    return Params(n=n, sigma=sigma, bpc=bpc, r=r)


class PackedText:
    """Append-only text of character codes with 1-based random access.

    Codes are held one per byte (or per 16-bit word when sigma > 256) so that
    slice comparisons run at C speed.
    """

    def __init__(self, params: Params):
        self.params = params
        self.data = bytearray() if params.sigma <= 256 else array("H")

    def __len__(self) -> int:
        return len(self.data)

    def append(self, codes: Iterable[int]) -> None:
        codes = list(codes)
        sigma = self.params.sigma
        for c in codes:
            if not 0 <= c < sigma:
                raise ValueError(f"character code {c} outside [0, {sigma})")
        if len(self.data) + len(codes) > self.params.n:
            raise ValueError("text longer than the declared length n")
        self.data.extend(codes)

    def char(self, i: int) -> int:
        if not 1 <= i <= len(self.data):
            raise IndexError(i)
        return self.data[i - 1]

    def substring(self, i: int, j: int) -> list:
        """Characters at positions i..j inclusive."""
        return list(self.data[i - 1 : j])


def pack_codes(codes: Sequence[int], params: Params) -> int:
    if len(codes) != params.r:
        raise ValueError(f"a block has exactly {params.r} characters")
    bpc = params.bpc
    value = 0
    for c in codes:
        value = (value << bpc) | c
    return value


def pack_block(text: PackedText, start: int, params: Optional[Params] = None) -> int:
    """Meta-character of the block W[start .. start+r-1]."""
    params = params or text.params
    if start < 1 or start + params.r - 1 > len(text):
        raise IndexError(f"block at {start} is not fully appended")
    return pack_codes(text.data[start - 1 : start - 1 + params.r], params)


def extract_char(value: int, k: int, params: Params) -> int:
    """Character ``k`` (1-based) of a packed block."""
    if not 1 <= k <= params.r:
        raise IndexError(f"k={k} outside [1, {params.r}]")
    shift = (params.r - k) * params.bpc
    return (value >> shift) & ((1 << params.bpc) - 1)


def _reverse_bits(value: int, width: int) -> int:
    if width == 0:
        return 0
    return int(format(value, f"0{width}b")[::-1], 2)


_REVERSE_TABLES: dict = {}


def reversed_value(value: int, params: Params) -> int:
    """The w-bit representation of ``value`` reversed end to end."""
    w = params.w
    if w <= 16:
        table = _REVERSE_TABLES.get(w)
        if table is None:
            table = _REVERSE_TABLES[w] = [_reverse_bits(v, w) for v in range(1 << w)]
        return table[value]
    return _reverse_bits(value, w)


def y_range(y: Sequence[int], params: Params) -> tuple:
    """Interval of wavelet symbols whose block ends with the word ``y``.

    The block is reversed, so its last characters become the leading bits;
    padding the reversed ``y`` with zeros (ones) gives the smallest (largest)
    matching symbol.
    """
    if len(y) > params.r:
        raise ValueError("|Y| exceeds the block size")
    bpc = params.bpc
    ybits = 0
    for c in y:
        ybits = (ybits << bpc) | c
    width = len(y) * bpc
    head = _reverse_bits(ybits, width)
    pad = params.w - width
    return head << pad, (head << pad) | ((1 << pad) - 1)


def lcp(text: PackedText, i: int, j: int, cap: Optional[int] = None) -> int:
    """Longest common prefix of W[i..] and W[j..], at most ``cap`` characters."""
    n = len(text)
    limit = n - max(i, j) + 1
    if cap is not None:
        limit = min(limit, cap)
    if limit <= 0:
        return 0
    return common_prefix(text.data, i - 1, j - 1, limit)


def common_prefix(data, a: int, b: int, limit: int) -> int:
    """Length of the common prefix of data[a:] and data[b:], up to ``limit``.

    0-based; works chunk-wise with slice equality before falling back to a
    character scan inside the first differing chunk.
    """
    if a == b:
        return limit
    k = 0
    step = 32
    while k < limit:
        size = min(step, limit - k)
        if data[a + k : a + k + size] == data[b + k : b + k + size]:
            k += size
            if step < 4096:
                step <<= 1
            continue
        while data[a + k] == data[b + k]:
            k += 1
        return k
    return limit
