"""Insert-only dynamic bit vectors and a dynamic wavelet tree built on them.

Bit positions are 1-based for access/select and ``rank_b(i)`` counts bits
equal to ``b`` among the first ``i`` positions, matching the usual succinct
data structure conventions.  Insertion takes an insertion point ``pos`` in
``[0, len]``; the new bit becomes position ``pos + 1``.
"""

from __future__ import annotations

CHUNK_BITS = 4096


class _Fenwick:
    __slots__ = ("tree", "size")

    def __init__(self, values):
        self.size = len(values)
        tree = [0] * (self.size + 1)
        for i, v in enumerate(values, 1):
            tree[i] += v
            j = i + (i & -i)
            if j <= self.size:
                tree[j] += tree[i]
        self.tree = tree

    def add(self, i: int, delta: int) -> None:
        i += 1
        tree, size = self.tree, self.size
        while i <= size:
            tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        """Sum of entries 0..i-1."""
        tree = self.tree
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    def search(self, target: int) -> tuple:
        """Smallest index whose inclusive prefix sum reaches ``target`` (>= 1).

        Returns (index, sum of entries before it).
        """
        tree, size = self.tree, self.size
        pos = 0
        consumed = 0
        step = 1 << size.bit_length()
        while step:
            nxt = pos + step
            if nxt <= size and consumed + tree[nxt] < target:
                pos = nxt
                consumed += tree[nxt]
            step >>= 1
        return pos, consumed

    def search_paired(self, target: int, other: "_Fenwick") -> tuple:
        """Like :meth:`search`, also returning ``other``'s prefix sum before the index.

        Both trees must index arrays of the same length.
        """
        tree, otree, size = self.tree, other.tree, self.size
        pos = consumed = paired = 0
        step = 1 << size.bit_length()
        while step:
            nxt = pos + step
            if nxt <= size and consumed + tree[nxt] < target:
                pos = nxt
                consumed += tree[nxt]
                paired += otree[nxt]
            step >>= 1
        return pos, consumed, paired


class DynamicBitVector:
    """Bit sequence with positional insertion and rank/select in O(log n).

    Bits live in chunks (Python ints used as bit sets, bit i of a chunk being
    its (i+1)-th position).  Two Fenwick trees over the chunk lengths and
    popcounts locate chunks; a full chunk is split in half and the index
    rebuilt, which is amortised over ``CHUNK_BITS / 2`` insertions.
    """

    def __init__(self, bits=()):
        self._chunks = [0]
        self._lens = [0]
        self._ones = [0]
        self._len_index = _Fenwick(self._lens)
        self._one_index = _Fenwick(self._ones)
        self._n = 0
        self._pop = 0
        for i, b in enumerate(bits):
            self.insert(i, b)

    def __len__(self) -> int:
        return self._n

    @property
    def ones(self) -> int:
        return self._pop

    def _locate(self, pos: int) -> tuple:
        """Chunk holding insertion point ``pos`` and the offset inside it."""
        if pos == 0:
            return 0, 0
        idx, before = self._len_index.search(pos)
        return idx, pos - before

    def _reindex(self) -> None:
        self._len_index = _Fenwick(self._lens)
        self._one_index = _Fenwick(self._ones)

    def insert(self, pos: int, bit: int) -> int:
        """Insert ``bit`` at insertion point ``pos``.

        Returns how many bits equal to ``bit`` precede the new one, which is
        what a wavelet descent needs to continue one level down.
        """
        n = self._n
        if not 0 <= pos <= n:
            raise IndexError(f"insertion point {pos} outside [0, {n}]")
        bit = 1 if bit else 0
        chunks = self._chunks
        ltree = self._len_index.tree
        otree = self._one_index.tree
        size = self._len_index.size
        # Fenwick descent over chunk lengths, collecting popcounts on the way
        idx = before = ones_before = 0
        if pos:
            step = 1 << size.bit_length()
            while step:
                nxt = idx + step
                if nxt <= size and before + ltree[nxt] < pos:
                    idx = nxt
                    before += ltree[nxt]
                    ones_before += otree[nxt]
                step >>= 1
        off = pos - before
        x = chunks[idx]
        low = x & ((1 << off) - 1)
        ones_before += low.bit_count()
        chunks[idx] = ((x >> off) << (off + 1)) | (bit << off) | low
        self._n = n + 1
        lens = self._lens
        lens[idx] += 1
        i = idx + 1
        if bit:
            self._ones[idx] += 1
            self._pop += 1
            while i <= size:
                ltree[i] += 1
                otree[i] += 1
                i += i & -i
        else:
            while i <= size:
                ltree[i] += 1
                i += i & -i
        if lens[idx] >= CHUNK_BITS:
            self._split(idx)
        return ones_before if bit else pos - ones_before

    def _split(self, idx: int) -> None:
        x = self._chunks[idx]
        half = self._lens[idx] // 2
        lo = x & ((1 << half) - 1)
        hi = x >> half
        lo_ones = lo.bit_count()
        self._chunks[idx : idx + 1] = [lo, hi]
        self._lens[idx : idx + 1] = [half, self._lens[idx] - half]
        self._ones[idx : idx + 1] = [lo_ones, self._ones[idx] - lo_ones]
        self._reindex()

    def access(self, i: int) -> int:
        if not 1 <= i <= self._n:
            raise IndexError(i)
        idx, off = self._locate(i)
        return (self._chunks[idx] >> (off - 1)) & 1

    def rank1(self, i: int) -> int:
        if i <= 0:
            return 0
        if i >= self._n:
            return self._pop
        idx, before, ones = self._len_index.search_paired(i, self._one_index)
        return ones + (self._chunks[idx] & ((1 << (i - before)) - 1)).bit_count()

    def rank0(self, i: int) -> int:
        if i <= 0:
            return 0
        return min(i, self._n) - self.rank1(i)

    def rank(self, bit: int, i: int) -> int:
        return self.rank1(i) if bit else self.rank0(i)

    def select1(self, k: int) -> int:
        """Position of the k-th one."""
        if not 1 <= k <= self._pop:
            raise IndexError(f"select1({k}) with {self._pop} ones")
        idx, before = self._one_index.search(k)
        pos_before = self._len_index.prefix(idx)
        return pos_before + _select_in_word(self._chunks[idx], k - before)

    def select0(self, k: int) -> int:
        """Position of the k-th zero."""
        zeros = self._n - self._pop
        if not 1 <= k <= zeros:
            raise IndexError(f"select0({k}) with {zeros} zeros")
        # binary search over chunks on the derived zero counts
        lens = self._lens
        lo, hi = 0, len(lens) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            z = self._len_index.prefix(mid + 1) - self._one_index.prefix(mid + 1)
            if z < k:
                lo = mid + 1
            else:
                hi = mid
        idx = lo
        pos_before = self._len_index.prefix(idx)
        zeros_before = pos_before - self._one_index.prefix(idx)
        mask = (1 << lens[idx]) - 1
        return pos_before + _select_in_word(~self._chunks[idx] & mask, k - zeros_before)

    def select(self, bit: int, k: int) -> int:
        return self.select1(k) if bit else self.select0(k)

    def to_list(self) -> list:
        out = []
        for x, n in zip(self._chunks, self._lens):
            out.extend((x >> i) & 1 for i in range(n))
        return out


def _select_in_word(x: int, k: int) -> int:
    """1-based position of the k-th set bit of ``x`` (bit 0 is position 1)."""
    lo, hi = 0, x.bit_length()
    while hi - lo > 1:
        mid = (lo + hi) // 2
        c = (x & ((1 << mid) - 1)).bit_count()
        if c >= k:
            hi = mid
        else:
            lo = mid
    return hi


class DynamicWaveletTree:
    """Wavelet tree over symbols in ``[0, max_value]`` with positional inserts.

    Nodes are identified by their value interval and created lazily.  The
    ``visited`` counter records how many nodes the last range query touched.
    """

    def __init__(self, max_value: int):
        self.max_value = max_value
        self._vectors: dict = {}
        self._n = 0
        self.visited = 0
        self.walks = 0

    def __len__(self) -> int:
        return self._n

    @property
    def node_count(self) -> int:
        return len(self._vectors)

    @property
    def total_bits(self) -> int:
        return sum(len(v) for v in self._vectors.values())

    def _vector(self, lo: int, hi: int) -> DynamicBitVector:
        v = self._vectors.get((lo, hi))
        if v is None:
            v = self._vectors[(lo, hi)] = DynamicBitVector()
        return v

    def insert(self, k: int, value: int) -> None:
        """Insert ``value`` so that it becomes element ``k + 1``."""
        if not 0 <= k <= self._n:
            raise IndexError(f"insertion point {k} outside [0, {self._n}]")
        if not 0 <= value <= self.max_value:
            raise ValueError(f"value {value} outside [0, {self.max_value}]")
        lo, hi = 0, self.max_value
        while lo < hi:
            mid = (lo + hi) // 2
            bv = self._vector(lo, hi)
            bit = 1 if value > mid else 0
            k = bv.insert(k, bit)
            if bit:
                lo = mid + 1
            else:
                hi = mid
        self._n += 1

    def access(self, k: int) -> int:
        if not 1 <= k <= self._n:
            raise IndexError(k)
        lo, hi = 0, self.max_value
        while lo < hi:
            mid = (lo + hi) // 2
            bv = self._vectors[(lo, hi)]
            bit = bv.access(k)
            k = bv.rank(bit, k)
            if bit:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def to_list(self) -> list:
        return [self.access(k) for k in range(1, self._n + 1)]

    def range_candidates(self, start: int, end: int, lo: int, hi: int, limit: int = 3) -> list:
        """Up to ``limit`` distinct positions in [start, end] holding values in [lo, hi].

        The descent prunes empty intervals and value ranges disjoint from
        [lo, hi]; a node whose value range lies inside [lo, hi] becomes a
        fragment of matches.  Matches are then mapped back to root positions
        by select walks: the first two elements in traversal order plus the
        last one.  Returned positions are sorted; if fewer than ``limit``
        matches exist, all are returned.
        """
        self.visited = 0
        self.walks = 0
        start = max(start, 1)
        end = min(end, self._n)
        if start > end or lo > hi or limit < 1:
            return []
        fragments = []
        # (node lo, node hi, start, end, path of (vector, bit) from the root)
        stack = [(0, self.max_value, start, end, ())]
        while stack:
            nlo, nhi, s, e, path = stack.pop()
            self.visited += 1
            if s > e or nhi < lo or nlo > hi:
                continue
            if lo <= nlo and nhi <= hi:
                fragments.append((path, s, e))
                continue
            mid = (nlo + nhi) // 2
            bv = self._vectors[(nlo, nhi)]
            s1 = bv.rank1(s - 1)
            e1 = bv.rank1(e)
            s0 = (s - 1) - s1
            e0 = e - e1
            # right pushed first so the left half is explored first
            stack.append((mid + 1, nhi, s1 + 1, e1, path + ((bv, 1),)))
            stack.append((nlo, mid, s0 + 1, e0, path + ((bv, 0),)))
        picks = []
        for f, (path, s, e) in enumerate(fragments):
            for k in range(s, min(e, s + limit - 2) + 1):
                if len(picks) >= limit - 1:
                    break
                picks.append((f, k))
        last = (len(fragments) - 1, fragments[-1][2]) if fragments else None
        if last is not None and last not in picks:
            picks.append(last)
        out = sorted(self._walk_up(fragments[f][0], k) for f, k in picks)
        return out[:limit]

    def _walk_up(self, path, k: int) -> int:
        self.walks += 1
        for bv, bit in reversed(path):
            k = bv.select(bit, k)
        return k
