"""Online LZ factorization driven by block reads.

The engine pulls blocks of ``r`` characters from a source only when the
confirmed end of the current factor has caught up with the last read
character, so the reader is never more than one block ahead of the answer.

Short factors (< r) come from the block trie.  Longer ones are grown in two
steps: first the sparse suffix tree is extended until the block suffix that
contains the factor start is a leaf; then for every split point ``m`` of a
previous occurrence around its first block border, the text is matched
against the tree and each new candidate locus is checked with
:meth:`OnlineFactorizer.exist`, a wavelet-tree query over leaf ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .block_trie import ROOT as TRIE_ROOT
from .block_trie import BlockTrie
from .core_params import (
    PackedText,
    Params,
    choose_parameters,
    common_prefix,
    pack_codes,
    reversed_value,
    y_range,
)
from .order_index import OrderIndex
from .suffix_tree import NIL, ROOT, SparseSuffixTree
from .wavelet import DynamicWaveletTree

LITERAL = "literal"
COPY = "copy"
CANDIDATE_LIMIT = 3


class InputLengthError(ValueError):
    """The block source delivered a different number of characters than declared."""


@dataclass(frozen=True)
class Factor:
    index: int
    start: int
    length: int
    kind: str
    witness: Optional[int] = None

    @property
    def end(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True)
class Progress:
    """Emitted after every block read: ``confirmed`` characters past ``ell`` are settled."""

    read_pos: int
    ell: int
    confirmed: int
    factors: int


@dataclass
class FactorTrace:
    """Per-factor instrumentation."""

    length: int = 0
    first_step_reads: int = 0
    exist_calls: int = 0
    long_path: bool = False


@dataclass
class EngineStats:
    blocks_read: int = 0
    lag_violations: int = 0
    max_lag: int = 0
    exist_calls: int = 0
    traces: list = field(default_factory=list)


class _Sync:
    """Keeps the order index and the wavelet tree in step with the suffix tree."""

    def __init__(self, engine: "OnlineFactorizer"):
        self.engine = engine

    def on_root(self, root: int) -> None:
        self.engine.order.add_root(root)

    def on_split(self, vertex: int, child: int) -> None:
        self.engine.order.add_split(vertex, child)

    def on_leaf(self, leaf: int, parent: int, left: int, right: int) -> None:
        eng = self.engine
        rank = eng.order.add_leaf(leaf, parent, left, right)
        j = eng.tree.leaf_block[leaf]
        if j == 1:
            value = eng.params.sentinel
        else:
            value = reversed_value(eng.tree.meta[j - 2], eng.params)
        eng.gbwt.insert(rank - 1, value)


def blocks_of(codes: Sequence[int], r: int) -> Iterator[Sequence[int]]:
    for i in range(0, len(codes), r):
        yield codes[i : i + r]


class OnlineFactorizer:
    """One factorization run over a pull-based block source."""

    def __init__(self, params: Params, source: Iterable[Sequence[int]]):
        self.params = params
        self.source = iter(source)
        self.text = PackedText(params)
        self.trie = BlockTrie(self.text)
        self.order = OrderIndex()
        self.gbwt = DynamicWaveletTree(params.sentinel)
        self.tree = SparseSuffixTree(self.text, listener=_Sync(self))
        self.stats = EngineStats()
        self.factors: list = []
        self.read_pos = 0
        self.ell = 0
        self.M = 0
        self.witness: Optional[int] = None
        self._trace = FactorTrace()
        self.peak = {"leaves": 0, "trie_nodes": 0, "wavelet_bits": 0}

    # -- reading -------------------------------------------------------

    @property
    def exhausted(self) -> bool:
        return self.read_pos >= self.params.n

    def _read_block(self):
        """Pull one block and update every structure; yields a Progress event."""
        p = self.params
        r, n = p.r, p.n
        block = next(self.source, None)
        if block is None:
            raise InputLengthError(f"source ended after {self.read_pos} of {n} characters")
        block = list(block)
        size = len(block)
        if self.read_pos + size > n or not (size == r or (size >= 1 and self.read_pos + size == n)):
            raise InputLengthError(
                f"block of {size} characters at position {self.read_pos + 1} does not fit n={n}, r={r}"
            )
        self.text.append(block)
        self.read_pos += size
        if size == r:
            self.tree.extend(pack_codes(block, p))
        t_all = -(-self.read_pos // r)
        self.trie.ingest_window(max(0, t_all - 2))
        if self.read_pos == n:
            self.tree.finalize()
            if next(self.source, None) is not None:
                raise InputLengthError(f"source delivers more than n={n} characters")
        self.stats.blocks_read += 1
        lag = self.read_pos - (self.ell + self.M)
        if lag > self.stats.max_lag:
            self.stats.max_lag = lag
        if lag > r:
            self.stats.lag_violations += 1
        yield Progress(self.read_pos, self.ell, self.M, len(self.factors))

    def _may_read(self) -> bool:
        return not self.exhausted and self.read_pos == self.ell + self.M

    def _confirm(self, length: int, witness: int) -> None:
        if length > self.M:
            self.M = length
            self.witness = witness

    # -- driver ----------------------------------------------------------

    def run(self):
        """Generator of Progress events and Factor objects, in order."""
        n = self.params.n
        while self.ell < n:
            self.M = 0
            self.witness = None
            self._trace = FactorTrace()
            if self.read_pos == self.ell:
                yield from self._read_block()
            length = yield from self._p_less_r()
            if length is None:
                self._trace.long_path = True
                length = yield from self._p_geq_r()
            factor = self._emit(length)
            yield factor
        self._update_peak()

    def _emit(self, length: int) -> Factor:
        start = self.ell + 1
        if self.M == 0:
            factor = Factor(len(self.factors) + 1, start, 1, LITERAL)
            length = 1
        else:
            factor = Factor(len(self.factors) + 1, start, length, COPY, self.witness)
        self.factors.append(factor)
        self._trace.length = length
        self.stats.traces.append(self._trace)
        self.ell += length
        self.M = 0
        if len(self.factors) & 1023 == 0:
            self._update_peak()
        return factor

    def _update_peak(self) -> None:
        peak = self.peak
        peak["leaves"] = max(peak["leaves"], self.tree.leaf_count)
        peak["trie_nodes"] = max(peak["trie_nodes"], self.trie.node_count)
        peak["wavelet_bits"] = max(peak["wavelet_bits"], self.gbwt.total_bits)

    # -- short factors ----------------------------------------------------

    def _p_less_r(self):
        """Length of a factor shorter than r, or None when it is at least r long."""
        r, n = self.params.r, self.params.n
        ell = self.ell
        ellp = ell // r
        end1 = min(r * (ellp + 1), n)
        end2 = min(ell + r, n)
        node, s = self.trie.descend(TRIE_ROOT, ell + 1, end1, ell)
        if s:
            self._confirm(s, self.trie.min_pos[node])
        if ell + s == end1 and end1 < end2:
            if self.read_pos == end1:
                yield from self._read_block()
            node, s2 = self.trie.descend(node, end1 + 1, end2, ell)
            s += s2
            if s:
                self._confirm(s, self.trie.min_pos[node])
        if s == r and ell + r <= n:
            return None
        return max(s, 1)

    # -- long factors ----------------------------------------------------

    def _p_geq_r(self):
        r = self.params.r
        ell = self.ell
        ellp = ell // r
        tree = self.tree
        # first step: grow the tree until block ellp+1 starts a leaf
        before = self.read_pos
        while not tree.is_block_suffix_leaf(ellp + 1):
            reach = tree.t * r - ell
            if reach > self.M:
                self._confirm(reach, self._implicit_witness(ellp))
            yield from self._read_block()
        self._trace.first_step_reads = self.read_pos - before
        # second step
        for m in range(1, r + 1):
            st = (ellp + 1) * r + 1 - m
            if 1 <= st <= ell:
                yield from self._extend_lcp(st)
            yield from self._descend(m)
        return max(self.M, r)

    def _implicit_witness(self, ellp: int) -> int:
        """Start of an earlier occurrence of W[ell+1 .. t*r] while block ellp+1 is implicit.

        The active point spells the longest implicit suffix, starting at block
        ``leaf_count + 1``; any leaf below it starts an earlier copy.
        """
        tree = self.tree
        node, length = tree._node, tree._len
        if length:
            node = tree.children[node][tree.meta[tree._edge]]
        leaf = self.order.kth_suffix_leaf(self.order.span_lo(node))
        block = tree.leaf_block[leaf] + (ellp + 1) - (tree.leaf_count + 1)
        return (block - 1) * self.params.r + 1 + (self.ell - ellp * self.params.r)

    def _extend_lcp(self, st: int):
        """Grow M with the common prefix of W[ell+1..] and W[st..]."""
        data = self.text.data
        ell = self.ell
        k = 0
        while True:
            avail = self.read_pos - ell
            got = common_prefix(data, ell + k, st - 1 + k, avail - k)
            k += got
            if k > self.M:
                self._confirm(k, st)
            if k < avail or not self._may_read():
                return
            yield from self._read_block()

    def _border_ok(self, beta: int, m: int) -> bool:
        start = beta - (m - 1)
        if start < 1 or start > self.ell:
            return False
        data = self.text.data
        return data[start - 1 : beta - 1] == data[self.ell : self.ell + m - 1]

    def _follow_border(self, m: int, beta: int, matched: int):
        """Match W[ell+m+matched..] against W[beta+matched..] by direct comparison."""
        if not self._border_ok(beta, m):
            return
        data = self.text.data
        p0 = self.ell + m - 1
        L = matched
        while True:
            avail = self.read_pos - (p0 + L)
            got = common_prefix(data, p0 + L, beta - 1 + L, avail)
            L += got
            self._confirm(m - 1 + L, beta - (m - 1))
            if got < avail or not self._may_read():
                return
            yield from self._read_block()

    def exist(self, lo_rank: int, hi_rank: int, y, b: int, occ_cap: int) -> Optional[int]:
        """A border with leaf rank in [lo_rank, hi_rank], preceded by ``y``, not ``b``.

        The occurrence start (border - |y|) must lie in [1, occ_cap].  Returns
        the border or None.
        """
        self.stats.exist_calls += 1
        self._trace.exist_calls += 1
        if lo_rank > hi_rank:
            return None
        p = self.params
        if len(y) == 0:
            # the empty word also precedes the pseudo-border at position 1
            lo, hi = 0, p.sentinel
        else:
            lo, hi = y_range(y, p)
        ylen = len(y)
        for rank in self.gbwt.range_candidates(lo_rank, hi_rank, lo, hi, CANDIDATE_LIMIT):
            beta = self.tree.leaf_border(self.order.kth_suffix_leaf(rank))
            if beta != b and 1 <= beta - ylen <= occ_cap:
                return beta
        return None

    def _validate(self, span: tuple, m: int) -> bool:
        lo = self.order.span_lo(span[0])
        hi = self.order.span_hi(span[1])
        r = self.params.r
        ell = self.ell
        y = self.text.data[ell : ell + m - 1]
        b = (ell // r + 1) * r + 1
        beta = self.exist(lo, hi, y, b, ell)
        if beta is None:
            return False
        self._span_witness = beta - (m - 1)
        return True

    def _descend(self, m: int):
        """Match W[ell+m..] in the suffix tree, raising M through validated loci."""
        tree = self.tree
        p = self.params
        r, bpc = p.r, p.bpc
        data = self.text.data
        children, depth = tree.children, tree.depth
        p0 = self.ell + m - 1
        validated = None
        v, k = ROOT, 0
        finalized_seen = tree.finalized
        checked = set()
        while True:
            if tree.finalized:
                if not finalized_seen:
                    finalized_seen = True
                    # vertices passed before the terminal existed
                    u = tree.parent[v]
                    while u != NIL and u != ROOT:
                        checked.discard(u)
                        yield from self._side_check(m, u, checked)
                        u = tree.parent[u]
                yield from self._side_check(m, v, checked)
            Lv = depth[v] * r
            if k < r:
                pos = p0 + Lv + k
                if pos >= self.read_pos:
                    if not self._may_read():
                        return
                    yield from self._read_block()
                    continue
                if k == 0 and m - 1 + Lv + r <= self.M:
                    u = children[v].get(pack_codes(data[pos : pos + r], p))
                    if u is None:
                        return
                    k = r
                    continue
                prefix = 0
                for c in data[p0 + Lv : pos + 1]:
                    prefix = (prefix << bpc) | c
                pad = (r - k - 1) * bpc
                span = tree.span_by_range(v, prefix << pad, (prefix << pad) | ((1 << pad) - 1))
                if span is None:
                    return
                k += 1
                L = Lv + k
                if m - 1 + L > self.M:
                    if span != validated:
                        if not self._validate(span, m):
                            return
                        validated = span
                    self._confirm(m - 1 + L, self._span_witness)
                continue
            u = children[v][pack_codes(data[p0 + Lv : p0 + Lv + r], p)]
            if tree.is_leaf(u):
                yield from self._follow_border(m, tree.leaf_border(u), Lv + k)
                return
            elen = tree.edge_chars(u)
            if k >= elen:
                v, k = u, k - elen
                continue
            pos = p0 + Lv + k
            if pos >= self.read_pos:
                if not self._may_read():
                    return
                yield from self._read_block()
                continue
            lim = min(elen - k, self.read_pos - pos)
            got = common_prefix(data, pos, tree.edge_text_start(u) + k, lim)
            L = Lv + k + got
            if m - 1 + L > self.M:
                key = (u, u)
                if key != validated:
                    if not self._validate(key, m):
                        return
                    validated = key
                self._confirm(m - 1 + L, self._span_witness)
            k += got
            if got < lim:
                return

    def _side_check(self, m: int, v: int, checked: set):
        """Follow the terminal-only leaf below ``v``: its copy runs into the text tail."""
        if v in checked:
            return
        checked.add(v)
        leaf = self.tree.terminal_leaf(v)
        if leaf is not None:
            yield from self._follow_border(m, self.tree.leaf_border(leaf), self.tree.depth[v] * self.params.r)


def factorize(source: Iterable[Sequence[int]], params: Params):
    """Stream of Progress events and Factors for the text delivered by ``source``."""
    return OnlineFactorizer(params, source).run()


def lz_factorize(codes: Sequence[int], sigma: Optional[int] = None, r: Optional[int] = None) -> list:
    """Factor list for a whole code sequence (convenience wrapper)."""
    codes = list(codes)
    if sigma is None:
        sigma = max(codes) + 1 if codes else 1
    params = choose_parameters(len(codes), sigma, r)
    engine = OnlineFactorizer(params, blocks_of(codes, params.r))
    return [ev for ev in engine.run() if isinstance(ev, Factor)]
