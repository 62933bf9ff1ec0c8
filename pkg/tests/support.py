"""Shared helpers for the test suite."""

from __future__ import annotations

import itertools

from lzonline import Factor, OnlineFactorizer, Progress, blocks_of, choose_parameters, lz_oracle


class Run:
    """One engine run with everything the checks need."""

    def __init__(self, codes, sigma=None, r=None):
        codes = list(codes)
        if sigma is None:
            sigma = max(codes) + 1
        self.codes = codes
        self.params = choose_parameters(len(codes), sigma, r)
        self.engine = OnlineFactorizer(self.params, blocks_of(codes, self.params.r))
        self.factors = []
        # factor count at every block read
        self.boundaries = []
        for ev in self.engine.run():
            if isinstance(ev, Factor):
                self.factors.append(ev)
            elif isinstance(ev, Progress):
                self.boundaries.append(ev.factors)

    @property
    def spans(self):
        return [(f.start, f.length, f.kind) for f in self.factors]

    def trace_violations(self):
        """(first-step read violations, exist budget violations) over all factors."""
        r = self.params.r
        reads = sum(1 for t in self.engine.stats.traces if t.first_step_reads > t.length + r)
        calls = sum(1 for t in self.engine.stats.traces if t.exist_calls > t.length + r)
        return reads, calls


def oracle_spans(codes):
    return [(f.start, f.length, f.kind) for f in lz_oracle(codes)]


def all_words(sigma, max_len):
    for n in range(1, max_len + 1):
        yield from itertools.product(range(sigma), repeat=n)


class MetaHarness:
    """Suffix tree, order index and wavelet tree over a meta-word, kept in sync.

    The meta-word is stored as a text with r = 1, so meta-characters are just
    character codes.
    """

    def __init__(self, sigma, capacity=64):
        from types import SimpleNamespace

        from lzonline.core_params import PackedText
        from lzonline.factorizer import _Sync
        from lzonline.order_index import OrderIndex
        from lzonline.suffix_tree import SparseSuffixTree
        from lzonline.wavelet import DynamicWaveletTree

        self.params = choose_parameters(capacity, sigma, r=1)
        self.text = PackedText(self.params)
        shell = SimpleNamespace(params=self.params, order=OrderIndex(),
                                gbwt=DynamicWaveletTree(self.params.sentinel))
        self.order, self.gbwt = shell.order, shell.gbwt
        self.tree = SparseSuffixTree(self.text, listener=_Sync(shell))
        shell.tree = self.tree
        self.word = []

    def extend(self, c):
        self.text.append([c])
        self.word.append(c)
        return self.tree.extend(c)
