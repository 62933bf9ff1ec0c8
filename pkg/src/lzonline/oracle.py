"""Brute-force references used to check the online engine.

Nothing here touches the engine's data structures; only the :class:`Factor`
record is shared so results can be compared field by field.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .factorizer import COPY, LITERAL, Factor


def _as_str(codes: Sequence[int]) -> str:
    return "".join(map(chr, codes))


def lz_oracle(codes: Sequence[int]) -> list:
    """Greedy LZ factorization by direct substring search.

    At cut ``ell`` the factor is the longest ``W[ell+1..ell+L]`` that also
    starts at some position ``st <= ell``; such a copy may overlap the factor
    itself.  ``L = 0`` yields a one-character literal.  The witness is the
    leftmost such ``st``.
    """
    s = _as_str(codes)
    n = len(s)
    if n == 0:
        raise ValueError("empty text")
    out = []
    ell = 0
    while ell < n:
        length = 0
        witness = -1
        # an occurrence starting at st <= ell ends by ell + L - 1 (0-based)
        while ell + length < n:
            hit = s.find(s[ell : ell + length + 1], 0, ell + length)
            if hit < 0:
                break
            length += 1
            witness = hit
        if length == 0:
            out.append(Factor(len(out) + 1, ell + 1, 1, LITERAL))
            ell += 1
        else:
            out.append(Factor(len(out) + 1, ell + 1, length, COPY, witness + 1))
            ell += length
    return out


def check_factorization(codes: Sequence[int], factors: Sequence[Factor]) -> Optional[int]:
    """Index of the first factor violating the LZ rules, or None if all hold.

    Each factor is validated by direct search: its copy exists (or it is a
    fresh literal) and it cannot be extended by one character.
    """
    s = _as_str(codes)
    n = len(s)
    ell = 0
    for f in factors:
        if f.start != ell + 1 or f.length < 1 or ell + f.length > n:
            return f.index
        piece = s[ell : ell + f.length]
        if f.kind == LITERAL:
            if f.length != 1 or piece in s[:ell]:
                return f.index
        else:
            if s.find(piece, 0, ell + f.length - 1) < 0:
                return f.index
            if f.witness is not None:
                w = f.witness - 1
                if w >= ell or s[w : w + f.length] != piece:
                    return f.index
        if ell + f.length < n and s.find(s[ell : ell + f.length + 1], 0, ell + f.length) >= 0:
            return f.index
        ell += f.length
    if ell != n:
        return len(factors) + 1
    return None


def naive_exist(
    borders: Sequence[int],
    codes: Sequence[int],
    lo_rank: int,
    hi_rank: int,
    y: Sequence[int],
    b: int,
    occ_cap: int,
) -> Optional[int]:
    """First border (by rank) in [lo_rank, hi_rank] that passes the exist test.

    ``borders[k-1]`` is the 1-based border of the k-th leaf.  A border is
    accepted when it differs from ``b``, the copy start ``border - |y|`` lies
    in ``[1, occ_cap]`` and ``y`` is spelled right before it.
    """
    ylen = len(y)
    y = list(y)
    for k in range(max(lo_rank, 1), min(hi_rank, len(borders)) + 1):
        beta = borders[k - 1]
        start = beta - ylen
        if beta == b or start < 1 or start > occ_cap:
            continue
        if list(codes[start - 1 : beta - 1]) == y:
            return beta
    return None


class NaiveSuffixStructures:
    """Implicit suffix tree of a short meta-word built from its suffix set.

    ``internal`` holds the labels (tuples) of branching vertices, root
    included as ``()``; ``leaves`` the 1-based start blocks of suffixes that
    occur nowhere else, in left-to-right order; ``edges`` the set of
    (parent label, edge label) pairs.
    """

    def __init__(self, meta_word: Sequence[int], sentinel: int, reverse=None):
        word = tuple(meta_word)
        t = len(word)
        suffixes = [word[j:] for j in range(t)]
        # leaves: suffixes not occurring at an earlier start
        leaf_starts = [
            j + 1 for j in range(t) if not any(suffixes[i][: t - j] == suffixes[j] for i in range(j))
        ]
        prefixes = set()
        for s in suffixes:
            for k in range(len(s) + 1):
                prefixes.add(s[:k])
        branching = {()}
        for p in prefixes:
            nexts = {q[len(p)] for q in prefixes if len(q) == len(p) + 1 and q[: len(p)] == p}
            if len(nexts) >= 2:
                branching.add(p)
        self.word = word
        self.internal = branching
        leaf_labels = {j: suffixes[j - 1] for j in leaf_starts}
        explicit = sorted(branching | set(leaf_labels.values()))
        self.edges = set()
        for lab in explicit:
            if lab == ():
                continue
            parent = max((q for q in branching if len(q) < len(lab) and lab[: len(q)] == q), key=len)
            self.edges.add((parent, lab[len(parent) :]))
        # lexicographic order of tuples of ints == key order of the live tree
        self.leaves = sorted(leaf_starts, key=lambda j: suffixes[j - 1])
        reverse = reverse or (lambda v: v)
        self.gbwt = [sentinel if j == 1 else reverse(word[j - 2]) for j in self.leaves]

    def span(self, label: tuple) -> tuple:
        ranks = [k + 1 for k, j in enumerate(self.leaves) if self.word[j - 1 :][: len(label)] == label]
        return (min(ranks), max(ranks)) if ranks else None


def naive_suffix_structures(meta_word: Sequence[int], sentinel: int = 0, reverse=None):
    return NaiveSuffixStructures(meta_word, sentinel, reverse)
