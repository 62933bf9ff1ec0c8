"""Uncompacted trie over the suffixes of 2r-character windows.

Window ``j`` (0-based) is W[rj+1 .. r(j+2)].  Every node remembers the
leftmost text position at which its path label was inserted, which lets the
short-factor search stop as soon as a label only occurs to the right of the
current factor start.
"""

from __future__ import annotations

from .core_params import PackedText

ROOT = 0
_DENSE_SIGMA = 64
_INF = 1 << 62


class BlockTrie:
    def __init__(self, text: PackedText):
        self.text = text
        self.params = text.params
        self.dense = self.params.sigma <= _DENSE_SIGMA
        self._children = [self._new_map()]
        self.min_pos = [_INF]
        self.windows_ingested = 0
        self.windows_skipped = 0

    def _new_map(self):
        # node 0 is the root and never a child, so 0 marks "absent"
        return [0] * self.params.sigma if self.dense else {}

    def __len__(self) -> int:
        return len(self.min_pos)

    @property
    def node_count(self) -> int:
        return len(self.min_pos)

    def child(self, node: int, c: int) -> int:
        kids = self._children[node]
        return kids[c] if self.dense else kids.get(c, 0)

    def _add_child(self, node: int, c: int, pos: int) -> int:
        new = len(self.min_pos)
        self._children.append(self._new_map())
        self.min_pos.append(pos)
        self._children[node][c] = new
        return new

    def ingest_window(self, j: int) -> None:
        """Insert all suffixes of window ``j``, truncated to the appended text."""
        r = self.params.r
        start = r * j + 1
        stop = min(r * (j + 2), len(self.text))
        if start > stop:
            return
        data = self.text.data
        node = ROOT
        for p in range(start - 1, stop):
            node = self.child(node, data[p])
            if not node:
                break
        else:
            self.windows_skipped += 1
            return
        self.windows_ingested += 1
        children = self._children
        min_pos = self.min_pos
        dense = self.dense
        for s in range(start, stop + 1):
            node = ROOT
            for p in range(s - 1, stop):
                c = data[p]
                nxt = children[node][c] if dense else children[node].get(c, 0)
                if nxt:
                    if s < min_pos[nxt]:
                        min_pos[nxt] = s
                else:
                    nxt = self._add_child(node, c, s)
                node = nxt

    def descend(self, node: int, start: int, stop: int, max_pos: int) -> tuple:
        """Follow W[start..stop] from ``node`` while labels occur at or before ``max_pos``.

        Returns the last accepted node and the number of characters accepted.
        """
        data = self.text.data
        children = self._children
        min_pos = self.min_pos
        dense = self.dense
        matched = 0
        for p in range(start - 1, stop):
            c = data[p]
            nxt = children[node][c] if dense else children[node].get(c, 0)
            if not nxt or min_pos[nxt] > max_pos:
                break
            node = nxt
            matched += 1
        return node, matched

    def path_label(self, node: int) -> list:
        """Characters spelled from the root to ``node`` (linear scan; for tests)."""
        parent = {}
        for u, kids in enumerate(self._children):
            items = enumerate(kids) if self.dense else kids.items()
            for c, v in items:
                if v:
                    parent[v] = (u, c)
        label = []
        while node != ROOT:
            node, c = parent[node]
            label.append(c)
        return label[::-1]

    def iter_nodes(self):
        """Yield (label tuple, min_pos) for every non-root node."""
        stack = [(ROOT, ())]
        while stack:
            node, label = stack.pop()
            kids = self._children[node]
            items = enumerate(kids) if self.dense else kids.items()
            for c, v in items:
                if v:
                    lab = label + (c,)
                    yield lab, self.min_pos[v]
                    stack.append((v, lab))
