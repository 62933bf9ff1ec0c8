"""Implicit suffix tree of the meta-word, built online by Ukkonen's algorithm.

Each block of ``r`` characters is one symbol.  Edge labels are intervals of
block indices, and because block ``b`` (0-based) covers text characters
``b*r .. b*r + r - 1``, the characters of any edge label form one contiguous
slice of the text.

Children of a vertex are kept in a dict keyed by the first block value plus a
sorted key list; the sorted list is the navigation structure over the first
blocks of outgoing edges.  Blocks are packed most-significant-character first,
so all children whose first block starts with a word ``P`` occupy one run of
the sorted keys.  Sibling order everywhere (Euler list, leaf ranks) is this
numeric key order.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort

from .core_params import PackedText, pack_codes

ROOT = 0
NIL = -1
OPEN = -1


class SparseSuffixTree:
    """Ukkonen tree over blocks, notifying a listener about new vertices.

    The listener receives ``on_split(vertex, child)`` when ``vertex`` is
    inserted on the edge above ``child`` and ``on_leaf(leaf, parent,
    left_sibling, right_sibling)`` for every new leaf (siblings are ``NIL``
    when absent).
    """

    def __init__(self, text: PackedText, listener=None):
        self.text = text
        self.params = text.params
        self.listener = listener
        self.meta: list = []
        self.terminal = self.params.sentinel
        self.finalized = False
        # per vertex
        self.start = [0]
        self.end = [0]
        self.link = [ROOT]
        self.parent = [NIL]
        self.depth = [0]
        self.leaf_block = [0]
        self.children = [{}]
        self.keys = [[]]
        self.leaf_count = 0
        # active point
        self._node = ROOT
        self._edge = 0
        self._len = 0
        self.remainder = 0
        if listener is not None:
            listener.on_root(ROOT)

    # -- sizes ---------------------------------------------------------

    @property
    def t(self) -> int:
        """Number of real blocks in the tree."""
        return len(self.meta) - (1 if self.finalized else 0)

    @property
    def vertex_count(self) -> int:
        return len(self.start)

    def is_leaf(self, v: int) -> bool:
        return self.leaf_block[v] > 0

    # -- construction ---------------------------------------------------

    def _new_vertex(self, start: int, end: int, parent: int, depth: int, leaf_block: int) -> int:
        v = len(self.start)
        self.start.append(start)
        self.end.append(end)
        self.link.append(ROOT)
        self.parent.append(parent)
        self.depth.append(depth)
        self.leaf_block.append(leaf_block)
        if leaf_block:
            self.children.append(None)
            self.keys.append(None)
        else:
            self.children.append({})
            self.keys.append([])
        return v

    def _edge_blocks(self, v: int) -> int:
        end = self.end[v]
        if end == OPEN:
            end = len(self.meta) - 1
        return end - self.start[v] + 1

    def _add_leaf(self, parent: int, pos: int, suffix: int, events: list) -> None:
        key = self.meta[pos]
        leaf = self._new_vertex(pos, OPEN, parent, 0, suffix + 1)
        keys = self.keys[parent]
        i = bisect_left(keys, key)
        left = self.children[parent][keys[i - 1]] if i > 0 else NIL
        right = self.children[parent][keys[i]] if i < len(keys) else NIL
        keys.insert(i, key)
        self.children[parent][key] = leaf
        self.leaf_count += 1
        events.append(("leaf", leaf, parent, left, right))
        if self.listener is not None:
            self.listener.on_leaf(leaf, parent, left, right)

    def extend(self, value: int) -> list:
        """Append one block value; returns the structural events in creation order."""
        if self.finalized:
            raise RuntimeError("tree already finalized")
        return self._phase(value, skip_last=False)

    def finalize(self) -> list:
        """Turn every remaining implicit suffix into a leaf.

        Appends a unique terminal symbol (never matched by text characters)
        and runs one more phase, except that the suffix consisting of the
        terminal alone gets no leaf.
        """
        if self.finalized:
            return []
        events = self._phase(self.terminal, skip_last=True)
        self.finalized = True
        return events

    def _phase(self, value: int, skip_last: bool) -> list:
        meta = self.meta
        meta.append(value)
        pos = len(meta) - 1
        self.remainder += 1
        events: list = []
        last_new = NIL
        children = self.children
        while self.remainder > 0:
            if self._len == 0:
                self._edge = pos
            key = meta[self._edge]
            node = self._node
            nxt = children[node].get(key)
            if nxt is None:
                suffix = pos - self.remainder + 1
                if not (skip_last and suffix == pos):
                    self._add_leaf(node, pos, suffix, events)
                if last_new != NIL:
                    self.link[last_new] = node
                    last_new = NIL
            else:
                elen = self._edge_blocks(nxt)
                if self._len >= elen:
                    self._edge += elen
                    self._len -= elen
                    self._node = nxt
                    continue
                if meta[self.start[nxt] + self._len] == value:
                    if last_new != NIL and node != ROOT:
                        self.link[last_new] = node
                        last_new = NIL
                    self._len += 1
                    break
                split = self._split(node, nxt, key, events)
                self._add_leaf(split, pos, pos - self.remainder + 1, events)
                if last_new != NIL:
                    self.link[last_new] = split
                last_new = split
            self.remainder -= 1
            if self._node == ROOT and self._len > 0:
                self._len -= 1
                self._edge = pos - self.remainder + 1
            elif self._node != ROOT:
                self._node = self.link[self._node]
        return events

    def _split(self, node: int, child: int, key: int, events: list) -> int:
        s = self.start[child]
        split = self._new_vertex(s, s + self._len - 1, node, self.depth[node] + self._len, 0)
        self.children[node][key] = split
        self.start[child] = s + self._len
        self.parent[child] = split
        ckey = self.meta[self.start[child]]
        self.children[split][ckey] = child
        self.keys[split].append(ckey)
        events.append(("split", split, child))
        if self.listener is not None:
            self.listener.on_split(split, child)
        return split

    # -- queries -------------------------------------------------------

    def is_block_suffix_leaf(self, j: int) -> bool:
        """Whether the suffix starting at block ``j`` (1-based) is a leaf."""
        return 1 <= j <= self.leaf_count

    def resolve_edge(self, v: int, value: int):
        """Child of ``v`` whose edge starts with block ``value``, or None."""
        return self.children[v].get(value)

    def child_span(self, v: int, prefix) -> tuple:
        """First and last child of ``v`` whose first block starts with ``prefix``.

        ``prefix`` is a word of 1..r characters; returns None if no child matches.
        """
        p = self.params
        k = len(prefix)
        if not 1 <= k <= p.r:
            raise ValueError("prefix length must lie in [1, r]")
        pad = (p.r - k) * p.bpc
        lo = pack_codes(list(prefix) + [0] * (p.r - k), p)
        hi = lo | ((1 << pad) - 1)
        return self.span_by_range(v, lo, hi)

    def span_by_range(self, v: int, lo: int, hi: int):
        keys = self.keys[v]
        i = bisect_left(keys, lo)
        j = bisect_right(keys, hi)
        if i >= j:
            return None
        kids = self.children[v]
        return kids[keys[i]], kids[keys[j - 1]]

    def edge_chars(self, v: int) -> int:
        """Number of text characters on the edge entering ``v`` (terminal excluded)."""
        end = self.end[v]
        if end == OPEN:
            end = self.t - 1
        return (end - self.start[v] + 1) * self.params.r

    def string_depth(self, v: int) -> int:
        """String depth of ``v`` in characters (leaf: up to the last real block)."""
        if self.is_leaf(v):
            return (self.t - self.leaf_block[v] + 1) * self.params.r
        return self.depth[v] * self.params.r

    def edge_char(self, v: int, offset: int) -> int:
        """Character ``offset`` (1-based) of the edge label entering ``v``."""
        if not 1 <= offset <= self.edge_chars(v):
            raise IndexError(offset)
        return self.text.data[self.start[v] * self.params.r + offset - 1]

    def edge_text_start(self, v: int) -> int:
        """0-based text index of the first character of the edge entering ``v``."""
        return self.start[v] * self.params.r

    def leaf_border(self, leaf: int) -> int:
        return (self.leaf_block[leaf] - 1) * self.params.r + 1

    def terminal_leaf(self, v: int):
        """Leaf child of ``v`` whose edge is the terminal alone, if any."""
        if not self.finalized:
            return None
        return self.children[v].get(self.terminal)

    # -- inspection helpers (tests / mirrors) ---------------------------

    def edge_label(self, v: int) -> tuple:
        end = self.end[v]
        if end == OPEN:
            end = len(self.meta) - 1
        return tuple(self.meta[self.start[v] : end + 1])

    def path_label(self, v: int) -> tuple:
        parts = []
        while v != ROOT:
            parts.append(self.edge_label(v))
            v = self.parent[v]
        out: tuple = ()
        for part in reversed(parts):
            out += part
        return out

    def dfs_leaves(self, v: int = ROOT) -> list:
        """Leaves below ``v`` in left-to-right (key) order."""
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            if self.is_leaf(u):
                out.append(u)
                continue
            kids = self.children[u]
            for key in reversed(self.keys[u]):
                stack.append(kids[key])
        return out

    def internal_vertices(self) -> list:
        return [v for v in range(self.vertex_count) if not self.is_leaf(v)]
