"""Euler-tour list of the suffix tree kept in an AVL tree.

Internal suffix-tree vertices own two entries (first and last visit), leaves
own one.  The list order *is* the in-order of the AVL tree, and each AVL node
counts the suffix-leaf entries in its subtree, so the rank of a leaf and the
leaf span of a subtree are both root-path sums.
"""

from __future__ import annotations

NIL = -1


class OrderIndex:
    def __init__(self):
        # per entry: AVL links, height, leaf-count aggregate, leaf flag, owner vertex
        self.left: list = []
        self.right: list = []
        self.up: list = []
        self.height: list = []
        self.count: list = []
        self.is_leaf: list = []
        self.owner: list = []
        self.root = NIL
        # per suffix-tree vertex: its first and last entry
        self.first: dict = {}
        self.last: dict = {}

    def __len__(self) -> int:
        return len(self.owner)

    @property
    def leaf_count(self) -> int:
        return 0 if self.root == NIL else self.count[self.root]

    def tree_height(self) -> int:
        return 0 if self.root == NIL else self.height[self.root]

    # -- AVL plumbing ---------------------------------------------------

    def _new_entry(self, owner: int, leaf: bool) -> int:
        e = len(self.owner)
        self.left.append(NIL)
        self.right.append(NIL)
        self.up.append(NIL)
        self.height.append(1)
        self.count.append(1 if leaf else 0)
        self.is_leaf.append(1 if leaf else 0)
        self.owner.append(owner)
        return e

    def _pull(self, e: int) -> None:
        left, right = self.left[e], self.right[e]
        hl = 0 if left == NIL else self.height[left]
        hr = 0 if right == NIL else self.height[right]
        self.height[e] = (hl if hl > hr else hr) + 1
        c = self.is_leaf[e]
        if left != NIL:
            c += self.count[left]
        if right != NIL:
            c += self.count[right]
        self.count[e] = c

    def _replace_child(self, parent: int, old: int, new: int) -> None:
        if parent == NIL:
            self.root = new
        elif self.left[parent] == old:
            self.left[parent] = new
        else:
            self.right[parent] = new
        if new != NIL:
            self.up[new] = parent

    def _rotate_left(self, x: int) -> int:
        y = self.right[x]
        self._replace_child(self.up[x], x, y)
        inner = self.left[y]
        self.right[x] = inner
        if inner != NIL:
            self.up[inner] = x
        self.left[y] = x
        self.up[x] = y
        self._pull(x)
        self._pull(y)
        return y

    def _rotate_right(self, x: int) -> int:
        y = self.left[x]
        self._replace_child(self.up[x], x, y)
        inner = self.right[y]
        self.left[x] = inner
        if inner != NIL:
            self.up[inner] = x
        self.right[y] = x
        self.up[x] = y
        self._pull(x)
        self._pull(y)
        return y

    def _rebalance_from(self, e: int, new: int) -> int:
        """Repair heights and leaf counts after entry ``new`` was hung below ``e``.

        For a leaf entry, returns the number of leaf entries before it (the
        count walk passes the same ancestors a rank query would); else 0.
        """
        left, right, height, up = self.left, self.right, self.height, self.up
        before = 0
        if self.is_leaf[new]:
            count, is_leaf = self.count, self.is_leaf
            child, a = new, e
            while a != NIL:
                count[a] += 1
                if right[a] == child:
                    c = left[a]
                    before += is_leaf[a] if c == NIL else is_leaf[a] + count[c]
                child = a
                a = up[a]
        while e != NIL:
            l, rr = left[e], right[e]
            hl = 0 if l == NIL else height[l]
            hr = 0 if rr == NIL else height[rr]
            if hl - hr > 1:
                ll, lr = left[l], right[l]
                if (0 if ll == NIL else height[ll]) < (0 if lr == NIL else height[lr]):
                    self._rotate_left(l)
                self._rotate_right(e)
                return before
            if hr - hl > 1:
                rl, rrr = left[rr], right[rr]
                if (0 if rrr == NIL else height[rrr]) < (0 if rl == NIL else height[rl]):
                    self._rotate_right(rr)
                self._rotate_left(e)
                return before
            h = (hl if hl > hr else hr) + 1
            if h == height[e]:
                return before
            height[e] = h
            e = up[e]
        return before

    def _insert_after(self, anchor: int, e: int) -> int:
        """Place entry ``e`` right after ``anchor``; returns leaf entries before it."""
        if anchor == NIL:
            # becomes the first entry of the list
            if self.root == NIL:
                self.root = e
                return 0
            node = self.root
            while self.left[node] != NIL:
                node = self.left[node]
            self.left[node] = e
        elif self.right[anchor] == NIL:
            self.right[anchor] = e
            node = anchor
        else:
            node = self.right[anchor]
            while self.left[node] != NIL:
                node = self.left[node]
            self.left[node] = e
        self.up[e] = node
        return self._rebalance_from(node, e)

    def _predecessor(self, e: int) -> int:
        if self.left[e] != NIL:
            e = self.left[e]
            while self.right[e] != NIL:
                e = self.right[e]
            return e
        while self.up[e] != NIL and self.left[self.up[e]] == e:
            e = self.up[e]
        return self.up[e]

    def _insert_before(self, anchor: int, e: int) -> int:
        return self._insert_after(self._predecessor(anchor), e)

    # -- suffix-tree events ---------------------------------------------

    def add_root(self, root: int) -> None:
        a = self._new_entry(root, False)
        b = self._new_entry(root, False)
        self._insert_after(NIL, a)
        self._insert_after(a, b)
        self.first[root] = a
        self.last[root] = b

    def add_split(self, vertex: int, child: int) -> None:
        """A new internal ``vertex`` took the place of ``child`` under its parent."""
        a = self._new_entry(vertex, False)
        b = self._new_entry(vertex, False)
        self._insert_before(self.first[child], a)
        self._insert_after(self.last[child], b)
        self.first[vertex] = a
        self.last[vertex] = b

    def add_leaf(self, leaf: int, parent: int, left_sibling: int, right_sibling: int) -> int:
        """Insert a new leaf next to its siblings; returns its leaf rank."""
        e = self._new_entry(leaf, True)
        if left_sibling != NIL:
            before = self._insert_after(self.last[left_sibling], e)
        elif right_sibling != NIL:
            before = self._insert_before(self.first[right_sibling], e)
        else:
            before = self._insert_after(self.first[parent], e)
        self.first[leaf] = e
        self.last[leaf] = e
        return before + 1

    # -- queries -------------------------------------------------------

    def leaves_before(self, e: int) -> int:
        """Number of suffix-leaf entries strictly before entry ``e``."""
        left, right, up, count, is_leaf = self.left, self.right, self.up, self.count, self.is_leaf
        c = left[e]
        total = 0 if c == NIL else count[c]
        p = up[e]
        while p != NIL:
            if right[p] == e:
                c = left[p]
                total += is_leaf[p] if c == NIL else is_leaf[p] + count[c]
            e = p
            p = up[e]
        return total

    def subtree_span(self, vertex: int) -> tuple:
        return self.span_lo(vertex), self.span_hi(vertex)

    def span_lo(self, vertex: int) -> int:
        """Rank of the leftmost leaf below ``vertex``."""
        return self.leaves_before(self.first[vertex]) + 1

    def span_hi(self, vertex: int) -> int:
        """Rank of the rightmost leaf below ``vertex``."""
        last = self.last[vertex]
        return self.leaves_before(last) + self.is_leaf[last]

    def leaf_rank(self, leaf: int) -> int:
        return self.leaves_before(self.first[leaf]) + 1

    def kth_suffix_leaf(self, k: int) -> int:
        """Suffix-tree vertex of the k-th leaf (1-based) in left-to-right order."""
        if not 1 <= k <= self.leaf_count:
            raise IndexError(k)
        left, right, count, is_leaf = self.left, self.right, self.count, self.is_leaf
        e = self.root
        while True:
            lc = 0 if left[e] == NIL else count[left[e]]
            if k <= lc:
                e = left[e]
                continue
            k -= lc
            if is_leaf[e]:
                if k == 1:
                    return self.owner[e]
                k -= 1
            e = right[e]

    def entries(self) -> list:
        """Owners of all entries in list order (for tests)."""
        out = []
        stack = []
        e = self.root
        while stack or e != NIL:
            while e != NIL:
                stack.append(e)
                e = self.left[e]
            e = stack.pop()
            out.append((self.owner[e], bool(self.is_leaf[e])))
            e = self.right[e]
        return out

    def check(self) -> None:
        """Assert AVL balance and aggregate consistency over the whole tree."""
        def walk(e):
            if e == NIL:
                return 0, 0
            hl, cl = walk(self.left[e])
            hr, cr = walk(self.right[e])
            assert abs(hl - hr) <= 1, "AVL balance violated"
            assert self.height[e] == max(hl, hr) + 1, "stale height"
            assert self.count[e] == cl + cr + self.is_leaf[e], "stale leaf count"
            for c in (self.left[e], self.right[e]):
                if c != NIL:
                    assert self.up[c] == e, "broken parent link"
            return self.height[e], self.count[e]

        walk(self.root)
