# %% [markdown]
# # Inside the index
#
# Long factors are found with a suffix tree over *blocks*: every r characters
# are packed into one integer and the tree is built over that shorter word.
# Leaves are ranked left to right through an Euler-tour list, and a wavelet
# tree indexed by leaf rank stores the (bit-reversed) block sitting just
# before each leaf's suffix.  Together they answer "is there a block border
# in this subtree preceded by the word Y?".

# %%
from lzonline import Factor, OnlineFactorizer, blocks_of, choose_parameters
from lzonline.core_params import extract_char

text = "abaababaabaab"
codes = [ord(c) - ord("a") for c in text]
params = choose_parameters(len(codes), 2, r=2)
engine = OnlineFactorizer(params, blocks_of(codes, params.r))
factors = [ev for ev in engine.run() if isinstance(ev, Factor)]
tree, order = engine.tree, engine.order


def block_text(value):
    return "".join("ab"[extract_char(value, k, params)] for k in range(1, params.r + 1))


# %% [markdown]
# Leaves in rank order, with the suffix each one spells (in blocks) and the
# text position where it starts:

# %%
for rank in range(1, tree.leaf_count + 1):
    leaf = order.kth_suffix_leaf(rank)
    label = " ".join(block_text(v) if v < params.sentinel else "$" for v in tree.path_label(leaf))
    print(f"rank {rank}: border {tree.leaf_border(leaf):>2}  {label}")

# %% [markdown]
# Every internal vertex owns a contiguous range of leaf ranks.

# %%
for v in tree.internal_vertices():
    label = " ".join(block_text(x) for x in tree.path_label(v)) or "(root)"
    print(f"{label:<12} leaves {order.subtree_span(v)}")

# %% [markdown]
# An exist query: a border among all leaves whose preceding text ends in
# "a", excluding border 5 and requiring the copy (which starts one character
# before the border) to begin by position 8.  A border preceded by "b" never
# qualifies here: border 3 is the only one early enough.

# %%
print("preceded by 'a':", engine.exist(1, tree.leaf_count, [0], 5, 8))
print("preceded by 'b':", engine.exist(1, tree.leaf_count, [1], 3, 8))
print("factors:", [text[f.start - 1 : f.end] for f in factors])
