# %% [markdown]
# # A first factorization
#
# The greedy LZ factorization cuts a text into pieces, left to right.  Each
# piece is either a character never seen before (a *literal*) or the longest
# prefix of the rest that already started somewhere earlier.  The earlier copy
# may overlap the piece itself, which is how a run like "aaaa" collapses into
# two factors.

# %%
from lzonline import lz_factorize, lz_oracle

text = "abracadabra abracadabra"
alphabet = sorted(set(text))
codes = [alphabet.index(c) for c in text]

factors = lz_factorize(codes, sigma=len(alphabet))
for f in factors:
    piece = text[f.start - 1 : f.end]
    source = f"copied from {f.witness}" if f.kind == "copy" else "new character"
    print(f"{f.index:>2}  [{f.start:>2}, {f.end:>2}]  {piece!r:<16} {source}")

# %% [markdown]
# The engine never looks at the whole text at once, yet it agrees with the
# brute-force reference that does.

# %%
same = [(f.start, f.length) for f in factors] == [(f.start, f.length) for f in lz_oracle(codes)]
print("matches the direct-search reference:", same)

# %% [markdown]
# Self-referential copies: the second factor of "aaaaaaaa" starts at
# position 2 and is copied from position 1, overlapping itself.

# %%
for f in lz_factorize([0] * 8, sigma=2):
    print(f)
