# %% [markdown]
# # How running time grows
#
# The engine's work per character grows only polylogarithmically with the
# text length, so doubling n should roughly double the running time.  This
# demo times a few doublings on random DNA-sized alphabets and shows how big
# the main structures get.

# %%
import time

from lzonline import OnlineFactorizer, blocks_of, choose_parameters
from lzonline.generators import dna_like, uniform_text

rows = []
for n in (1 << 12, 1 << 13, 1 << 14, 1 << 15):
    codes = uniform_text(n, 4, seed=n)
    params = choose_parameters(n, 4)
    engine = OnlineFactorizer(params, blocks_of(codes, params.r))
    t0 = time.perf_counter()
    for _ in engine.run():
        pass
    rows.append((n, time.perf_counter() - t0, engine))

# %%
print(f"{'n':>7} {'r':>2} {'seconds':>8} {'ratio':>6} {'factors':>8} {'leaves':>7} {'trie':>5}")
prev = None
for n, secs, eng in rows:
    ratio = f"{secs / prev:.2f}" if prev else ""
    print(f"{n:>7} {eng.params.r:>2} {secs:>8.2f} {ratio:>6} {len(eng.factors):>8} "
          f"{eng.peak['leaves']:>7} {eng.peak['trie_nodes']:>5}")
    prev = secs

# %% [markdown]
# Genomic-looking text has long repeats, so it breaks into far fewer factors
# than uniform noise of the same length.

# %%
for name, codes in (("uniform", uniform_text(20000, 4, 1)), ("dna-like", dna_like(20000, 1))):
    params = choose_parameters(len(codes), 4)
    eng = OnlineFactorizer(params, blocks_of(codes, params.r))
    for _ in eng.run():
        pass
    print(f"{name:<9} {len(eng.factors)} factors")
