# %% [markdown]
# # Reading one block at a time
#
# The engine pulls its input from any iterator of blocks.  It only asks for a
# new block once everything read so far is accounted for, so it is never
# more than one block ahead of the factors it has settled.  Here a chatty
# source announces each block it hands over.

# %%
from lzonline import Factor, Progress, choose_parameters, factorize

text = "to be or not to be, that is the question; to be or not to be"
alphabet = sorted(set(text))
codes = [alphabet.index(c) for c in text]
params = choose_parameters(len(codes), len(alphabet), r=3)


def chatty_blocks():
    for i in range(0, len(codes), params.r):
        block = codes[i : i + params.r]
        print(f"    source -> {text[i:i + params.r]!r}")
        yield block


# %%
for event in factorize(chatty_blocks(), params):
    if isinstance(event, Factor):
        print(f"factor {event.index}: {text[event.start - 1:event.end]!r}")
    elif isinstance(event, Progress):
        ahead = event.read_pos - (event.ell + event.confirmed)
        assert ahead <= params.r
        print(f"  read {event.read_pos:>2} chars, settled up to {event.ell + event.confirmed}")

# %% [markdown]
# The assertion inside the loop is the lag contract: the gap between what
# was read and what is settled never exceeds the block length r.
