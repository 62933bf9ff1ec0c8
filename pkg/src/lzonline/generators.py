"""Synthetic texts for benchmarks and tests, all as lists of integer codes."""

from __future__ import annotations

import random


def uniform_text(n: int, sigma: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    return [rng.randrange(sigma) for _ in range(n)]


def dna_like(n: int, seed: int = 0, copy_rate: float = 0.3, mutation: float = 0.02) -> list:
    """Four-letter text mixing fresh segments with mutated copies of earlier ones.

    Roughly ``copy_rate`` of the segments are copies (with point mutations at
    rate ``mutation``) of a random earlier stretch, which gives the long
    repeats typical of genomic data.
    """
    rng = random.Random(seed)
    out: list = []
    while len(out) < n:
        seg = rng.randint(20, 400)
        if out and rng.random() < copy_rate:
            src = rng.randrange(len(out))
            piece = out[src : src + seg]
            piece = [rng.randrange(4) if rng.random() < mutation else c for c in piece]
        else:
            piece = [rng.randrange(4) for _ in range(seg)]
        out.extend(piece)
    return out[:n]


def fibonacci_word(n: int) -> list:
    a, b = [0], [0, 1]
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def thue_morse(n: int) -> list:
    return [bin(i).count("1") & 1 for i in range(n)]


def periodic(n: int, period) -> list:
    period = list(period)
    return [period[i % len(period)] for i in range(n)]
