"""Online Lempel-Ziv factorization over a sparse suffix tree.

The engine reads its input in blocks and never runs more than one block ahead
of the factors it has confirmed.  Typical use::

    >>> from lzonline import lz_factorize
    >>> [(f.start, f.length, f.kind) for f in lz_factorize([0, 0, 0, 0])]
    [(1, 1, 'literal'), (2, 3, 'copy')]
"""

from .core_params import PackedText, Params, choose_parameters
from .factorizer import (
    COPY,
    LITERAL,
    EngineStats,
    Factor,
    InputLengthError,
    OnlineFactorizer,
    Progress,
    blocks_of,
    factorize,
    lz_factorize,
)
from .oracle import check_factorization, lz_oracle

__all__ = [
    "COPY",
    "LITERAL",
    "EngineStats",
    "Factor",
    "InputLengthError",
    "OnlineFactorizer",
    "PackedText",
    "Params",
    "Progress",
    "blocks_of",
    "check_factorization",
    "choose_parameters",
    "factorize",
    "lz_factorize",
    "lz_oracle",
]

__version__ = "0.1.0"
