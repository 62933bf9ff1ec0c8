"""Command-line front end.

Plain factorization is the default mode; ``--verify`` and ``--bench`` reuse
the same input pipeline.  I/O errors exit with 1, alphabet or size problems
with 2, and an input whose length changes while it is read exits with 3.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Iterator, Optional

from .core_params import MAX_SIGMA, choose_parameters
from .factorizer import COPY, Factor, InputLengthError, OnlineFactorizer, blocks_of
from .generators import dna_like, uniform_text
from .oracle import check_factorization, lz_oracle

EXIT_IO = 1
EXIT_ALPHABET = 2
EXIT_LENGTH = 3

FULL_ORACLE_LIMIT = 10_000
DEFAULT_ORACLE_CAP = 100_000
BENCH_CAPACITY = 1 << 24
READ_CHUNK = 1 << 16
DNA_CODES = {ord(c): i for i, c in enumerate("ACGT")}
DNA_CODES.update({ord(c): i for i, c in enumerate("acgt")})


class AlphabetError(ValueError):
    pass


class UsageError(ValueError):
    pass


# -- alphabet mapping ------------------------------------------------------


class ByteMapper:
    """Maps raw bytes to dense codes ``0..sigma-1``.

    Codes are handed out in order of first appearance, so the mapping can be
    built while streaming; LZ factors do not depend on which bijection is used.
    """

    def __init__(self, sigma: int, dna: bool = False):
        self.sigma = sigma
        self.dna = dna
        self.table: dict = dict(DNA_CODES) if dna else {}

    def __call__(self, data: bytes) -> list:
        table = self.table
        out = []
        for byte in data:
            code = table.get(byte)
            if code is None:
                if self.dna:
                    raise AlphabetError(f"byte {byte!r} is not one of ACGTacgt")
                code = len(table)
                if code >= self.sigma:
                    raise AlphabetError(f"more than sigma={self.sigma} distinct bytes in the input")
                table[byte] = code
            out.append(code)
        return out


# -- input -----------------------------------------------------------------


class Input:
    """Raw input plus its declared length.

    A regular file is streamed and its size taken from the file system;
    standard input (or any non-seekable source) is buffered first.
    """

    def __init__(self, path: Optional[str], use_stdin: bool):
        self.path = path
        self.buffer: Optional[bytes] = None
        if use_stdin:
            self.buffer = sys.stdin.buffer.read()
            self.n = len(self.buffer)
        elif os.path.isfile(path):
            self.n = os.path.getsize(path)
        else:
            with open(path, "rb") as fh:
                self.buffer = fh.read()
            self.n = len(self.buffer)

    def chunks(self) -> Iterator[bytes]:
        if self.buffer is not None:
            for i in range(0, len(self.buffer), READ_CHUNK):
                yield self.buffer[i : i + READ_CHUNK]
            return
        with open(self.path, "rb") as fh:
            while True:
                piece = fh.read(READ_CHUNK)
                if not piece:
                    return
                yield piece

    def read_all(self) -> bytes:
        if self.buffer is None:
            self.buffer = b"".join(self.chunks())
        return self.buffer

    def distinct(self) -> int:
        return len(set(self.read_all()))


def _blocks(chunks: Iterator[bytes], mapper: ByteMapper, r: int) -> Iterator[list]:
    pending: list = []
    for piece in chunks:
        pending.extend(mapper(piece))
        full = len(pending) - len(pending) % r
        for i in range(0, full, r):
            yield pending[i : i + r]
        pending = pending[full:]
    if pending:
        yield pending


def _resolve_sigma(args, inp: Input) -> int:
    if args.dna:
        return 4
    if args.sigma is not None:
        return args.sigma
    return max(1, inp.distinct())


# -- output ----------------------------------------------------------------


def _factor_json(f: Factor) -> dict:
    obj = {"i": f.index, "start": f.start, "len": f.length, "kind": f.kind}
    if f.kind == COPY and f.witness is not None:
        obj["witness"] = f.witness
    return obj


def _stats_record(engine: Optional[OnlineFactorizer], n: int, elapsed: float) -> dict:
    if engine is None:
        return {"n": n, "z": 0, "r": 0, "blocks_read": 0, "peak_leaves": 0,
                "peak_trie_nodes": 0, "peak_wavelet_bits": 0, "seconds": round(elapsed, 6)}
    return {
        "n": n,
        "z": len(engine.factors),
        "r": engine.params.r,
        "blocks_read": engine.stats.blocks_read,
        "peak_leaves": engine.peak["leaves"],
        "peak_trie_nodes": engine.peak["trie_nodes"],
        "peak_wavelet_bits": engine.peak["wavelet_bits"],
        "seconds": round(elapsed, 6),
    }


class _FaultyFactorizer(OnlineFactorizer):
    """Negative control: the first copy factor longer than one is cut short."""

    _fault_done = False

    def _emit(self, length: int) -> Factor:
        if not self._fault_done and self.M > 1 and length > 1:
            self._fault_done = True
            self.M = length - 1
            return super()._emit(length - 1)
        return super()._emit(length)


def _engine(params, blocks, fault: bool) -> OnlineFactorizer:
    cls = _FaultyFactorizer if fault else OnlineFactorizer
    return cls(params, blocks)


# -- commands ----------------------------------------------------------------


def cmd_factorize(args, out) -> int:
    inp = Input(args.input, args.stdin)
    sigma = _resolve_sigma(args, inp)
    mapper = ByteMapper(sigma, args.dna)
    t0 = time.perf_counter()
    engine = None
    if args.format == "json":
        out.write("[")
    first = True
    if inp.n:
        params = choose_parameters(inp.n, sigma, args.block_size)
        engine = _engine(params, _blocks(inp.chunks(), mapper, params.r), args.inject_fault)
        for ev in engine.run():
            if not isinstance(ev, Factor):
                continue
            if args.format == "json":
                out.write(("\n" if first else ",\n") + json.dumps(_factor_json(ev)))
            else:
                out.write(f"{ev.index}\t{ev.start}\t{ev.length}\t{ev.kind}\n")
            first = False
    elapsed = time.perf_counter() - t0
    if args.stats:
        rec = _stats_record(engine, inp.n, elapsed)
        if args.format == "json":
            out.write(("\n" if first else ",\n") + json.dumps({"stats": rec}))
        else:
            out.write("stats\t" + "\t".join(f"{k}={v}" for k, v in rec.items()) + "\n")
    if args.format == "json":
        out.write("\n]\n")
    return 0


def cmd_verify(args, out) -> int:
    inp = Input(args.input, args.stdin)
    n = inp.n
    if n > args.oracle_cap and not args.spot_check:
        raise UsageError(
            f"n={n} exceeds the oracle cap {args.oracle_cap}; pass --spot-check to accept "
            "per-factor validation instead of a full comparison"
        )
    sigma = _resolve_sigma(args, inp)
    codes = ByteMapper(sigma, args.dna)(inp.read_all())
    if not codes:
        out.write("PASS (empty input)\n")
        return 0
    params = choose_parameters(n, sigma, args.block_size)
    engine = _engine(params, blocks_of(codes, params.r), args.inject_fault)
    factors = [ev for ev in engine.run() if isinstance(ev, Factor)]
    bad = check_factorization(codes, factors)
    mode = "direct-search validation"
    if bad is None and n <= FULL_ORACLE_LIMIT:
        mode = "full oracle"
        expected = lz_oracle(codes)
        for got, want in zip(factors, expected):
            if (got.start, got.length, got.kind) != (want.start, want.length, want.kind):
                bad = got.index
                break
        else:
            if len(factors) != len(expected):
                bad = min(len(factors), len(expected)) + 1
    if bad is None:
        out.write(f"PASS n={n} z={len(factors)} r={params.r} ({mode})\n")
        return 0
    shown = factors[bad - 1] if bad <= len(factors) else None
    detail = f" start={shown.start} len={shown.length} kind={shown.kind}" if shown else ""
    out.write(f"FAIL at factor {bad}{detail} ({mode})\n")
    return 4


def _parse_sizes(text: str) -> list:
    sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    if any(s < 1 for s in sizes):
        raise UsageError("bench sizes must be positive")
    if sizes != sorted(sizes):
        raise UsageError("bench sizes must be sorted ascending")
    return sizes


def cmd_bench(args, out) -> int:
    sizes = _parse_sizes(args.bench)
    source = None
    if args.input or args.stdin:
        inp = Input(args.input, args.stdin)
        source = inp.read_all()
        capacity = len(source)
    else:
        capacity = BENCH_CAPACITY
    if sizes and sizes[-1] > capacity:
        raise UsageError(f"bench size {sizes[-1]} exceeds capacity {capacity}")
    out.write("n,seconds,leaves,trie_nodes,wavelet_bits,ratio\n")
    prev = None
    for n in sizes:
        if source is not None:
            piece = source[:n]
            sigma = 4 if args.dna else (args.sigma or len(set(piece)))
            codes = ByteMapper(sigma, args.dna)(piece)
        else:
            sigma = 4
            codes = dna_like(n, args.seed) if args.dna else uniform_text(n, 4, args.seed)
        params = choose_parameters(n, sigma, args.block_size)
        engine = OnlineFactorizer(params, blocks_of(codes, params.r))
        t0 = time.perf_counter()
        for _ in engine.run():
            pass
        secs = time.perf_counter() - t0
        ratio = "" if prev is None else f"{secs / prev:.3f}"
        pk = engine.peak
        out.write(f"{n},{secs:.4f},{pk['leaves']},{pk['trie_nodes']},{pk['wavelet_bits']},{ratio}\n")
        out.flush()
        prev = secs
    return 0


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lzonline", description="Online LZ factorization of a byte stream.")
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="read the text from a file")
    src.add_argument("--stdin", action="store_true", help="read the text from standard input")
    alpha = ap.add_mutually_exclusive_group()
    alpha.add_argument("--sigma", type=int, help="alphabet size; distinct bytes map to 0..sigma-1")
    alpha.add_argument("--infer", action="store_true",
                       help="pre-scan the input for its alphabet (gives up single-pass reading)")
    alpha.add_argument("--dna", action="store_true", help="alphabet ACGT (either case), sigma 4")
    ap.add_argument("--block-size", type=int, help="override the block length r (testing)")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    mode = ap.add_mutually_exclusive_group()
    mode.add_argument("--verify", action="store_true", help="check the result against the oracle")
    mode.add_argument("--bench", metavar="N1,N2,...", help="time the engine on inputs of these sizes")
    ap.add_argument("--stats", action="store_true", help="append a run summary")
    ap.add_argument("--seed", type=int, default=0, help="seed for generated bench inputs")
    ap.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                    help="largest n verified without --spot-check")
    ap.add_argument("--spot-check", action="store_true",
                    help="allow verifying inputs above the cap by per-factor validation")
    ap.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = sys.stdout
    try:
        if args.sigma is not None and not 1 <= args.sigma <= MAX_SIGMA:
            raise UsageError(f"sigma must lie in [1, {MAX_SIGMA}]")
        if args.block_size is not None and args.block_size < 1:
            raise UsageError("block size must be at least 1")
        if args.bench is not None:
            return cmd_bench(args, out)
        if not args.input and not args.stdin:
            raise UsageError("give --input PATH or --stdin")
        if args.verify:
            return cmd_verify(args, out)
        return cmd_factorize(args, out)
    except OSError as exc:
        print(f"lzonline: {exc}", file=sys.stderr)
        return EXIT_IO
    except (AlphabetError, UsageError) as exc:
        print(f"lzonline: {exc}", file=sys.stderr)
        return EXIT_ALPHABET
    except InputLengthError as exc:
        print(f"lzonline: input length changed while reading: {exc}", file=sys.stderr)
        return EXIT_LENGTH


if __name__ == "__main__":
    sys.exit(main())
