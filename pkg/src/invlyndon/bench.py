"""Timing and memory measurements on seeded random words."""

from __future__ import annotations

import gc
import time
import tracemalloc
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .convert import cfl_in_from_icfl, icfl_from_cfl_in
from .factorize import Factorization, cfl, cfl_in, icfl
from .word_core import Alphabet, Word

OPERATIONS: dict[str, Callable[[Word], Factorization]] = {
    "cfl": cfl,
    "cfl-in": cfl_in,
    "icfl": icfl,
}
# conversions are timed on a precomputed source factorization
CONVERSIONS = {
    "icfl-to-cflin": (icfl, cfl_in_from_icfl),
    "cflin-to-icfl": (cfl_in, icfl_from_cfl_in),
}
ALL_OPS = list(OPERATIONS) + list(CONVERSIONS)


@dataclass(frozen=True)
class BenchRow:
    op: str
    size: int
    seconds: float
    factors: int
    peak_bytes: Optional[int] = None

    @property
    def ns_per_symbol(self) -> float:
        return self.seconds * 1e9 / self.size


def random_word(size: int, seed: int, alphabet: str = "abcd") -> Word:
    """Uniform random word; same ``(size, seed, alphabet)`` gives the same word."""
    alpha = Alphabet(alphabet)
    ranks = np.random.default_rng(seed).integers(0, len(alpha), size=size, dtype=np.uint8)
    table = bytearray(256)
    table[: len(alpha)] = alpha.symbols
    return Word(ranks.tobytes().translate(bytes(table)), alpha)


def _measure(fn, arg, memory: bool):
    gc.collect()
    if memory:
        tracemalloc.start()
        tracemalloc.reset_peak()
        out = fn(arg)
        peak = tracemalloc.get_traced_memory()[1]
        tracemalloc.stop()
        return out, None, peak
    t0 = time.perf_counter()
    out = fn(arg)
    return out, time.perf_counter() - t0, None


def run_bench(
    sizes: Sequence[int],
    seed: int = 0,
    ops: Optional[Sequence[str]] = None,
    alphabet: str = "abcd",
    memory: bool = False,
    repeat: int = 1,
) -> list[BenchRow]:
    """One row per (operation, size), keeping the best of ``repeat`` timings.
    With ``memory`` each call is run once more under tracemalloc to record
    its peak allocation."""
    ops = list(ops or ALL_OPS)
    for op in ops:
        if op not in ALL_OPS:
            raise ValueError(f"unknown operation {op!r}")
    if not sizes or any(n < 1 for n in sizes):
        raise ValueError("sizes must be positive")
    if repeat < 1:
        raise ValueError("repeat must be positive")
    rows = []
    for size in sizes:
        w = random_word(size, seed, alphabet)
        for op in ops:
            if op in OPERATIONS:
                fn, arg = OPERATIONS[op], w
            else:
                source, fn = CONVERSIONS[op]
                arg = source(w)
            seconds = None
            for _ in range(repeat):
                out, dt, _ = _measure(fn, arg, False)
                seconds = dt if seconds is None else min(seconds, dt)
            peak = _measure(fn, arg, True)[2] if memory else None
            rows.append(BenchRow(op, size, seconds, len(out), peak))
            del out
    return rows
