"""Conversions between CFL_in and ICFL.

ICFL -> CFL_in: split every ICFL factor by repeatedly peeling its unique
unbordered border off the right end (:func:`nb`).

CFL_in -> ICFL: cut CFL_in into maximal non-increasing prefix chains (PMCs)
and compute ICFL inside each chain from factor lengths and prefix tests,
locating the canonical pair from the chain structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .factorize import Factorization, Kind, _resolve, _split_z
from .word_core import (
    InputError,
    InternalError,
    InvariantError,
    Outcome,
    WordLike,
    _border_array,
    _outcome,
    _prenecklace_scan,
    _terminal_borders,
    as_word,
)

__all__ = [
    "ChainDecomposition",
    "nb",
    "cfl_in_from_icfl",
    "pmc_decompose",
    "icfl_of_chain",
    "icfl_from_cfl_in",
    "is_grouping",
    "chain_split_points",
]


@dataclass(frozen=True)
class ChainDecomposition:
    """PMCs of a CFL_in factorization as half-open factor-index ranges."""

    factorization: Factorization
    chains: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.chains)

    def chain_factors(self, j: int) -> list:
        lo, hi = self.chains[j]
        return self.factorization.factors[lo:hi]

    def groups(self) -> list[list]:
        return [self.chain_factors(j) for j in range(len(self.chains))]

    def boundaries(self) -> list[int]:
        """Word offsets at which a chain starts, plus the word length."""
        c = self.factorization.cuts
        return [c[lo] for lo, _ in self.chains] + [c[-1]]


def _nb_cuts(s: bytes, offset: int = 0) -> list[int]:
    # the border array of a prefix is a prefix of the border array,
    # so one pass serves every peeling step
    t = _terminal_borders(_border_array(s))
    cuts = [len(s)]
    end = len(s)
    while t[end - 1]:
        end -= t[end - 1]
        cuts.append(end)
    cuts.append(0)
    cuts.reverse()
    if offset:
        cuts = [c + offset for c in cuts]
    return cuts


def nb(x: WordLike, alphabet=None) -> Factorization:
    """Decompose ``x`` by peeling unbordered borders off the right end."""
    x = as_word(x, alphabet)
    return Factorization(x, tuple(_nb_cuts(x.codes)), Kind.NB)


def cfl_in_from_icfl(icfl_fact: Factorization) -> Factorization:
    """CFL_in of the underlying word, assembled factor by factor from ICFL."""
    Factorization(icfl_fact.word, icfl_fact.cuts, Kind.ICFL).validate()
    s = icfl_fact.word.codes
    cuts = [0]
    for lo, hi in icfl_fact.spans:
        cuts.extend(_nb_cuts(s[lo:hi], lo)[1:])
    return Factorization(icfl_fact.word, tuple(cuts), Kind.CFL_IN)


def _chains(s: bytes, cuts: Sequence[int]) -> list[tuple[int, int]]:
    chains = []
    lo = 0
    for q in range(1, len(cuts) - 1):
        prev_start, start, end = cuts[q - 1], cuts[q], cuts[q + 1]
        if end - start > start - prev_start or not s.startswith(s[start:end], prev_start):
            chains.append((lo, q))
            lo = q
    chains.append((lo, len(cuts) - 1))
    return chains


def pmc_decompose(cfl_in_fact: Factorization) -> ChainDecomposition:
    """Greedy left-to-right chain split: a factor joins the current chain
    when it is a prefix of its predecessor."""
    Factorization(cfl_in_fact.word, cfl_in_fact.cuts, Kind.CFL_IN).validate()
    chains = _chains(cfl_in_fact.word.codes, cfl_in_fact.cuts)
    return ChainDecomposition(cfl_in_fact, tuple(chains))


def _chain_structure(s: bytes, cuts: Sequence[int], t: int, h: int) -> Optional[tuple[int, int, int]]:
    """Locate the indices for the chain ``cuts[t..h]`` (factor indices t..h-1).

    Returns None when the chain product is inverse Lyndon.  Otherwise returns
    ``(q0, q, r)``: factors ``t..q0-1`` are the leading run of copies of the
    first factor, ``t+i..q-1`` concatenate to a prefix of it, factor ``q`` is
    the first one that breaks that, and ``r`` is the length of its common
    prefix with the rest of the first factor.
    """
    first_lo, first_hi = cuts[t], cuts[t + 1]
    first_len = first_hi - first_lo
    first = s[first_lo:first_hi]
    q = t + 1
    while q < h and cuts[q + 1] - cuts[q] == first_len and s.startswith(first, cuts[q]):
        q += 1
    q0 = q
    if q0 == h:
        return None
    pos = first_lo
    while q < h:
        lo, hi = cuts[q], cuts[q + 1]
        if pos + hi - lo <= first_hi and s[lo:hi] == s[pos : pos + hi - lo]:
            pos += hi - lo
            q += 1
        else:
            break
    if q == h:
        return None
    if q == q0:
        raise InternalError("chain factor after the leading run is not a prefix of the first")
    lo, hi = cuts[q], cuts[q + 1]
    r = 0
    while lo + r < hi and pos + r < first_hi and s[lo + r] == s[pos + r]:
        r += 1
    if lo + r == hi or pos + r == first_hi or s[pos + r] > s[lo + r]:
        raise InternalError("chain mismatch does not have the form r a s / r b s' with a < b")
    return q0, q, r


def _icfl_chain_cuts(s: bytes, cuts: Sequence[int], t: int, h: int, verify: bool = False) -> list[int]:
    """ICFL cut offsets of the product of chain factors ``t..h-1``."""
    steps = []
    while True:
        found = _chain_structure(s, cuts, t, h)
        if verify:
            inverse_lyndon = _prenecklace_scan(s[cuts[t] : cuts[h]], 0, True)[0] == cuts[h] - cuts[t]
            if inverse_lyndon != (found is None):
                raise InternalError("structural inverse-Lyndon test disagrees with the text")
        if found is None:
            break
        _, q, r = found
        start = cuts[t]
        z_len = cuts[q] + r + 1 - start
        if verify:
            j, _ = _prenecklace_scan(s[start : cuts[h]], 0, True)
            if j + 1 != z_len:
                raise InternalError("chain-derived z is not the shortest non-inverse-Lyndon prefix")
        r_len = _split_z(s, start, z_len)
        p_end = start + z_len - r_len - 1
        # p always ends on a CFL_in boundary inside the chain
        g = _index_of(cuts, p_end, t + 1, q + 1)
        steps.append((start, r_len + 1))
        t = g
    return _resolve(steps, (cuts[t], cuts[h]))


def _index_of(cuts: Sequence[int], value: int, lo: int, hi: int) -> int:
    for g in range(lo, hi):
        if cuts[g] == value:
            return g
    raise InternalError(f"p does not end on a chain factor boundary (offset {value})")


def chain_split_points(chain: Factorization) -> list[tuple[int, int]]:
    """For each canonical-pair step inside a chain, ``(factors in p, leading run length)``.

    Diagnostic: lets callers test whether ``p`` is always the leading run of
    the chain's first factor.
    """
    s, cuts = chain.word.codes, chain.cuts
    t, h = 0, len(cuts) - 1
    out = []
    while True:
        found = _chain_structure(s, cuts, t, h)
        if found is None:
            return out
        q0, q, r = found
        start = cuts[t]
        z_len = cuts[q] + r + 1 - start
        p_end = start + z_len - _split_z(s, start, z_len) - 1
        g = _index_of(cuts, p_end, t + 1, q + 1)
        out.append((g - t, q0 - t))
        t = g


def icfl_of_chain(chain: Sequence[WordLike], alphabet=None, verify: bool = False) -> Factorization:
    """ICFL of the product of one prefix chain of anti-Lyndon words."""
    f = Factorization.from_factors(chain, alphabet, Kind.CFL_IN)
    s = f.word.codes
    c = f.cuts
    for i in range(1, len(c) - 1):
        if not s.startswith(s[c[i] : c[i + 1]], c[i - 1]) or c[i + 1] - c[i] > c[i] - c[i - 1]:
            raise InvariantError(f"chain factor {i} is not a prefix of factor {i - 1}")
    f.validate()
    return Factorization(f.word, tuple(_icfl_chain_cuts(s, c, 0, len(c) - 1, verify)), Kind.ICFL)


def icfl_from_cfl_in(cfl_in_fact: Factorization, verify: bool = False) -> Factorization:
    """ICFL assembled chain by chain from a CFL_in factorization."""
    dec = pmc_decompose(cfl_in_fact)
    s, c = cfl_in_fact.word.codes, cfl_in_fact.cuts
    cuts = [0]
    for lo, hi in dec.chains:
        cuts.extend(_icfl_chain_cuts(s, c, lo, hi, verify)[1:])
    return Factorization(cfl_in_fact.word, tuple(cuts), Kind.ICFL)


def is_grouping(candidate: Factorization, cfl_in_fact: Factorization) -> bool:
    """Whether ``candidate`` groups CFL_in factors inside single PMCs into an
    inverse Lyndon factorization."""
    if candidate.word != cfl_in_fact.word:
        raise InputError("candidate and CFL_in factorization are over different words")
    if not set(candidate.cuts) <= set(cfl_in_fact.cuts):
        return False
    s = cfl_in_fact.word.codes
    c = cfl_in_fact.cuts
    if not {c[lo] for lo, _ in _chains(s, c)} <= set(candidate.cuts):
        return False
    parts = [candidate.factor_codes(i) for i in range(len(candidate))]
    for f in parts:
        if _prenecklace_scan(f, 0, True)[0] != len(f):
            return False
    return all(
        _outcome(parts[i], parts[i + 1], False) is Outcome.LESS_STRICT for i in range(len(parts) - 1)
    )
