"""Brute-force references, written straight from the definitions.

Nothing here calls into the fast paths.  Words are turned into tuples of
order keys (rank, or negated rank for the inverse order); Python's tuple
comparison is then exactly the lexicographic order, proper prefixes first.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from .factorize import CanonicalPair, Factorization, Kind
from .word_core import Alphabet, InputError, Order, Word, WordLike, as_word

__all__ = [
    "ENUMERATION_LIMIT",
    "keys",
    "is_lyndon_naive",
    "is_inverse_lyndon_naive",
    "is_anti_prenecklace_naive",
    "cfl_naive",
    "canonical_pair_naive",
    "icfl_naive",
    "pmc_naive",
    "enumerate_inverse_lyndon_factorizations",
    "enumerate_groupings",
    "words",
]

ENUMERATION_LIMIT = 20


def keys(w: Word, order: Order = Order.STANDARD) -> tuple[int, ...]:
    rank = w.alphabet.rank
    if Order(order) is Order.INVERSE:
        return tuple(-rank[c] for c in w.data)
    return tuple(rank[c] for c in w.data)


def _less_strict(x: tuple, y: tuple) -> bool:
    """x << y: x precedes y and is not a prefix of it."""
    return x < y and y[: len(x)] != x


def _is_prefix(x: tuple, y: tuple) -> bool:
    return y[: len(x)] == x


def _lyndon(k: tuple) -> bool:
    n = len(k)
    for d in range(1, n):
        if n % d == 0 and k == k[:d] * (n // d):
            return False
    return all(k < k[i:] + k[:i] for i in range(1, n))


def _inverse_lyndon(k: tuple) -> bool:
    return all(k[i:] < k for i in range(1, len(k)))


def _bordered(k: tuple) -> bool:
    return any(k[:i] == k[-i:] for i in range(1, len(k)))


def is_lyndon_naive(w: WordLike, order: Order = Order.STANDARD, alphabet=None) -> bool:
    """Primitive and strictly smaller than every other rotation."""
    return _lyndon(keys(as_word(w, alphabet), order))


def is_inverse_lyndon_naive(w: WordLike, alphabet=None) -> bool:
    """Every nonempty proper suffix is smaller than the word."""
    return _inverse_lyndon(keys(as_word(w, alphabet)))


def is_anti_prenecklace_naive(w: WordLike, alphabet=None) -> bool:
    """Sesquipower of some anti-Lyndon word: a period d with an anti-Lyndon first block."""
    k = keys(as_word(w, alphabet), Order.INVERSE)
    n = len(k)
    for d in range(1, n + 1):
        if all(k[i] == k[i - d] for i in range(d, n)) and _lyndon(k[:d]):
            return True
    return False


def _cfl_cuts(k: tuple) -> list[int]:
    cuts = [0]
    start = 0
    n = len(k)
    while start < n:
        end = next(e for e in range(n, start, -1) if _lyndon(k[start:e]))
        cuts.append(end)
        start = end
    return cuts


def cfl_naive(w: WordLike, order: Order = Order.STANDARD, alphabet=None) -> Factorization:
    """Peel the longest Lyndon prefix, then recurse on the rest."""
    w = as_word(w, alphabet)
    kind = Kind.CFL_IN if Order(order) is Order.INVERSE else Kind.CFL
    return Factorization(w, tuple(_cfl_cuts(keys(w, order))), kind)


def _pair(k: tuple) -> Optional[tuple[int, int]]:
    n = len(k)
    z_len = next((m for m in range(1, n + 1) if not _inverse_lyndon(k[:m])), None)
    if z_len is None:
        return None
    z = k[:z_len]
    # every decomposition z = r a s r b with a < b, shortest r first
    rs = [
        r
        for r in range(z_len)
        if 2 * r + 2 <= z_len and z[:r] == z[z_len - 1 - r : z_len - 1] and z[r] < z[-1]
    ]
    accepted = []
    for split in range(1, z_len):
        p, pbar = z[:split], z[split:]
        r = len(pbar) - 1
        if not (rs and r == rs[0] and p[:r] == pbar[:r] and p[r] < pbar[r]):
            continue
        if not _inverse_lyndon(pbar):
            continue
        # the pair must also be a bounded right extension in the original sense
        assert _inverse_lyndon(p)
        assert all(_inverse_lyndon(p + pbar[:i]) for i in range(1, len(pbar)))
        assert _less_strict(p, pbar)
        accepted.append((split, len(pbar)))
    assert len(accepted) == 1, f"canonical pair not unique: {accepted}"
    return accepted[0]


def canonical_pair_naive(w: WordLike, alphabet=None) -> Optional[CanonicalPair]:
    """Try every split of the shortest non-inverse-Lyndon prefix."""
    w = as_word(w, alphabet)
    pair = _pair(keys(w))
    return None if pair is None else CanonicalPair(w, *pair)


def _icfl_factors(k: tuple) -> list[tuple]:
    pair = _pair(k)
    if pair is None:
        return [k]
    p_len, pbar_len = pair
    p, pbar = k[:p_len], k[p_len : p_len + pbar_len]
    r = pbar[:-1]
    rest = _icfl_factors(k[p_len:])
    if _is_prefix(pbar, rest[0]):
        return [p] + rest
    if _is_prefix(rest[0], r):
        return [p + rest[0]] + rest[1:]
    raise AssertionError("neither recursive case applies")


def icfl_naive(w: WordLike, alphabet=None) -> Factorization:
    """Literal recursion through :func:`canonical_pair_naive`."""
    w = as_word(w, alphabet)
    cuts = [0]
    for f in _icfl_factors(keys(w)):
        cuts.append(cuts[-1] + len(f))
    return Factorization(w, tuple(cuts), Kind.ICFL)


def _check_limit(w: Word, limit: Optional[int]) -> None:
    limit = ENUMERATION_LIMIT if limit is None else limit
    if len(w) > limit:
        raise InputError(f"word length {len(w)} exceeds the enumeration limit {limit}")


def enumerate_inverse_lyndon_factorizations(
    w: WordLike, alphabet=None, limit: Optional[int] = None
) -> set[Factorization]:
    """Every split into inverse Lyndon words with consecutive factors in << relation."""
    w = as_word(w, alphabet)
    _check_limit(w, limit)
    k = keys(w)
    n = len(k)
    found = set()

    def extend(cuts: list[int], last: Optional[tuple]) -> None:
        start = cuts[-1]
        if start == n:
            found.add(Factorization(w, tuple(cuts), Kind.GENERIC))
            return
        for end in range(start + 1, n + 1):
            f = k[start:end]
            if _inverse_lyndon(f) and (last is None or _less_strict(last, f)):
                cuts.append(end)
                extend(cuts, f)
                cuts.pop()

    extend([0], None)
    return found


def pmc_naive(f: Factorization) -> list[list[int]]:
    """Maximal runs of factor indices in which each factor is a prefix of the one before."""
    k = keys(f.word)
    parts = [k[lo:hi] for lo, hi in f.spans]
    chains = [[0]]
    for i in range(1, len(parts)):
        if _is_prefix(parts[i], parts[i - 1]):
            chains[-1].append(i)
        else:
            chains.append([i])
    return chains


def enumerate_groupings(cfl_in_fact: Factorization, limit: Optional[int] = None) -> set[Factorization]:
    """All groupings: each PMC replaced by one of its groupings."""
    w = cfl_in_fact.word
    _check_limit(w, limit)
    k = keys(w)
    c = cfl_in_fact.cuts
    per_chain = []
    for chain in pmc_naive(cfl_in_fact):
        lo, hi = chain[0], chain[-1] + 1
        options = []
        inner = list(range(lo + 1, hi))
        for mask in itertools.product((False, True), repeat=len(inner)):
            bounds = [lo] + [q for q, keep in zip(inner, mask) if keep] + [hi]
            blocks = [k[c[bounds[i]] : c[bounds[i + 1]]] for i in range(len(bounds) - 1)]
            if not all(_inverse_lyndon(b) for b in blocks):
                continue
            if not all(_less_strict(blocks[i], blocks[i + 1]) for i in range(len(blocks) - 1)):
                continue
            options.append([c[q] for q in bounds[1:]])
        per_chain.append(options)
    found = set()
    for combo in itertools.product(*per_chain):
        cuts = (0,) + tuple(x for part in combo for x in part)
        found.add(Factorization(w, cuts, Kind.GENERIC))
    return found


def words(alphabet: Alphabet | str | bytes, max_len: int) -> Iterator[Word]:
    """Every word of length 1..max_len, shortest first, lexicographic within a length."""
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    text = all(s < 128 for s in alphabet.symbols)
    symbols = [bytes([s]) for s in alphabet.symbols]
    for n in range(1, max_len + 1):
        for tup in itertools.product(symbols, repeat=n):
            data = b"".join(tup)
            yield Word(data.decode("latin-1") if text else data, alphabet)
