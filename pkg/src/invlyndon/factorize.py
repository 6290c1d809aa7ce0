"""Lyndon factorizations (CFL, CFL_in), the canonical pair and ICFL."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .word_core import (
    Alphabet,
    InternalError,
    InvariantError,
    Order,
    Outcome,
    Word,
    WordLike,
    _border_array,
    _outcome,
    _prenecklace_scan,
    as_word,
)

__all__ = [
    "Kind",
    "Factorization",
    "CanonicalPair",
    "cfl",
    "cfl_in",
    "canonical_pair",
    "icfl",
    "run_view",
    "expand_runs",
]


class Kind(str, enum.Enum):
    CFL = "cfl"
    CFL_IN = "cfl-in"
    ICFL = "icfl"
    NB = "nb"
    GENERIC = "generic"


@dataclass(frozen=True)
class Factorization:
    """A split of ``word`` at the offsets in ``cuts`` (first 0, last ``len(word)``).

    Factor text is sliced on demand.  ``kind`` is a label only; call
    :meth:`validate` to check the invariants that go with it.
    """

    word: Word
    cuts: tuple[int, ...]
    kind: Kind = field(default=Kind.GENERIC, compare=False)

    @classmethod
    def from_factors(
        cls,
        factors: Sequence[WordLike],
        alphabet: Union[Alphabet, str, bytes, None] = None,
        kind: Kind = Kind.GENERIC,
    ) -> "Factorization":
        if not factors:
            raise InvariantError("a factorization needs at least one factor")
        words = [as_word(f, alphabet) for f in factors]
        alpha = words[0].alphabet
        cuts = [0]
        for f in words:
            cuts.append(cuts[-1] + len(f))
        word = Word._from_codes(b"".join(f.codes for f in words), alpha, words[0].text)
        return cls(word, tuple(cuts), kind)

    def __len__(self) -> int:
        return len(self.cuts) - 1

    def __iter__(self) -> Iterator:
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __repr__(self) -> str:
        return f"Factorization({self.kind.value}, {self.factors!r})"

    @property
    def factors(self) -> list:
        c = self.cuts
        return [self.word.piece(c[i], c[i + 1]) for i in range(len(c) - 1)]

    @property
    def spans(self) -> list[tuple[int, int]]:
        c = self.cuts
        return [(c[i], c[i + 1]) for i in range(len(c) - 1)]

    def factor_codes(self, i: int) -> bytes:
        return self.word.codes[self.cuts[i] : self.cuts[i + 1]]

    def validate(self) -> "Factorization":
        """Raise :class:`InvariantError` unless the invariants of ``kind`` hold."""
        c = self.cuts
        n = len(self.word)
        if not c or c[0] != 0 or c[-1] != n:
            raise InvariantError(f"cuts must run from 0 to {n}: {c}")
        if any(c[i] >= c[i + 1] for i in range(len(c) - 1)):
            raise InvariantError(f"cuts must be strictly increasing: {c}")
        kind = self.kind
        parts = [self.factor_codes(i) for i in range(len(self))]
        if kind in (Kind.CFL, Kind.CFL_IN):
            inverse = kind is Kind.CFL_IN
            for i, f in enumerate(parts):
                j, k = _prenecklace_scan(f, 0, inverse)
                if j != len(f) or k != 0:
                    raise InvariantError(f"factor {i} is not a Lyndon word under the {kind.value} order")
            for i in range(len(parts) - 1):
                if _outcome(parts[i], parts[i + 1], inverse).less:
                    raise InvariantError(f"factors {i} and {i + 1} increase")
        elif kind is Kind.ICFL:
            for i, f in enumerate(parts):
                if _prenecklace_scan(f, 0, True)[0] != len(f):
                    raise InvariantError(f"factor {i} is not an inverse Lyndon word")
            for i in range(len(parts) - 1):
                if _outcome(parts[i], parts[i + 1], False) is not Outcome.LESS_STRICT:
                    raise InvariantError(f"factors {i} and {i + 1} are not in << relation")
        elif kind is Kind.NB:
            for i, f in enumerate(parts):
                if _border_array(f)[-1]:
                    raise InvariantError(f"factor {i} is bordered")
        return self


@dataclass(frozen=True)
class CanonicalPair:
    """The canonical pair ``(p, pbar)`` of a word that is not inverse Lyndon.

    ``p = r a s`` and ``pbar = r b`` with ``a < b``; ``z = p pbar`` is a prefix
    of ``word``.  Everything is derived from the three lengths.
    """

    word: Word
    p_len: int
    pbar_len: int

    @property
    def r_len(self) -> int:
        return self.pbar_len - 1

    @property
    def z_len(self) -> int:
        return self.p_len + self.pbar_len

    @property
    def p(self):
        return self.word.piece(0, self.p_len)

    @property
    def pbar(self):
        return self.word.piece(self.p_len, self.z_len)

    @property
    def r(self):
        return self.word.piece(0, self.r_len)

    @property
    def s(self):
        return self.word.piece(self.r_len + 1, self.p_len)

    @property
    def a(self):
        return self.word.piece(self.r_len, self.r_len + 1)

    @property
    def b(self):
        return self.word.piece(self.z_len - 1, self.z_len)

    @property
    def v(self):
        return self.word.piece(self.p_len, len(self.word))


def _duval(s: bytes, inverse: bool) -> list[int]:
    n = len(s)
    cuts = [0]
    i = 0
    while i < n:
        j = i + 1
        k = i
        if inverse:
            while j < n:
                a = s[k]
                b = s[j]
                if b < a:
                    k = i
                elif b == a:
                    k += 1
                else:
                    break
                j += 1
        else:
            while j < n:
                a = s[k]
                b = s[j]
                if b > a:
                    k = i
                elif b == a:
                    k += 1
                else:
                    break
                j += 1
        p = j - k
        while i <= k:
            i += p
            cuts.append(i)
    return cuts


def cfl(w: WordLike, order: Order = Order.STANDARD, alphabet=None) -> Factorization:
    """Lyndon factorization of ``w`` under ``order`` (Duval, linear time)."""
    w = as_word(w, alphabet)
    inverse = Order(order) is Order.INVERSE
    return Factorization(w, tuple(_duval(w.codes, inverse)), Kind.CFL_IN if inverse else Kind.CFL)


def cfl_in(w: WordLike, alphabet=None) -> Factorization:
    return cfl(w, Order.INVERSE, alphabet)


def _split_z(s: bytes, start: int, z_len: int) -> int:
    """Return ``|r|`` for the prefix ``z = s[start:start+z_len]``.

    ``z = r a s r b`` forces ``r`` to be a border (possibly empty) of ``z``
    without its last symbol; the shortest one followed by some ``a < b`` wins.
    """
    end = start + z_len
    b = s[end - 1]
    if s[start] < b:
        return 0
    f = _border_array(s[start : end - 1])
    chain = []
    k = f[-1] if f else 0
    while k:
        chain.append(k)
        k = f[k - 1]
    for r in reversed(chain):
        # r + 1 <= z_len - r - 1 keeps p = r a s nonempty before pbar = r b
        if 2 * r + 2 <= z_len and s[start + r] < b:
            return r
    raise InternalError(f"no canonical split of prefix of length {z_len}")


def _pair_at(s: bytes, start: int) -> Optional[tuple[int, int]]:
    """Canonical pair of ``s[start:]`` as ``(p_len, pbar_len)``, None if inverse Lyndon."""
    j, _ = _prenecklace_scan(s, start, True)
    if j == len(s):
        return None
    z_len = j - start + 1
    r = _split_z(s, start, z_len)
    return z_len - r - 1, r + 1


def canonical_pair(w: WordLike, alphabet=None) -> Optional[CanonicalPair]:
    """Canonical pair of ``w``; None exactly when ``w`` is an inverse Lyndon word."""
    w = as_word(w, alphabet)
    pair = _pair_at(w.codes, 0)
    if pair is None:
        return None
    p_len, pbar_len = pair
    if _prenecklace_scan(w.codes[p_len : p_len + pbar_len], 0, True)[0] != pbar_len:
        raise InternalError("pbar is not an inverse Lyndon word")
    return CanonicalPair(w, p_len, pbar_len)


def _resolve(steps: list[tuple[int, int]], tail: tuple[int, int]) -> list[int]:
    """Unwind the ICFL recursion.

    ``steps`` holds ``(p_start, pbar_len)`` left to right; the last suffix
    ``tail = (start, end)`` is inverse Lyndon.  ``pbar`` and the first factor
    of ICFL(v) are both prefixes of v, so the two cases of the recursive rule
    reduce to comparing their lengths.
    """
    heads = [tail[0]]  # factor starts, reversed
    end = tail[1]
    for p_start, pbar_len in reversed(steps):
        v_start = heads[-1]
        first_end = heads[-2] if len(heads) > 1 else end
        first_len = first_end - v_start
        if pbar_len <= first_len:
            heads.append(p_start)
        elif first_len <= pbar_len - 1:
            heads[-1] = p_start
        else:
            raise InternalError("neither ICFL case applies")
    heads.reverse()
    heads.append(end)
    return heads


def icfl(w: WordLike, alphabet=None) -> Factorization:
    """Canonical inverse Lyndon factorization, following its recursive definition."""
    w = as_word(w, alphabet)
    s = w.codes
    steps = []
    start = 0
    while True:
        pair = _pair_at(s, start)
        if pair is None:
            break
        p_len, pbar_len = pair
        steps.append((start, pbar_len))
        start += p_len
    return Factorization(w, tuple(_resolve(steps, (start, len(s)))), Kind.ICFL)


def run_view(f: Factorization) -> list[tuple[object, int]]:
    """Merge equal consecutive factors into ``(factor, exponent)`` runs."""
    runs: list[list] = []
    for x in f.factors:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return [(x, n) for x, n in runs]


def expand_runs(runs: Sequence[tuple[object, int]]) -> list:
    return [x for x, n in runs for _ in range(n)]
