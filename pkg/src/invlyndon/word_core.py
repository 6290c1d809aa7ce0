"""Alphabets, words and the order-sensitive primitives everything else builds on.

Words are stored twice: the original code units (``data``) and a rank-coded
copy (``codes``) in which symbol ``s`` is replaced by its position in the
alphabet.  Under the rank coding the standard lexicographic order is plain
byte comparison, so the hot loops never look anything up.  For the default
alphabet (all 256 code units in numeric order) the two are the same object.
"""

from __future__ import annotations

import enum
from typing import Optional, Union

__all__ = [
    "InputError",
    "InvariantError",
    "InternalError",
    "Alphabet",
    "Word",
    "Order",
    "Outcome",
    "as_word",
    "compare",
    "border_array",
    "unbordered_border",
    "is_lyndon",
    "is_inverse_lyndon",
    "shortest_non_inverse_lyndon_prefix",
]


class InputError(ValueError):
    """Malformed input: empty word, unranked symbol, bad alphabet."""


class InvariantError(ValueError):
    """A factorization handed to an operation does not satisfy its contract."""


class InternalError(RuntimeError):
    """A state the theory rules out was reached; always a bug."""


WordLike = Union["Word", str, bytes, bytearray, memoryview]


class Order(str, enum.Enum):
    STANDARD = "standard"
    INVERSE = "inverse"


class Outcome(enum.Enum):
    """Result of comparing x with y under a lexicographic order."""

    EQUAL = "equal"
    LESS_PREFIX = "less-prefix"  # x is a proper prefix of y
    LESS_STRICT = "less-strict"  # x << y
    GREATER_PREFIX = "greater-prefix"
    GREATER_STRICT = "greater-strict"

    @property
    def less(self) -> bool:
        return self in (Outcome.LESS_PREFIX, Outcome.LESS_STRICT)

    @property
    def greater(self) -> bool:
        return self in (Outcome.GREATER_PREFIX, Outcome.GREATER_STRICT)

    @property
    def incomparable(self) -> bool:
        """True when neither word is a prefix of the other."""
        return self in (Outcome.LESS_STRICT, Outcome.GREATER_STRICT)

    def mirror(self) -> "Outcome":
        return _MIRROR[self]


_MIRROR = {
    Outcome.EQUAL: Outcome.EQUAL,
    Outcome.LESS_PREFIX: Outcome.GREATER_PREFIX,
    Outcome.LESS_STRICT: Outcome.GREATER_STRICT,
    Outcome.GREATER_PREFIX: Outcome.LESS_PREFIX,
    Outcome.GREATER_STRICT: Outcome.LESS_STRICT,
}


def _to_bytes(data) -> tuple[bytes, bool]:
    if isinstance(data, str):
        try:
            return data.encode("latin-1"), True
        except UnicodeEncodeError:
            raise InputError(
                "text symbols must be single code units (U+0000..U+00FF); "
                "pass bytes for other encodings"
            ) from None
    if isinstance(data, (bytes, bytearray, memoryview)):
        return bytes(data), False
    raise InputError(f"cannot interpret {type(data).__name__} as a word")


class Alphabet:
    """A total order on up to 256 code units.

    ``Alphabet("abcd")`` means a < b < c < d.  ``Alphabet()`` is every code
    unit in numeric order.
    """

    __slots__ = ("symbols", "rank", "_encode", "_decode", "identity")

    def __init__(self, symbols: Optional[Union[str, bytes]] = None):
        if symbols is None:
            raw = bytes(range(256))
        else:
            raw, _ = _to_bytes(symbols)
        if not raw:
            raise InputError("alphabet must contain at least one symbol")
        if len(set(raw)) != len(raw):
            raise InputError("alphabet symbols must be distinct")
        self.symbols = raw
        self.rank = {s: i for i, s in enumerate(raw)}
        self.identity = raw == bytes(range(len(raw)))
        enc = bytearray(range(256))
        for i, s in enumerate(raw):
            enc[s] = i
        self._encode = bytes(enc)
        dec = bytearray(256)
        dec[: len(raw)] = raw
        self._decode = bytes(dec)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        if self.identity and len(self.symbols) == 256:
            return "Alphabet()"
        return f"Alphabet({self.symbols.decode('latin-1')!r})"

    def encode(self, data: bytes) -> bytes:
        """Map code units to ranks; reject symbols outside the alphabet."""
        stray = data.translate(None, self.symbols)
        if stray:
            raise InputError(f"symbol {stray[:1]!r} is not in the alphabet")
        if self.identity:
            return data
        return data.translate(self._encode)

    def decode(self, codes: bytes) -> bytes:
        if self.identity:
            return codes
        return codes.translate(self._decode)


DEFAULT_ALPHABET = Alphabet()


class Word:
    """A nonempty word over an :class:`Alphabet`.

    ``piece(i, j)`` returns a slice in the caller's original type (``str`` in,
    ``str`` out).
    """

    __slots__ = ("data", "alphabet", "codes", "text")

    def __init__(self, data: WordLike, alphabet: Optional[Union[Alphabet, str, bytes]] = None):
        if isinstance(data, Word):
            data, text = data.data, data.text
        else:
            data, text = _to_bytes(data)
        if not data:
            raise InputError("empty word")
        if alphabet is None:
            alphabet = DEFAULT_ALPHABET
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self.data = data
        self.alphabet = alphabet
        self.codes = alphabet.encode(data)
        self.text = text

    @classmethod
    def _from_codes(cls, codes: bytes, alphabet: Alphabet, text: bool) -> "Word":
        w = cls.__new__(cls)
        w.codes = codes
        w.data = alphabet.decode(codes)
        w.alphabet = alphabet
        w.text = text
        return w

    def __len__(self) -> int:
        return len(self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.data == other.data
            and self.alphabet == other.alphabet
        )

    def __hash__(self) -> int:
        return hash(self.data)

    def __str__(self) -> str:
        return self.data.decode("latin-1")

    def __repr__(self) -> str:
        return f"Word({self.value!r})"

    @property
    def value(self) -> Union[str, bytes]:
        return self.data.decode("latin-1") if self.text else self.data

    def piece(self, i: int, j: int) -> Union[str, bytes]:
        chunk = self.data[i:j]
        return chunk.decode("latin-1") if self.text else chunk

    def sub(self, i: int, j: int) -> "Word":
        """The factor ``w[i:j]`` as a Word over the same alphabet."""
        return Word._from_codes(self.codes[i:j], self.alphabet, self.text)


def as_word(w: WordLike, alphabet=None) -> Word:
    if isinstance(w, Word) and (alphabet is None or w.alphabet == alphabet):
        return w
    return Word(w, alphabet)


def _outcome(x: bytes, y: bytes, inverse: bool) -> Outcome:
    if x == y:
        return Outcome.EQUAL
    if y.startswith(x):
        return Outcome.LESS_PREFIX
    if x.startswith(y):
        return Outcome.GREATER_PREFIX
    # incomparable: the first mismatch decides, and the inverse order flips it
    if (x < y) != inverse:
        return Outcome.LESS_STRICT
    return Outcome.GREATER_STRICT


def compare(x: WordLike, y: WordLike, order: Order = Order.STANDARD, alphabet=None) -> Outcome:
    """Compare ``x`` with ``y`` lexicographically under ``order``."""
    x = as_word(x, alphabet)
    y = as_word(y, x.alphabet)
    return _outcome(x.codes, y.codes, Order(order) is Order.INVERSE)


def _border_array(s: bytes) -> list[int]:
    n = len(s)
    f = [0] * n
    k = 0
    for i in range(1, n):
        c = s[i]
        while k and s[k] != c:
            k = f[k - 1]
        if s[k] == c:
            k += 1
        f[i] = k
    return f


def border_array(w: WordLike, alphabet=None) -> list[int]:
    """``result[i]`` is the length of the longest border of ``w[:i+1]``."""
    return _border_array(as_word(w, alphabet).codes)


def _terminal_borders(f: list[int]) -> list[int]:
    """Last nonzero entry of each prefix's border chain (0 if unbordered)."""
    t = [0] * len(f)
    for i, b in enumerate(f):
        if b:
            t[i] = t[b - 1] or b
    return t


def unbordered_border(w: WordLike, alphabet=None) -> Optional[int]:
    """Length of the unique nonempty unbordered border, or None if ``w`` is unbordered.

    Any shorter border of a border is itself a border of ``w``, so the
    shortest nonzero element of the border chain is the one we want.
    """
    f = _border_array(as_word(w, alphabet).codes)
    b = f[-1]
    if not b:
        return None
    while f[b - 1]:
        b = f[b - 1]
    return b


def _prenecklace_scan(s: bytes, start: int, inverse: bool) -> tuple[int, int]:
    """Duval scan of ``s[start:]``.

    Returns ``(j, k)``: ``s[start:j]`` is the longest prenecklace prefix and
    ``j - k`` its period.  ``j == len(s)`` means the whole suffix passed.
    """
    n = len(s)
    j = start + 1
    k = start
    if inverse:
        while j < n:
            a = s[k]
            b = s[j]
            if b < a:
                k = start
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
                k = start
            elif b == a:
                k += 1
            else:
                break
            j += 1
    return j, k


def is_lyndon(w: WordLike, order: Order = Order.STANDARD, alphabet=None) -> bool:
    """Lyndon test; with ``order=INVERSE`` this is the anti-Lyndon test.

    A prenecklace is Lyndon exactly when its period equals its length.
    """
    s = as_word(w, alphabet).codes
    j, k = _prenecklace_scan(s, 0, Order(order) is Order.INVERSE)
    return j == len(s) and k == 0


def shortest_non_inverse_lyndon_prefix(w: WordLike, alphabet=None) -> Optional[int]:
    """Length of the shortest prefix that is not an inverse Lyndon word.

    Inverse Lyndon words are the nonempty anti-prenecklaces, so the first
    failure of the anti-prenecklace scan is the answer.
    """
    s = as_word(w, alphabet).codes
    j, _ = _prenecklace_scan(s, 0, True)
    return None if j == len(s) else j + 1


def is_inverse_lyndon(w: WordLike, alphabet=None) -> bool:
    s = as_word(w, alphabet).codes
    return _prenecklace_scan(s, 0, True)[0] == len(s)
