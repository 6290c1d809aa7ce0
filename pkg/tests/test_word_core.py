import pytest
from hypothesis import given, strategies as st

from invlyndon import (
    Alphabet,
    InputError,
    Order,
    Outcome,
    Word,
    border_array,
    compare,
    is_inverse_lyndon,
    is_lyndon,
    shortest_non_inverse_lyndon_prefix,
    unbordered_border,
)

binary = st.text(alphabet="ab", min_size=1, max_size=14)
ternary = st.text(alphabet="abc", min_size=1, max_size=10)


def test_compare_examples():
    assert compare("dab", "dabd", Order.STANDARD, "abcd") is Outcome.LESS_PREFIX
    assert compare("dac", "dabda", Order.INVERSE, "abcd") is Outcome.LESS_STRICT
    assert compare("x", "x", Order.INVERSE) is Outcome.EQUAL


def test_compare_under_custom_order():
    # b before a
    assert compare("a", "b", alphabet="ba") is Outcome.GREATER_STRICT
    assert compare("a", "b", alphabet="ab") is Outcome.LESS_STRICT


@given(ternary, ternary)
def test_trichotomy_and_mirror(x, y):
    o = compare(x, y, alphabet="abc")
    assert o.mirror() is compare(y, x, alphabet="abc")
    assert sum([o is Outcome.EQUAL, o.less, o.greater]) == 1
    assert (o is Outcome.EQUAL) == (x == y)
    assert o.less == (x < y)


@given(ternary, ternary)
def test_inverse_order_flips_only_incomparable_pairs(x, y):
    std = compare(x, y, Order.STANDARD, "abc")
    inv = compare(x, y, Order.INVERSE, "abc")
    if std.incomparable:
        assert inv is std.mirror()
    else:
        assert inv is std


@given(ternary, ternary, ternary)
def test_left_cancellation(u, x, y):
    assert compare(u + x, u + y, alphabet="abc") is compare(x, y, alphabet="abc")


@given(ternary, ternary, ternary, ternary)
def test_strict_less_survives_extension(x, y, s, t):
    if compare(x, y, alphabet="abc") is Outcome.LESS_STRICT:
        assert compare(x + s, y + t, alphabet="abc") is Outcome.LESS_STRICT


def test_border_array_examples():
    assert border_array("ababa")[-1] == 3
    assert border_array("aaab")[-1] == 0
    assert border_array("a") == [0]


def test_unbordered_border_examples():
    assert unbordered_border("ababa") == 1
    assert unbordered_border("aaaa") == 1
    assert unbordered_border("ab") is None
    assert unbordered_border("dabdab", "abcd") == 3


@given(binary)
def test_unbordered_border_is_a_border(w):
    u = unbordered_border(w)
    if u is None:
        assert border_array(w)[-1] == 0
    else:
        assert w.startswith(w[-u:]) and 0 < u < len(w)
        assert unbordered_border(w[:u]) is None


def test_is_lyndon_examples():
    assert is_lyndon("aabab", Order.STANDARD, "ab")
    assert not is_lyndon("abab", Order.STANDARD, "ab")
    assert is_lyndon("dab", Order.INVERSE, "abcd")
    assert not is_lyndon("aa")


def test_is_inverse_lyndon_examples():
    assert is_inverse_lyndon("bbababbaa", "ab")
    assert not is_inverse_lyndon("aaba", "ab")
    assert is_inverse_lyndon("a")
    assert is_inverse_lyndon("aaaa")


def test_shortest_non_inverse_lyndon_prefix_examples():
    assert shortest_non_inverse_lyndon_prefix("babaaabb", "ab") == 8
    assert shortest_non_inverse_lyndon_prefix("bbababbaa", "ab") is None
    assert shortest_non_inverse_lyndon_prefix("aaba", "ab") == 3


def test_word_types_round_trip():
    w = Word("dabd", "abcd")
    assert w.piece(1, 3) == "ab"
    assert Word(b"dabd", "abcd").piece(1, 3) == b"ab"
    assert w.sub(0, 3) == Word("dab", "abcd")
    assert len(w) == 4


def test_word_input_errors():
    with pytest.raises(InputError):
        Word("")
    with pytest.raises(InputError):
        Word("abc", "ab")
    with pytest.raises(InputError):
        Word("☃")
    with pytest.raises(InputError):
        Alphabet("aba")


def test_default_alphabet_is_code_unit_order():
    assert compare(b"\x00", b"\xff") is Outcome.LESS_STRICT
    assert is_lyndon(bytes([0, 1, 255]))
