"""Lexicographic order, its inverse, and the word classes built on them."""

from invlyndon import Order, compare, is_inverse_lyndon, is_lyndon, unbordered_border

ABCD = "abcd"

# The inverse order flips the outcome only when neither word is a prefix of the other.
for x, y in [("dab", "dabd"), ("dac", "dabda")]:
    print(f"{x} vs {y}: standard {compare(x, y, Order.STANDARD, ABCD).name}, "
          f"inverse {compare(x, y, Order.INVERSE, ABCD).name}")

# Lyndon words are minimal in their conjugacy class; inverse Lyndon words are
# larger than every proper suffix.
for w in ["aabab", "abab", "bbababbaa", "aaba"]:
    print(f"{w:10s} lyndon={is_lyndon(w, alphabet='ab')!s:5s} inverse-lyndon={is_inverse_lyndon(w, 'ab')}")

# Every bordered word has exactly one unbordered border.
for w in ["ababa", "aaaa", "dabdab"]:
    u = unbordered_border(w, ABCD)
    print(f"unbordered border of {w}: {w[-u:]}")
