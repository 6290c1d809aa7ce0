"""Three factorizations of the same word.

CFL and CFL_in are unique factorizations into Lyndon words under the two
orders.  ICFL is a canonical inverse Lyndon factorization, built from
canonical pairs.
"""

from invlyndon import Order, canonical_pair, cfl, cfl_in, icfl, run_view

w = "dabadabdabdabdadac"
print("word    ", w)
print("CFL     ", cfl(w, Order.STANDARD, "abcd").factors)
print("CFL_in  ", cfl_in(w, "abcd").factors)
print("  runs  ", run_view(cfl_in(w, "abcd")))
print("ICFL    ", icfl(w, "abcd").factors)

# ICFL peels the canonical pair of each remaining suffix
for x in ["babaaabb", "babaababaababab"]:
    cp = canonical_pair(x, "ab")
    print(f"pair of {x}: p={cp.p} pbar={cp.pbar} r={cp.r!r}")
