"""A word can have several inverse Lyndon factorizations; ICFL is one grouping among them."""

from invlyndon import cfl_in, icfl, is_grouping
from invlyndon.oracle import enumerate_groupings, enumerate_inverse_lyndon_factorizations

A = "abcd"
y = "dabadabdabdabdadac"

print("inverse Lyndon factorizations of", y)
for f in sorted(enumerate_inverse_lyndon_factorizations(y, A), key=lambda f: f.cuts):
    print("  ", f.factors, "grouping" if is_grouping(f, cfl_in(y, A)) else "")

print("groupings of CFL_in:")
for f in sorted(enumerate_groupings(cfl_in(y, A)), key=lambda f: f.cuts):
    mark = "<- ICFL" if f.cuts == icfl(y, A).cuts else ""
    print("  ", f.factors, mark)
