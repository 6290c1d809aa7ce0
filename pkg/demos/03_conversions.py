"""Going between ICFL and CFL_in without re-reading the whole word.

ICFL -> CFL_in splits each ICFL factor by peeling unbordered borders off its
right end.  CFL_in -> ICFL cuts CFL_in into prefix chains and regroups each
chain on its own.
"""

from invlyndon import cfl_in, cfl_in_from_icfl, icfl, icfl_from_cfl_in, is_grouping, nb, pmc_decompose

A = "abcd"
w = "dabadabdabdadac"

f = icfl(w, A)
print("ICFL           ", f.factors)
print("NB per factor  ", [nb(m, A).factors for m in f.factors])
print("-> CFL_in      ", cfl_in_from_icfl(f).factors)

g = cfl_in(w, A)
print("CFL_in         ", g.factors)
print("chains         ", pmc_decompose(g).groups())
print("-> ICFL        ", icfl_from_cfl_in(g).factors)
print("ICFL is a grouping of CFL_in:", is_grouping(f, g))

# NB of the whole word is not CFL_in: the word is unbordered
print("NB(w)          ", nb(w, A).factors)
