"""Small exhaustive sweep against the brute-force references, plus a timing run."""

from invlyndon import bench, verify

report = verify.run_sweep(2, 10)
print("\n".join(report.lines()))

for row in bench.run_bench([10**4, 10**5], seed=1, ops=["cfl", "cfl-in", "icfl"]):
    print(f"{row.op:7s} n={row.size:<7d} {row.ns_per_symbol:6.1f} ns/symbol")
