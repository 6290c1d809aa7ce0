"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import time

import pytest

from invlyndon import (
    Factorization,
    Kind,
    canonical_pair,
    cfl_in,
    cfl_in_from_icfl,
    icfl,
    icfl_from_cfl_in,
    icfl_of_chain,
    nb,
    pmc_decompose,
)
from invlyndon import bench, verify

D = "abcd"
BINARY_MAX, TERNARY_MAX = 16, 10
GROUPING_MAX = 12
SIZES = (10**5, 10**6, 10**7)


@pytest.fixture
def report(capsys):
    def emit(criterion: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {criterion}: {detail}")

    return emit


def _golden() -> list[tuple[str, object, object]]:
    y = "dabadabdabdabdadac"
    w = "dabadabdabdadac"
    cp1 = canonical_pair("babaaabb", "ab")
    cp2 = canonical_pair("babaababaababab", "ab")
    return [
        ("cfl_in(w)", cfl_in(w, D).factors, ["daba", "dab", "dab", "dadac"]),
        ("icfl(w)", icfl(w, D).factors, ["daba", "dabdab", "dadac"]),
        ("icfl(z)", icfl("dabdadacddbdc", D).factors, ["dab", "dadac", "ddbdc"]),
        ("cfl_in(y)", cfl_in(y, D).factors, ["daba", "dab", "dab", "dab", "dadac"]),
        ("icfl(y)", icfl(y, D).factors, ["daba", "dabdabdab", "dadac"]),
        ("pair(babaaabb)", (cp1.p, cp1.pbar), ("babaaa", "bb")),
        ("pair(babaababaababab)", (cp2.p, cp2.pbar, cp2.r), ("babaababaa", "babab", "baba")),
        ("pmc(cfl_in(w))", pmc_decompose(cfl_in(w, D)).groups(), [["daba", "dab", "dab"], ["dadac"]]),
        ("pmc(cfl_in(z))", pmc_decompose(cfl_in("dabdadacddbdc", D)).groups(), [["dab"], ["dadac"], ["ddbdc"]]),
        ("nb(daba)", nb("daba", D).factors, ["daba"]),
        ("nb(dabdab)", nb("dabdab", D).factors, ["dab", "dab"]),
        ("nb(dadac)", nb("dadac", D).factors, ["dadac"]),
        ("nb(w)", nb(w, D).factors, [w]),
        ("nb(dabdabdab)", nb("dabdabdab", D).factors, ["dab", "dab", "dab"]),
        (
            "icfl->cfl_in(y)",
            cfl_in_from_icfl(Factorization.from_factors(["daba", "dabdabdab", "dadac"], D, Kind.ICFL)).factors,
            ["daba", "dab", "dab", "dab", "dadac"],
        ),
        ("chain(babaa..b)", icfl_of_chain(["babaa", "babaa", "ba", "ba", "b"], "ab").factors, ["babaababaa", "babab"]),
        ("chain(daba,dab^3)", icfl_of_chain(["daba", "dab", "dab", "dab"], D).factors, ["daba", "dabdabdab"]),
        ("cfl_in->icfl(y)", icfl_from_cfl_in(cfl_in(y, D)).factors, ["daba", "dabdabdab", "dadac"]),
    ]


def test_criterion_1_golden_examples(report):
    t0 = time.perf_counter()
    cases = _golden()
    elapsed = time.perf_counter() - t0
    wrong = [name for name, got, want in cases if got != want]
    ok = not wrong and elapsed < 1.0
    report("criterion 1 golden examples", ok, f"{len(cases) - len(wrong)}/{len(cases)} exact, {elapsed:.3f}s (< 1s)")
    assert not wrong, wrong
    assert elapsed < 1.0


def _sweeps(groups, bounds):
    t0 = time.perf_counter()
    reports = [verify.run_sweep(size, max_len, groups) for size, max_len in bounds]
    return reports, time.perf_counter() - t0


def _summary(reports) -> str:
    parts = []
    for r in reports:
        parts.append(f"{{{r.alphabet}}} len<={r.max_len}: {r.words} words, {r.violations} violations")
    return "; ".join(parts)


def _failures(reports) -> dict:
    return {n: msg for r in reports for n, msg in r.first_failure.items()}


def test_criterion_2_oracle_equivalence(report):
    reports, elapsed = _sweeps(["oracle"], [(2, BINARY_MAX), (3, TERNARY_MAX)])
    assert reports[0].words == 131070
    ok = all(r.ok for r in reports) and elapsed <= 300
    report("criterion 2 oracle equivalence", ok, f"{_summary(reports)}; {elapsed:.0f}s (<= 300s)")
    assert all(r.ok for r in reports), _failures(reports)
    assert elapsed <= 300


def test_criterion_3_round_trips(report):
    reports, elapsed = _sweeps(["roundtrip"], [(2, BINARY_MAX), (3, TERNARY_MAX)])
    ok = all(r.ok for r in reports)
    report("criterion 3 round trips", ok, f"{_summary(reports)}; {elapsed:.0f}s")
    assert ok, _failures(reports)


def test_criterion_4_groupings(report):
    reports, elapsed = _sweeps(["grouping"], [(2, GROUPING_MAX)])
    ok = all(r.ok for r in reports) and elapsed <= 300
    report("criterion 4 groupings", ok, f"{_summary(reports)}; {elapsed:.0f}s (<= 300s)")
    assert all(r.ok for r in reports), _failures(reports)
    assert elapsed <= 300


def test_criterion_5_structural_invariants(report):
    reports, elapsed = _sweeps(["structure"], [(2, BINARY_MAX), (3, TERNARY_MAX)])
    ok = all(r.ok for r in reports)
    report("criterion 5 structural invariants", ok, f"{_summary(reports)}; {elapsed:.0f}s")
    assert ok, _failures(reports)


def test_criterion_6_linear_time_constant_memory(report):
    t0 = time.perf_counter()
    rows = bench.run_bench(SIZES, seed=7, ops=["cfl", "cfl-in"], memory=True, repeat=3)
    elapsed = time.perf_counter() - t0
    by = {(r.op, r.size): r for r in rows}
    ratios, mem_ok = [], True
    for op in ("cfl", "cfl-in"):
        for small, big in zip(SIZES, SIZES[1:]):
            ratios.append(by[op, big].ns_per_symbol / by[op, small].ns_per_symbol)
        for n in SIZES:
            r = by[op, n]
            # constant allowance plus a generous per-factor cost for the cut list
            mem_ok &= r.peak_bytes <= 16384 + 128 * r.factors
    worst = max(ratios)
    peak = max(r.peak_bytes for r in rows)
    ok = worst <= 2.0 and mem_ok and elapsed <= 60
    report(
        "criterion 6 performance",
        ok,
        f"worst per-symbol ratio {worst:.2f} (<= 2), peak {peak}B, {elapsed:.0f}s (<= 60s)",
    )
    assert worst <= 2.0, ratios
    assert mem_ok, [(r.op, r.size, r.peak_bytes) for r in rows]
    assert elapsed <= 60
