"""Exhaustive property sweeps: fast paths against oracles, and the theorems
relating the factorizations, checked on every word up to a length bound."""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import oracle
from .convert import (
    chain_split_points,
    cfl_in_from_icfl,
    icfl_from_cfl_in,
    is_grouping,
    nb,
    pmc_decompose,
)
from .factorize import Factorization, Kind, canonical_pair, cfl, cfl_in, icfl
from .word_core import (
    Order,
    Word,
    is_inverse_lyndon,
    is_lyndon,
    shortest_non_inverse_lyndon_prefix,
    unbordered_border,
)

ALPHABETS = {2: "ab", 3: "abc"}
MAX_LEN = {2: 20, 3: 13}
# enumeration-backed properties get expensive fast; they stop at this length
ENUMERATION_MAX_LEN = 12

Check = Callable[[Word], Optional[str]]


@dataclass(frozen=True)
class Property:
    name: str
    group: str
    check: Check
    max_len: Optional[int] = None


def _ne(label, got, want) -> Optional[str]:
    if got != want:
        return f"{label}: got {got!r}, expected {want!r}"
    return None


def _first(*msgs) -> Optional[str]:
    return next((m for m in msgs if m), None)


# -- oracle agreement ------------------------------------------------------


def _lyndon_vs_naive(w):
    return _first(
        *(_ne(f"is_lyndon[{o.value}]", is_lyndon(w, o), oracle.is_lyndon_naive(w, o)) for o in Order)
    )


def _inverse_lyndon_vs_naive(w):
    return _ne("is_inverse_lyndon", is_inverse_lyndon(w), oracle.is_inverse_lyndon_naive(w))


def _cfl_vs_naive(w):
    return _first(*(_ne(f"cfl[{o.value}]", cfl(w, o), oracle.cfl_naive(w, o)) for o in Order))


def _canonical_pair_vs_naive(w):
    return _ne("canonical_pair", canonical_pair(w), oracle.canonical_pair_naive(w))


def _icfl_vs_naive(w):
    return _ne("icfl", icfl(w), oracle.icfl_naive(w))


# -- round trips -----------------------------------------------------------


def _icfl_to_cflin(w):
    return _ne("cfl_in_from_icfl", cfl_in_from_icfl(icfl(w)), cfl_in(w))


def _cflin_to_icfl(w):
    return _ne("icfl_from_cfl_in", icfl_from_cfl_in(cfl_in(w), verify=True), icfl(w))


# -- groupings -------------------------------------------------------------


def _groupings(w):
    return oracle.enumerate_groupings(cfl_in(w))


def _icfl_is_grouping(w):
    if icfl(w) not in _groupings(w):
        return "icfl(w) is not an enumerated grouping of cfl_in(w)"
    return None


def _groupings_nb_concat(w):
    c = cfl_in(w)
    for g in _groupings(w):
        cuts = [0]
        for lo, hi in g.spans:
            cuts.extend(lo + x for x in nb(w.sub(lo, hi)).cuts[1:])
        if tuple(cuts) != c.cuts:
            return f"concatenated nb over grouping {g.factors!r} differs from cfl_in"
    return None


def _groupings_nb_equals_cfl_in(w):
    for g in _groupings(w):
        for lo, hi in g.spans:
            m = w.sub(lo, hi)
            if nb(m).cuts != cfl_in(m).cuts:
                return f"nb({m}) != cfl_in({m}) inside grouping {g.factors!r}"
    return None


def _inverse_lyndon_unique_grouping(w):
    if not is_inverse_lyndon(w):
        return None
    c = cfl_in(w)
    if unbordered_border(w) is not None and len(pmc_decompose(c)) != 1:
        return "bordered inverse Lyndon word whose cfl_in is not a single chain"
    gs = _groupings(w)
    if gs != {Factorization(w, (0, len(w)))}:
        return f"groupings of an inverse Lyndon word: {[g.factors for g in gs]!r}"
    return None


def _groupings_match_predicate(w):
    c = cfl_in(w)
    enumerated = _groupings(w)
    inner = c.cuts[1:-1]
    for mask in itertools.product((False, True), repeat=len(inner)):
        cand = Factorization(w, (0,) + tuple(x for x, keep in zip(inner, mask) if keep) + (len(w),))
        if is_grouping(cand, c) != (cand in enumerated):
            return f"is_grouping disagrees with the enumeration on {cand.factors!r}"
    return None


def _icfl_among_inverse_lyndon_factorizations(w):
    if icfl(w) not in oracle.enumerate_inverse_lyndon_factorizations(w):
        return "icfl(w) is not an inverse Lyndon factorization"
    return None


# -- structure -------------------------------------------------------------


def _cfl_factors_unbordered(w):
    for o in Order:
        f = cfl(w, o)
        for lo, hi in f.spans:
            if unbordered_border(w.sub(lo, hi)) is not None:
                return f"cfl[{o.value}] factor {w.piece(lo, hi)!r} is bordered"
    return None


def _unbordered_border_unique(w):
    k = oracle.keys(w)
    n = len(k)
    borders = [i for i in range(1, n) if k[:i] == k[n - i :]]
    unb = [i for i in borders if not any(k[:j] == k[i - j : i] for j in range(1, i))]
    want = unb[0] if len(unb) == 1 else None
    if borders and len(unb) != 1:
        return f"{len(unb)} unbordered borders"
    return _ne("unbordered_border", unbordered_border(w), want)


def _anti_lyndon_iff(w):
    want = is_inverse_lyndon(w) and unbordered_border(w) is None
    return _ne("anti-Lyndon vs unbordered inverse Lyndon", is_lyndon(w, Order.INVERSE), want)


def _inverse_lyndon_iff_anti_prenecklace(w):
    return _ne("inverse Lyndon vs anti-prenecklace", is_inverse_lyndon(w), oracle.is_anti_prenecklace_naive(w))


def _prefix_closed(w):
    if not is_inverse_lyndon(w):
        return None
    for i in range(1, len(w)):
        if not oracle.is_inverse_lyndon_naive(w.sub(0, i)):
            return f"prefix {w.piece(0, i)!r} is not inverse Lyndon"
    return None


def _shortest_prefix(w):
    want = next(
        (i for i in range(1, len(w) + 1) if not oracle.is_inverse_lyndon_naive(w.sub(0, i))), None
    )
    return _ne("shortest_non_inverse_lyndon_prefix", shortest_non_inverse_lyndon_prefix(w), want)


def _duval_properties(w):
    n = len(w)
    for o in Order:
        f = cfl(w, o)
        k = oracle.keys(w, o)
        last_lo = f.cuts[-2]
        if min(k[i:] for i in range(n)) != k[last_lo:]:
            return f"[{o.value}] last factor is not the smallest suffix"
        longest_suffix = next(i for i in range(n) if oracle.is_lyndon_naive(w.sub(i, n), o))
        if longest_suffix != last_lo:
            return f"[{o.value}] last factor is not the longest Lyndon suffix"
        longest_prefix = next(e for e in range(n, 0, -1) if oracle.is_lyndon_naive(w.sub(0, e), o))
        if longest_prefix != f.cuts[1]:
            return f"[{o.value}] first factor is not the longest Lyndon prefix"
    return None


def _cfl_unique(w):
    """Only one split into Lyndon words is non-increasing."""
    n = len(w)
    for o in Order:
        k = oracle.keys(w, o)
        found = []

        def extend(cuts, last):
            start = cuts[-1]
            if start == n:
                found.append(tuple(cuts))
                return
            for end in range(start + 1, n + 1):
                part = k[start:end]
                if (last is None or last >= part) and oracle._lyndon(part):
                    cuts.append(end)
                    extend(cuts, part)
                    cuts.pop()

        extend([0], None)
        if found != [cfl(w, o).cuts]:
            return f"[{o.value}] non-increasing Lyndon splits: {found}"
    return None


def _canonical_pair_characterization(w):
    cp = canonical_pair(w)
    if cp is None:
        return None
    k = oracle.keys(w)
    z = k[: cp.z_len]
    if cp.z_len != shortest_non_inverse_lyndon_prefix(w):
        return "p pbar is not the shortest non-inverse-Lyndon prefix"
    r = cp.r_len
    if not (z[:r] == z[cp.p_len : cp.p_len + r] and z[r] < z[-1]):
        return "p, pbar do not decompose as r a s, r b with a < b"
    shorter = [
        x for x in range(r) if 2 * x + 2 <= cp.z_len and z[:x] == z[cp.z_len - 1 - x : -1] and z[x] < z[-1]
    ]
    if shorter:
        return f"a shorter r of length {shorter[0]} exists"
    if not oracle.is_inverse_lyndon_naive(w.sub(cp.p_len, cp.z_len)):
        return "pbar is not inverse Lyndon"
    return None


def _p_on_cfl_in_cut(w):
    cp = canonical_pair(w)
    if cp is not None and cp.p_len not in cfl_in(w).cuts:
        return f"p of length {cp.p_len} does not end on a cfl_in boundary"
    return None


def _icfl_structure(w):
    try:
        icfl(w).validate()
        nb(w).validate()
        cfl_in(w).validate()
        cfl(w).validate()
    except ValueError as exc:
        return str(exc)
    return None


def _nb_concatenates(w):
    f = nb(w)
    if "".join(map(str, f.factors)) != str(w) or f.cuts != nb(Word(w.data, w.alphabet)).cuts:
        return "nb factors do not reproduce the word deterministically"
    return None


def _chain_facts(w):
    """Length bound on the residue of a chain, and the first-chain shortcut."""
    c = cfl_in(w)
    dec = pmc_decompose(c)
    k = oracle.keys(w)
    parts = [k[lo:hi] for lo, hi in c.spans]
    for j, (lo, hi) in enumerate(dec.chains):
        chain = parts[lo:hi]
        i = next((x for x in range(1, len(chain)) if chain[x] != chain[0]), len(chain))
        acc = ()
        for x in range(i, len(chain)):
            if not oracle._is_prefix(acc + chain[x], chain[0]):
                break
            acc += chain[x]
            if len(chain[0]) <= len(acc):
                return f"chain {j}: residue as long as the first factor"
        product = sum(chain, ())
        if j == 0 and oracle._inverse_lyndon(product):
            if icfl(w).cuts[1] != c.cuts[hi]:
                return "first chain is inverse Lyndon but is not the first icfl factor"
    return None


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in [
        Property("lyndon-vs-naive", "oracle", _lyndon_vs_naive),
        Property("inverse-lyndon-vs-naive", "oracle", _inverse_lyndon_vs_naive),
        Property("cfl-vs-naive", "oracle", _cfl_vs_naive),
        Property("canonical-pair-vs-naive", "oracle", _canonical_pair_vs_naive),
        Property("icfl-vs-naive", "oracle", _icfl_vs_naive),
        Property("roundtrip-icfl-to-cflin", "roundtrip", _icfl_to_cflin),
        Property("roundtrip-cflin-to-icfl", "roundtrip", _cflin_to_icfl),
        Property("icfl-is-grouping", "grouping", _icfl_is_grouping, ENUMERATION_MAX_LEN),
        Property("grouping-nb-concat", "grouping", _groupings_nb_concat, ENUMERATION_MAX_LEN),
        Property("grouping-nb-equals-cfl-in", "grouping", _groupings_nb_equals_cfl_in, ENUMERATION_MAX_LEN),
        Property("inverse-lyndon-unique-grouping", "grouping", _inverse_lyndon_unique_grouping, ENUMERATION_MAX_LEN),
        Property("grouping-predicate-vs-enumeration", "grouping", _groupings_match_predicate, ENUMERATION_MAX_LEN),
        Property("icfl-is-inverse-lyndon-factorization", "grouping", _icfl_among_inverse_lyndon_factorizations, ENUMERATION_MAX_LEN),
        Property("cfl-factors-unbordered", "structure", _cfl_factors_unbordered),
        Property("unbordered-border-unique", "structure", _unbordered_border_unique),
        Property("anti-lyndon-iff-unbordered-inverse-lyndon", "structure", _anti_lyndon_iff),
        Property("inverse-lyndon-iff-anti-prenecklace", "structure", _inverse_lyndon_iff_anti_prenecklace),
        Property("inverse-lyndon-prefix-closed", "structure", _prefix_closed),
        Property("shortest-prefix-vs-naive", "structure", _shortest_prefix),
        Property("duval-suffix-prefix", "structure", _duval_properties),
        Property("cfl-unique", "structure", _cfl_unique, ENUMERATION_MAX_LEN),
        Property("canonical-pair-characterization", "structure", _canonical_pair_characterization),
        Property("p-on-cfl-in-boundary", "structure", _p_on_cfl_in_cut),
        Property("factorization-invariants", "structure", _icfl_structure),
        Property("nb-concatenates", "structure", _nb_concatenates),
        Property("chain-facts", "structure", _chain_facts),
    ]
}

GROUPS = sorted({p.group for p in PROPERTIES.values()})


@dataclass
class Report:
    alphabet: str
    max_len: int
    words: int = 0
    checked: dict[str, int] = field(default_factory=dict)
    passed: dict[str, int] = field(default_factory=dict)
    first_failure: dict[str, tuple[str, str]] = field(default_factory=dict)
    # canonical-pair steps inside chains, and how many took more than the leading run
    chain_steps: int = 0
    chain_steps_beyond_run: int = 0
    beyond_run_example: Optional[str] = None

    @property
    def violations(self) -> int:
        return sum(self.checked[n] - self.passed[n] for n in self.checked)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def merge(self, other: "Report") -> None:
        self.words += other.words
        for n, c in other.checked.items():
            self.checked[n] = self.checked.get(n, 0) + c
            self.passed[n] = self.passed.get(n, 0) + other.passed[n]
        for n, f in other.first_failure.items():
            self.first_failure.setdefault(n, f)
        self.chain_steps += other.chain_steps
        self.chain_steps_beyond_run += other.chain_steps_beyond_run
        self.beyond_run_example = self.beyond_run_example or other.beyond_run_example

    def lines(self) -> list[str]:
        out = [f"alphabet={self.alphabet} max_len={self.max_len} words={self.words}"]
        for n in self.checked:
            status = "PASS" if self.checked[n] == self.passed[n] else "FAIL"
            out.append(f"{status} {n}: {self.passed[n]}/{self.checked[n]}")
            if n in self.first_failure:
                word, msg = self.first_failure[n]
                out.append(f"  counterexample {word!r}: {msg}")
        out.append(
            f"note: {self.chain_steps_beyond_run}/{self.chain_steps} in-chain canonical pairs have p "
            f"longer than the leading run"
            + (f" (e.g. {self.beyond_run_example!r})" if self.beyond_run_example else "")
        )
        return out


def select(names: Optional[Iterable[str]] = None) -> list[Property]:
    """Properties by name or group; everything when ``names`` is empty."""
    names = list(names or [])
    if not names:
        return list(PROPERTIES.values())
    chosen = []
    for n in names:
        if n in PROPERTIES:
            chosen.append(PROPERTIES[n])
        elif n in GROUPS:
            chosen.extend(p for p in PROPERTIES.values() if p.group == n)
        else:
            raise KeyError(n)
    return list(dict.fromkeys(chosen))


def _survey_chains(w: Word, report: Report) -> None:
    c = cfl_in(w)
    for lo, hi in pmc_decompose(c).chains:
        chain = Factorization.from_factors(c.factors[lo:hi], w.alphabet, Kind.CFL_IN)
        for g, run in chain_split_points(chain):
            report.chain_steps += 1
            if g != run:
                report.chain_steps_beyond_run += 1
                report.beyond_run_example = report.beyond_run_example or str(w)


def _sweep(args) -> Report:
    alphabet, max_len, names, shard, shards = args
    props = select(names)
    report = Report(alphabet, max_len)
    for p in props:
        report.checked[p.name] = 0
        report.passed[p.name] = 0
    for idx, w in enumerate(oracle.words(alphabet, max_len)):
        if idx % shards != shard:
            continue
        report.words += 1
        for p in props:
            if p.max_len is not None and len(w) > p.max_len:
                continue
            report.checked[p.name] += 1
            try:
                msg = p.check(w)
            except Exception as exc:  # a crash is a violation, not an abort
                msg = f"{type(exc).__name__}: {exc}"
            if msg is None:
                report.passed[p.name] += 1
            else:
                report.first_failure.setdefault(p.name, (str(w), msg))
        _survey_chains(w, report)
    return report


def run_sweep(
    alphabet_size: int,
    max_len: int,
    properties: Optional[Sequence[str]] = None,
    jobs: int = 1,
) -> Report:
    """Check the selected properties on every word over the first
    ``alphabet_size`` letters up to ``max_len``."""
    if alphabet_size not in ALPHABETS:
        raise ValueError(f"alphabet size must be one of {sorted(ALPHABETS)}")
    if not 1 <= max_len <= MAX_LEN[alphabet_size]:
        raise ValueError(f"max_len must be in 1..{MAX_LEN[alphabet_size]} for alphabet size {alphabet_size}")
    names = tuple(properties or ())
    select(names)  # fail early on unknown names
    alphabet = ALPHABETS[alphabet_size]
    jobs = max(1, jobs)
    tasks = [(alphabet, max_len, names, i, jobs) for i in range(jobs)]
    if jobs == 1:
        parts = [_sweep(tasks[0])]
    else:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_sweep, tasks)
    report = Report(alphabet, max_len)
    for part in parts:
        report.merge(part)
    return report
