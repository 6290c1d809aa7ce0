"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (predicate false, property
violation, conversion mismatch), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Iterator, Optional

from . import bench, verify
from .convert import cfl_in_from_icfl, icfl_from_cfl_in, nb, pmc_decompose
from .factorize import Factorization, canonical_pair, cfl, cfl_in, icfl
from .word_core import (
    Alphabet,
    InputError,
    InvariantError,
    Order,
    Word,
    is_inverse_lyndon,
    is_lyndon,
    shortest_non_inverse_lyndon_prefix,
    unbordered_border,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FACTORIZERS = {
    "cfl": lambda w: cfl(w, Order.STANDARD),
    "cfl-in": cfl_in,
    "icfl": icfl,
    "nb": nb,
}


class UsageError(Exception):
    pass


def _text(b: bytes) -> str:
    # one JSON character per code unit keeps offsets valid as string indices
    return b.decode("latin-1")


def _lines(args) -> Iterator[bytes]:
    if args.words:
        for w in args.words:
            yield os.fsencode(w)
        return
    if args.file:
        with open(args.file, "rb") as fh:
            data = fh.read()
    else:
        data = sys.stdin.buffer.read()
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    yield from lines


def _alphabet(args) -> Alphabet:
    if args.alphabet is None:
        return Alphabet()
    return Alphabet(os.fsencode(args.alphabet))


def record(word: Word, operation: str, f: Optional[Factorization], extras: Optional[dict] = None) -> dict:
    factors = [] if f is None else [_text(word.data[lo:hi]) for lo, hi in f.spans]
    offsets = [] if f is None else [[lo, hi] for lo, hi in f.spans]
    return {
        "word": _text(word.data),
        "operation": operation,
        "factors": factors,
        "offsets": offsets,
        "extras": extras or {},
    }


def _factor_line(f: Factorization) -> bytes:
    parts = [f.word.data[lo:hi] for lo, hi in f.spans]
    if any(b" " in p for p in parts):
        raise UsageError("a factor contains a space; use --format json")
    return b" ".join(parts)


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, rec: dict, text: Callable[[], bytes]) -> None:
        # text is built lazily: factors with spaces are fine in JSON mode
        if self.fmt == "json":
            sys.stdout.write(json.dumps(rec) + "\n")
        else:
            sys.stdout.flush()
            sys.stdout.buffer.write(text() + b"\n")
            sys.stdout.buffer.flush()


def _pair_extras(w: Word) -> dict:
    cp = canonical_pair(w)
    if cp is None:
        return {"pair": None}
    piece = lambda i, j: _text(w.data[i:j])  # noqa: E731
    return {
        "p": piece(0, cp.p_len),
        "pbar": piece(cp.p_len, cp.z_len),
        "r": piece(0, cp.r_len),
        "a": piece(cp.r_len, cp.r_len + 1),
        "b": piece(cp.z_len - 1, cp.z_len),
    }


def cmd_factorize(args) -> int:
    alpha = _alphabet(args)
    out = _Out(args.format)
    for line in _lines(args):
        w = Word(line, alpha)
        if args.kind == "canonical-pair":
            cp = canonical_pair(w)
            f = None if cp is None else Factorization(w, (0, cp.p_len, cp.z_len))
            rec = record(w, "canonical-pair", f, _pair_extras(w))
            text = (lambda: b"-") if f is None else (lambda: _factor_line(f))
        elif args.kind == "pmc":
            f = cfl_in(w)
            dec = pmc_decompose(f)
            rec = record(w, "pmc", f, {"chains": [list(c) for c in dec.chains]})
            text = lambda: b" | ".join(  # noqa: E731
                _factor_line(Factorization(w, f.cuts[lo : hi + 1])) for lo, hi in dec.chains
            )
        else:
            f = FACTORIZERS[args.kind](w)
            rec = record(w, args.kind, f)
            text = lambda: _factor_line(f)  # noqa: E731
        out.emit(rec, text)
    return EXIT_OK


def cmd_convert(args) -> int:
    alpha = _alphabet(args)
    out = _Out(args.format)
    status = EXIT_OK
    for line in _lines(args):
        w = Word(line, alpha)
        if args.direction == "icfl-to-cflin":
            source = icfl(w)
            target = cfl_in_from_icfl(source)
            direct = cfl_in
        else:
            source = cfl_in(w)
            target = icfl_from_cfl_in(source)
            direct = icfl
        extras = {
            "source": {
                "kind": source.kind.value,
                "factors": [_text(w.data[lo:hi]) for lo, hi in source.spans],
                "offsets": [[lo, hi] for lo, hi in source.spans],
            }
        }
        if args.check:
            ok = direct(w) == target
            extras["check"] = ok
            if not ok:
                print(f"check failed for {_text(w.data)!r}", file=sys.stderr)
                status = EXIT_FAIL
        out.emit(record(w, args.direction, target, extras), lambda: _factor_line(target))
    return status


def _holds(predicate: str, w: Word) -> bool:
    if predicate == "lyndon":
        return is_lyndon(w, Order.STANDARD)
    if predicate == "anti-lyndon":
        return is_lyndon(w, Order.INVERSE)
    if predicate == "inverse-lyndon":
        return is_inverse_lyndon(w)
    return unbordered_border(w) is None


def cmd_check(args) -> int:
    alpha = _alphabet(args)
    out = _Out(args.format)
    status = EXIT_OK
    for line in _lines(args):
        w = Word(line, alpha)
        holds = _holds(args.predicate, w)
        extras = {"predicate": args.predicate, "holds": holds}
        if args.predicate == "inverse-lyndon" and not holds:
            extras["shortest_failing_prefix"] = shortest_non_inverse_lyndon_prefix(w)
        if not holds:
            status = EXIT_FAIL
        out.emit(record(w, f"check {args.predicate}", None, extras), lambda: b"true" if holds else b"false")
    return status


def _csv(value: Optional[str]) -> list[str]:
    return [x for x in (value or "").split(",") if x]


def cmd_verify(args) -> int:
    try:
        report = verify.run_sweep(args.alphabet_size, args.max_len, _csv(args.properties), args.jobs)
    except KeyError as exc:
        raise UsageError(f"unknown property or group {exc.args[0]!r}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(
            json.dumps(
                {
                    "alphabet": report.alphabet,
                    "max_len": report.max_len,
                    "words": report.words,
                    "properties": {
                        n: {
                            "checked": report.checked[n],
                            "passed": report.passed[n],
                            "counterexample": report.first_failure.get(n),
                        }
                        for n in report.checked
                    },
                    "chain_steps": report.chain_steps,
                    "chain_steps_beyond_run": report.chain_steps_beyond_run,
                }
            )
        )
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bench(args) -> int:
    try:
        sizes = [int(x) for x in _csv(args.sizes)]
        rows = bench.run_bench(sizes, args.seed, _csv(args.ops) or None, args.alphabet, args.memory, args.repeat)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for r in rows:
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "op": r.op,
                        "size": r.size,
                        "seconds": r.seconds,
                        "ns_per_symbol": r.ns_per_symbol,
                        "factors": r.factors,
                        "peak_bytes": r.peak_bytes,
                    }
                )
            )
        else:
            mem = "" if r.peak_bytes is None else f" peak={r.peak_bytes}B"
            print(f"{r.op:14s} n={r.size:<10d} {r.seconds:9.4f}s {r.ns_per_symbol:9.1f} ns/symbol factors={r.factors}{mem}")
    return EXIT_OK


def _input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("words", nargs="*", help="words to process (default: one per line from --file or stdin)")
    p.add_argument("--file", help="read one word per line from this file")
    p.add_argument("--alphabet", help="symbols in increasing order, e.g. 'abcd' (default: code-unit order)")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invlyndon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", help="factorize words")
    p.add_argument("kind", choices=list(FACTORIZERS) + ["canonical-pair", "pmc"])
    _input_args(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("convert", help="convert between ICFL and CFL_in")
    p.add_argument("direction", choices=("icfl-to-cflin", "cflin-to-icfl"))
    _input_args(p)
    p.add_argument("--check", action="store_true", help="recompute the target directly; exit 1 on mismatch")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="test a predicate on words")
    p.add_argument("predicate", choices=("lyndon", "anti-lyndon", "inverse-lyndon", "unbordered"))
    _input_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="exhaustive property sweep")
    p.add_argument("--alphabet-size", type=int, choices=sorted(verify.ALPHABETS), default=2)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--properties", help="comma-separated property names or groups: " + ", ".join(verify.GROUPS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the factorizers on random words")
    p.add_argument("--sizes", default="100000,1000000,10000000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ops", help="comma-separated subset of: " + ", ".join(bench.ALL_OPS))
    p.add_argument("--alphabet", default="abcd")
    p.add_argument("--repeat", type=int, default=1, help="keep the best of this many timings")
    p.add_argument("--memory", action="store_true", help="also record peak allocation (tracemalloc)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # words that follow an option land in extra; nargs="*" does not intermix
    if extra and (not hasattr(args, "words") or any(x.startswith("-") for x in extra)):
        parser.error("unrecognized arguments: " + " ".join(extra))
    if extra:
        args.words = list(args.words) + extra
    try:
        return args.func(args)
    except (InputError, InvariantError, UsageError, OSError) as exc:
        sys.stdout.flush()
        print(f"invlyndon: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
