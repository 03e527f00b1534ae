"""Command-line front door: transform, match, equivalence, validation,
random generation, and benchmarking."""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass

from .equivalence import formula_equivalence, oracle_check
from .formula import IntervalError, complen, num_vars
from .limits import BudgetExceededError, deadline
from .regexes import match, regex_to_text
from .syntax import (
    FormulaGenParams,
    ParseError,
    iter_random_formulas,
    max_interval_bound,
    parse_formula,
    parse_trace,
    pretty,
    random_formula,
    temporal_depth,
)
from .transform import simp_pad_west_reg, west_reg

USAGE_ERROR = 64


@dataclass
class BenchRecord:
    """One benchmark measurement: the formula, its (n, d, b) provenance,
    wall milliseconds, and the result shape when it completed."""

    formula: str
    n: int
    d: int
    b: int
    ms: float
    outcome: str  # ok, timeout, or limit
    alts: int | None
    length: int | None


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="west", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("regex", help="print the trace regex of a formula")
    p.add_argument("formula")
    p.add_argument("--pad", action="store_true",
                   help="pad alternatives to the computation length")
    p.add_argument("--json", action="store_true",
                   help="emit a JSON object instead of plain text")

    p = sub.add_parser("match", help="match a trace against a formula")
    p.add_argument("formula")
    p.add_argument("--trace", required=True,
                   help="comma-separated 0/1 states, width num_vars")
    p.add_argument("--pad", action="store_true")

    p = sub.add_parser("equiv", help="check two formulas for equivalence")
    p.add_argument("formula1")
    p.add_argument("formula2")
    p.add_argument("--budget", type=int, default=1 << 24,
                   help="max concrete regexes to enumerate per side")

    p = sub.add_parser("validate",
                       help="run the exhaustive oracle over a random batch")
    _add_gen_flags(p)
    p.add_argument("--max-bits", type=int, default=16,
                   help="skip formulas with num_vars*(complen+1) above this")

    p = sub.add_parser("random", help="print random formulas")
    _add_gen_flags(p)
    p.add_argument("--nested-ur", action="store_true",
                   help="restrict to nested until/release shapes")

    p = sub.add_parser("bench", help="time the transformation over a suite")
    p.add_argument("--suite", help="file of formulas, one per line")
    _add_gen_flags(p, required=False)
    p.add_argument("--nested-ur", action="store_true")
    p.add_argument("--timeout", type=float, default=10.0,
                   help="per-formula wall-time limit in seconds")
    p.add_argument("--out", default="-", help="CSV path, - for stdout")
    return parser


def _add_gen_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--count", type=int, required=required, default=0)
    p.add_argument("--nvars", type=int, default=1)
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--bound", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)


def _cmd_regex(args) -> int:
    phi = parse_formula(args.formula)
    regex = simp_pad_west_reg(phi) if args.pad else west_reg(phi)
    if args.json:
        payload = {
            "regex": regex_to_text(regex),
            "nvars": num_vars(phi),
            "complen": complen(phi),
            "alternatives": len(regex),
        }
        print(json.dumps(payload))
    else:
        print(regex_to_text(regex))
    return 0


def _cmd_match(args) -> int:
    phi = parse_formula(args.formula)
    trace = parse_trace(args.trace, num_vars(phi))
    regex = simp_pad_west_reg(phi) if args.pad else west_reg(phi)
    if match(trace, regex):
        print("match")
        return 0
    print("no-match")
    return 1


def _cmd_equiv(args) -> int:
    verdict = formula_equivalence(
        parse_formula(args.formula1),
        parse_formula(args.formula2),
        budget=args.budget,
    )
    if verdict.outcome == "equivalent":
        print("equivalent")
        return 0
    if verdict.outcome == "inequivalent":
        print("inequivalent")
        print(f"witness: {regex_to_text([verdict.witness])}")
        return 1
    print(f"limit: {verdict.detail}")
    return 2


def _cmd_validate(args) -> int:
    params = FormulaGenParams(nvars=args.nvars, depth=args.depth,
                              bound=args.bound, seed=args.seed,
                              count=args.count)
    passed = failed = 0
    for phi in iter_random_formulas(params):
        if passed + failed == args.count:
            break
        if num_vars(phi) * (complen(phi) + 1) > args.max_bits:
            continue
        if oracle_check(phi, budget=args.max_bits):
            passed += 1
        else:
            failed += 1
            print(f"FAIL {pretty(phi)}")
    print(f"passed {passed}/{passed + failed}")
    return 0 if failed == 0 else 1


def _cmd_random(args) -> int:
    params = FormulaGenParams(nvars=args.nvars, depth=args.depth,
                              bound=args.bound, seed=args.seed,
                              count=args.count, nested_ur=args.nested_ur)
    for phi in random_formula(params):
        print(pretty(phi))
    return 0


def cmd_bench_timing(
    batch: list[tuple[str, int, int, int]], timeout: float
) -> list[BenchRecord]:
    """Time simp_pad_west_reg per formula; timeouts become records, not
    errors, and are excluded from any average."""
    records = []
    for text, n, d, b in batch:
        phi = parse_formula(text)
        start = time.perf_counter()
        try:
            with deadline(timeout):
                regex = simp_pad_west_reg(phi)
            ms = (time.perf_counter() - start) * 1000.0
            records.append(BenchRecord(text, n, d, b, ms, "ok",
                                       len(regex), complen(phi)))
        except BudgetExceededError:
            ms = (time.perf_counter() - start) * 1000.0
            records.append(BenchRecord(text, n, d, b, ms, "timeout",
                                       None, None))
    return records


def _bench_batch(args) -> list[tuple[str, int, int, int]]:
    if args.suite:
        batch = []
        with open(args.suite) as handle:
            for line in handle:
                text = line.strip()
                if not text:
                    continue
                phi = parse_formula(text)
                batch.append((text, num_vars(phi), temporal_depth(phi),
                              max_interval_bound(phi)))
        return batch
    params = FormulaGenParams(nvars=args.nvars, depth=args.depth,
                              bound=args.bound, seed=args.seed,
                              count=args.count, nested_ur=args.nested_ur)
    return [
        (pretty(phi), args.nvars, args.depth, args.bound)
        for phi in random_formula(params)
    ]


def _cmd_bench(args) -> int:
    records = cmd_bench_timing(_bench_batch(args), args.timeout)
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out)
        writer.writerow(["formula", "n", "d", "b", "ms", "outcome",
                         "alts", "len"])
        for r in records:
            writer.writerow([
                r.formula, r.n, r.d, r.b, f"{r.ms:.3f}", r.outcome,
                "" if r.alts is None else r.alts,
                "" if r.length is None else r.length,
            ])
    finally:
        if out is not sys.stdout:
            out.close()
    done = [r for r in records if r.outcome == "ok"]
    timeouts = sum(1 for r in records if r.outcome == "timeout")
    if done:
        avg = sum(r.ms for r in done) / len(done)
        print(f"ok {len(done)}/{len(records)}, avg {avg:.3f} ms "
              f"(timeouts excluded), timeouts {timeouts}", file=sys.stderr)
    else:
        print(f"ok 0/{len(records)}, timeouts {timeouts}", file=sys.stderr)
    return 0


_COMMANDS = {
    "regex": _cmd_regex,
    "match": _cmd_match,
    "equiv": _cmd_equiv,
    "validate": _cmd_validate,
    "random": _cmd_random,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, IntervalError, OSError) as e:
        print(f"west: error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
