"""Command-line front end.

stdout carries data, stderr carries logs and errors.  Exit codes: 0 on
success, 1 when a verification sweep finds a mismatch, 2 on usage or domain
errors (the error is also written to stderr as JSON).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .charact import decide
from .errors import SturmRectError
from .exactalpha import ContinuedFraction, LinearForm, frac_mul, new_cf, parse_alpha
from .ostrowski import decode, encode
from .torus import discrepancy_check, interval_balance_oracle, points_of_alpha
from .words import DEFAULT_I_MAX, FloorTable, prefix, window_scan

log = logging.getLogger("sturmrect")

SCHEMA = 1
SCAN_COLUMNS = ("m", "n", "balanced", "case")


def approx(cf: ContinuedFraction, x: LinearForm) -> str:
    """Decimal rendering from the deepest stored convergent, for display only."""
    with localcontext() as ctx:
        ctx.prec = 50
        K = cf.depth
        a = Decimal(cf.p(K)) / Decimal(cf.q(K))
        value = (Decimal(x.const_part) + Decimal(x.alpha_coeff) * a) / Decimal(x.denominator)
        return "≈" + (format(value, "f") if value else "0")


def _fraction_form(text: str) -> LinearForm:
    f = Fraction(text)
    return LinearForm(f.numerator, 0, f.denominator)


def _emit(args, payload: dict, rows: Optional[Sequence[Sequence]] = None, columns: Sequence[str] = ()) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    elif fmt == "tsv":
        if rows is None:
            columns = list(payload)
            rows = [[payload[c] for c in columns]]
        print("\t".join(columns))
        for row in rows:
            print("\t".join(_cell(v) for v in row))
    else:
        if rows is None:
            for k, v in payload.items():
                print(f"{k}: {_cell(v)}")
        else:
            width = [max(len(c), *(len(_cell(r[i])) for r in rows)) if rows else len(c) for i, c in enumerate(columns)]
            print("  ".join(c.rjust(w) for c, w in zip(columns, width)))
            for row in rows:
                print("  ".join(_cell(v).rjust(w) for v, w in zip(row, width)))


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, ensure_ascii=False)
    return "" if v is None else str(v)


def cmd_cf(args, cf: ContinuedFraction) -> int:
    depth = cf.depth if args.depth is None else min(args.depth, cf.depth)
    rows = []
    for k in range(depth + 1):
        sign = "+" if k % 2 == 0 else "-"
        rows.append([k, cf.a(k) if k else None, cf.p(k), cf.q(k), sign])
    payload = {"alpha": args.alpha, "rows": [dict(zip(("k", "a", "p", "q", "delta_sign"), r)) for r in rows]}
    _emit(args, payload, rows, ("k", "a", "p", "q", "delta_sign"))
    return 0


def cmd_ostrowski(args, cf: ContinuedFraction) -> int:
    if args.action == "encode":
        n = int(args.value)
        rep = encode(cf, n)
        payload = {"alpha": args.alpha, "n": n, "digits": rep.to_json()}
    else:
        digits = [int(t) for t in args.value.split(",") if t.strip()]
        payload = {"alpha": args.alpha, "digits": digits, "n": decode(cf, digits)}
    _emit(args, payload)
    return 0


def cmd_word(args, cf: ContinuedFraction) -> int:
    word = "".join(map(str, prefix(cf, args.len)))
    if args.format == "json":
        _emit(args, {"alpha": args.alpha, "word": word})
    else:
        print(word)
    return 0


def cmd_rect(args, cf: ContinuedFraction) -> int:
    report = window_scan(cf, args.m, args.n, args.i_max, skip_undecidable=args.skip_undecidable)
    _emit(args, {"alpha": args.alpha, **report.to_json(), "proves_unbalanced": report.proves_unbalanced})
    return 0


def cmd_balanced(args, cf: ContinuedFraction) -> int:
    payload = decide(cf, args.m, args.n, alpha_label=args.alpha).to_json()
    payload.pop("schema")
    _emit(args, payload)
    return 0


def cmd_oracle(args, cf: ContinuedFraction) -> int:
    verdict = interval_balance_oracle(points_of_alpha(cf, args.m), frac_mul(cf, args.n))
    payload = {"alpha": args.alpha, "m": args.m, "n": args.n, **verdict.to_json()}
    if args.format == "text":
        payload["witnesses"] = [f"count {c} at x {approx(cf, x)}" for c, x in verdict.witness_intervals]
    _emit(args, payload)
    return 0


def cmd_discrepancy(args, cf: ContinuedFraction) -> int:
    x = frac_mul(cf, args.x_n) if args.x_n is not None else _fraction_form(args.x)
    d = frac_mul(cf, args.d_n) if args.d_n is not None else _fraction_form(args.d)
    ok = discrepancy_check(cf, args.N, x, d)
    _emit(args, {"alpha": args.alpha, "N": args.N, "x": x.to_json(), "d": d.to_json(), "minimal_discrepancy": ok})
    return 0


def _pairs(max_n: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(2, max_n + 1) for n in range(m, max_n + 1)]


def _verify_chunk(quotients: tuple[int, ...], pairs: Sequence[tuple[int, int]], i_max: int) -> list[tuple]:
    cf = new_cf(quotients)
    top = max(n for _, n in pairs) * 2 + i_max
    table = FloorTable(cf, top)
    out = []
    points = {}
    for m, n in pairs:
        if m not in points:
            points[m] = points_of_alpha(cf, m)
        theorem = decide(cf, m, n)
        oracle = interval_balance_oracle(points[m], frac_mul(cf, n)).balanced
        scan = window_scan(cf, m, n, i_max, skip_undecidable=True, stop_after=3, table=table)
        out.append((m, n, theorem.balanced, theorem.case_tag.value, oracle, scan.proves_unbalanced))
    return out


def _run_pairs(cf: ContinuedFraction, pairs: list[tuple[int, int]], i_max: int, workers: int) -> list[tuple]:
    quotients = tuple(cf.partial_quotients)
    if workers <= 1 or len(pairs) < 2 * workers:
        return _verify_chunk(quotients, pairs, i_max)
    chunks = [pairs[k::workers] for k in range(workers)]
    with ProcessPoolExecutor(workers) as pool:
        parts = pool.map(_verify_chunk, [quotients] * workers, chunks, [i_max] * workers)
    return sorted(r for part in parts for r in part)


def cmd_verify(args, cf: ContinuedFraction) -> int:
    if args.max_n < 2:
        raise ValueError("verify needs --max-n >= 2")
    pairs = _pairs(args.max_n)
    if args.sample:
        pairs = sorted(random.Random(args.seed).sample(pairs, min(args.sample, len(pairs))))
    start = time.perf_counter()
    results = _run_pairs(cf, pairs, args.i_max, args.workers)
    elapsed = time.perf_counter() - start
    mismatches = [[m, n] for m, n, th, _, orc, _ in results if th != orc]
    contradictions = [[m, n] for m, n, th, _, orc, sc in results if sc and (th or orc)]
    unwitnessed = sum(1 for _, _, th, _, _, sc in results if not th and not sc)
    balanced = [[m, n] for m, n, th, *_ in results if th]
    log.info("verify %s: %d pairs in %.2f s", args.alpha, len(results), elapsed)
    payload = {
        "alpha": args.alpha,
        "max_n": args.max_n,
        "pairs": len(results),
        "mismatches": len(mismatches),
        "mismatched_pairs": mismatches,
        "scan_contradictions": len(contradictions),
        "unbalanced_without_scan_witness": unwitnessed,
        "balanced_pairs": balanced,
    }
    if args.format == "tsv":
        _emit(args, payload, [[m, n, th, case, orc, sc] for m, n, th, case, orc, sc in results],
              ("m", "n", "theorem", "case", "oracle", "scan_unbalanced"))
    else:
        _emit(args, payload)
    print(f"mismatches: {len(mismatches)}  time: {elapsed:.2f} s", file=sys.stderr)
    return 1 if mismatches or contradictions else 0


def cmd_scan(args, cf: ContinuedFraction) -> int:
    rows = []
    for m, n in _pairs(args.max_n):
        v = decide(cf, m, n)
        rows.append([m, n, v.balanced, v.case_tag.value])
    payload = {"alpha": args.alpha, "columns": list(SCAN_COLUMNS), "rows": rows}
    _emit(args, payload, rows, SCAN_COLUMNS)
    return 0


COMMANDS = {
    "cf": cmd_cf,
    "ostrowski": cmd_ostrowski,
    "word": cmd_word,
    "rect": cmd_rect,
    "balanced": cmd_balanced,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "discrepancy": cmd_discrepancy,
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", default="golden", help="golden | sqrt2m1 | pi4 | cf:a1,a2,...")
    common.add_argument("--format", choices=("json", "tsv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--i-max", type=_positive, default=DEFAULT_I_MAX)
    common.add_argument("--depth", type=_positive, default=None, help="use only the first DEPTH quotients")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="sturmrect", description="Balanced rectangles in Sturmian words.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("cf", parents=[common], help="convergent table")
    p = sub.add_parser("ostrowski", parents=[common], help="Ostrowski digits")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("value", help="an integer, or comma-separated digits (lowest index first)")
    p = sub.add_parser("word", parents=[common], help="prefix of the Sturmian word")
    p.add_argument("--len", type=int, required=True)
    for name, text in (("rect", "rectangle weights over a window"), ("balanced", "digit-based verdict"),
                       ("oracle", "interval-balance oracle")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("-m", type=_positive, required=True)
        p.add_argument("-n", type=_positive, required=True)
        if name == "rect":
            p.add_argument("--skip-undecidable", action="store_true")
    for name, text in (("verify", "theorem vs oracle sweep"), ("scan", "verdict matrix")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--max-n", type=int, required=True)
        if name == "verify":
            p.add_argument("--sample", type=int, default=0, help="check a seeded random subset of pairs")
    p = sub.add_parser("discrepancy", parents=[common], help="minimal-discrepancy check")
    p.add_argument("-N", type=_positive, required=True)
    gx = p.add_mutually_exclusive_group(required=True)
    gx.add_argument("--x", help="rational left endpoint p/q")
    gx.add_argument("--x-n", type=int, help="left endpoint {k alpha}")
    gd = p.add_mutually_exclusive_group(required=True)
    gd.add_argument("--d", help="rational length p/q")
    gd.add_argument("--d-n", type=int, help="length {k alpha}")
    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    args = build_parser().parse_args(None if argv is None else list(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        cf = parse_alpha(args.alpha)
        if args.depth is not None and args.command != "cf":
            cf = new_cf(cf.partial_quotients[: args.depth])
        return COMMANDS[args.command](args, cf)
    except (SturmRectError, ValueError, ArithmeticError, IndexError) as exc:
        err = exc.to_json() if isinstance(exc, SturmRectError) else {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
