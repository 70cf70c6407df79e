"""Command-line interface.

Exit status: 0 success / valid, 1 no solution / invalid, 2 usage or input error.
Configurations are exchanged as JSON lines ``{"n": ..., "cols": [...]}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Optional, Sequence

from . import exact, pipeline, sampler, weighting
from .config import Configuration, conflicts, read_jsonl, slater_is_valid, to_slater

OK, NOT_FOUND, USAGE = 0, 1, 2


def render(c: Configuration) -> str:
    """ASCII board with the reflecting strip on top; queens are ``Q``."""
    n = c.n
    width = len(str(n))
    pad = " " * (width + 3)
    lines = [pad + " ".join(str(k % 10) for k in range(1, n + 1)) + "   <- reflecting strip"]
    lines.append(pad[:-1] + "+" + "-" * (2 * n - 1) + "+")
    for i, j in c.squares():
        cells = ["Q" if col == j else "." for col in range(1, n + 1)]
        lines.append(f"{i:>{width}} | " + " ".join(cells))
    if n > 9:
        lines.append(f"(strip slot k is labelled k mod 10; slots 1..{n} left to right)")
    return "\n".join(lines)


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _open_input(path: str) -> IO[str]:
    if path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def _load(path: str) -> list[Configuration]:
    with _open_input(path) as fh:
        return [c for _, c in read_jsonl(fh)]


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not sep or a > b:
        raise argparse.ArgumentTypeError(f"expected A..B with A <= B, got {text!r}")
    return a, b


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def cmd_solve(args) -> int:
    if args.method == "exact":
        found = exact.enumerate_solutions(
            args.n, visitor=lambda c: print(c.to_json()), limit=args.limit, workers=args.workers
        )
        return OK if found else NOT_FOUND
    res = pipeline.build_configuration(
        args.n, seed=args.seed, max_iters=args.max_iters, time_limit=args.time_limit
    )
    if res.configuration is None:
        print(json.dumps(res.diagnostics()), file=sys.stderr)
        return NOT_FOUND
    print(res.configuration.to_json())
    return OK


def cmd_count(args) -> int:
    total = exact.count(args.n, workers=args.workers)
    if args.json:
        _emit({"n": args.n, "report": {"count": total}})
    else:
        print(f"n={args.n}: {total} reflecting configurations")
    return OK if total else NOT_FOUND


def cmd_verify(args) -> int:
    status = OK
    for c in _load(args.input):
        found = conflicts(c)
        if found:
            status = NOT_FOUND
        if args.json:
            report = {
                "valid": not found,
                "conflicts": [[a, b, str(line)] for a, b, line in found],
            }
            _emit({"n": c.n, "report": report})
        elif not found:
            print(f"n={c.n} cols={list(c.cols)}: valid")
        else:
            print(f"n={c.n} cols={list(c.cols)}: {len(found)} conflict(s)")
            for a, b, line in found:
                print(f"  rows {a} and {b} share {line}")
    return status


def cmd_slater(args) -> int:
    if args.from_config:
        configs = _load(args.from_config)
    else:
        res = pipeline.build_configuration(args.n, seed=args.seed)
        if res.configuration is None:
            print(f"n={args.n}: no configuration found", file=sys.stderr)
            return NOT_FOUND
        configs = [res.configuration]
    status = OK
    for c in configs:
        p = to_slater(c)
        valid = slater_is_valid(p)
        status = status if valid else NOT_FOUND
        if args.json:
            _emit({"n": c.n, "report": {"pairs": p.pairs(), "valid": valid}})
        else:
            pairs = ",".join(f"({i},{a})" for i, a in p.pairs())
            print(f"n={c.n} pairs {pairs}: {'valid' if valid else 'invalid'}")
    return status


def cmd_weights(args) -> int:
    lo, hi = args.n_range if args.n_range else (args.n, args.n)
    failed = []
    for n in range(lo, hi + 1):
        rep = weighting.verify_bounds(n)
        closed = weighting.closed_form_report(n) if n >= 6 else None
        ok = rep.passed and (closed is None or closed.passed)
        if not ok:
            failed.append(n)
        if args.json:
            report = rep.to_dict()
            if closed is not None:
                report["closed_form"] = closed.to_dict()
            _emit({"n": n, "report": report})
        elif lo == hi:
            print(
                f"n={n}: rows/cols in [{rep.min_row_col}, {rep.max_row_col}], "
                f"max ND {rep.max_nd} at {rep.max_nd_line}, max RD {rep.max_rd} at {rep.max_rd_line}"
            )
    if not args.json:
        if failed:
            print(f"conditions fail for n in {failed[:20]}{' ...' if len(failed) > 20 else ''}")
        else:
            print("all conditions hold")
    return NOT_FOUND if failed else OK


def cmd_sample(args) -> int:
    s = sampler.sample_subset(args.n, args.seed)
    stats = sampler.check_subset(s, ab_trials=args.trials, seed=args.seed)
    if args.json:
        _emit({"n": args.n, "report": stats.to_dict()})
    else:
        lo, hi = sampler.row_window(args.n)
        print(f"n={args.n} seed={args.seed}: |S|={stats.size} (expected {float(sampler.expected_size(args.n)):.1f})")
        print(f"  rows/cols: degrees {stats.row_col_extremes}, window ~[{lo:.1f}, {hi:.1f}] -> {_word(stats.rows_cols_ok)}")
        print(
            f"  diagonals: worst {stats.worst_diagonal[0]} with {stats.worst_diagonal[1]}, "
            f"limit {float(stats.diagonal_limit):.1f} -> {_word(stats.diagonals_ok)}"
        )
        if stats.density_ok is not None:
            print(
                f"  A x B density: min {stats.ab_min_count} over {stats.ab_checked} pairs of size {stats.ab_size}, "
                f"need {float(stats.density_threshold):.1f} -> {_word(stats.density_ok)}"
            )
    ok = stats.rows_cols_ok and stats.diagonals_ok and stats.density_ok is not False
    return OK if ok else NOT_FOUND


def _word(flag: bool) -> str:
    return "pass" if flag else "FAIL"


def cmd_pipeline(args) -> int:
    res = pipeline.build_configuration(
        args.n, seed=args.seed, max_iters=args.max_iters, time_limit=args.time_limit,
        strict_gate=args.strict_gate,
    )
    report = res.diagnostics()
    if res.configuration is not None:
        report["cols"] = list(res.configuration.cols)
    if args.json:
        _emit({"n": args.n, "report": report})
    else:
        state = "found" if res.found else "not found"
        print(
            f"n={args.n} seed={args.seed}: {state} via {res.method} "
            f"({res.resamples} resamples, {res.restarts} restarts, {res.iterations} steps, {res.elapsed:.2f}s)"
        )
        if res.gate_failures:
            print(f"  sample properties not met: {', '.join(res.gate_failures)}")
        if res.configuration is not None:
            print(res.configuration.to_json())
    return OK if res.found else NOT_FOUND


def cmd_render(args) -> int:
    for c in _load(args.input):
        print(render(c))
        print()
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reflqueens", description="Reflecting n-queens toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    def budget(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-iters", type=_positive, default=200_000, help="matcher step budget")
        p.add_argument("--time-limit", type=float, default=60.0, help="wall-clock cap in seconds")

    p = add("solve", cmd_solve, "print configurations as JSON lines")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", choices=("exact", "heuristic"), default="exact")
    p.add_argument("--limit", type=_positive, default=None)
    p.add_argument("--workers", type=_positive, default=1)
    budget(p)

    p = add("count", cmd_count, "count configurations exhaustively")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--json", action="store_true")

    p = add("verify", cmd_verify, "check configurations from a JSON-lines file")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--json", action="store_true")

    p = add("slater", cmd_slater, "show the Slater pairing of a configuration")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive)
    g.add_argument("--from-config", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = add("weights", cmd_weights, "verify the weighting bounds exactly")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive)
    g.add_argument("--n-range", type=_parse_range, metavar="A..B")
    p.add_argument("--json", action="store_true")

    p = add("sample", cmd_sample, "sample a weighted subset and audit it")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20, help="random A x B pairs to test")
    p.add_argument("--json", action="store_true")

    p = add("pipeline", cmd_pipeline, "run the sample -> colour -> match construction")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--strict-gate", action="store_true", help="also reject samples with heavy diagonals")
    p.add_argument("--json", action="store_true")
    budget(p)

    p = add("render", cmd_render, "draw configurations as ASCII boards")
    p.add_argument("input", nargs="?", default="-")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
