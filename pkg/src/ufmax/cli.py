"""Command-line front end: bound / sieve / split / solve / verify / analyze.

All structured output is JSON on stdout (or --out FILE for solve); every
persisted result embeds a run manifest (version, timestamps, thread count,
argument echo, file digests) so runs are reproducible and auditable.
Exit codes: 0 success, 1 verification failure, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .analyzer import analyze
from .arith import format_rational, parse_rational
from .bounds import harmonic_window
from .decomposer import SplitRequest, k_term_splits, two_term_splits
from .sieve import sieve_fixed_point
from .solver import SearchSpec, solve, verify_solution


def _manifest(args: argparse.Namespace, threads: int | None = None) -> dict:
    return {
        "tool": "ufmax",
        "version": __version__,
        "created_utc": datetime.now(timezone.utc).isoformat(),
        "threads": threads,
        "args": {k: v for k, v in vars(args).items() if k != "func"},
    }


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            h.update(block)
    return h.hexdigest()


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"range must be LO:HI, got {text!r}")
    return int(lo), int(hi)


def _target(args) -> Fraction:
    t = parse_rational(args.target)
    if t <= 0:
        raise ValueError("target must be positive")
    return t


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def _cmd_bound(args) -> int:
    report = harmonic_window(args.max_den, _target(args))
    _emit({"manifest": _manifest(args), **report.to_json()}, None)
    return 0


def _cmd_sieve(args) -> int:
    lo, hi = _parse_range(args.range)
    report = sieve_fixed_point(lo, hi, _target(args))
    _emit({"manifest": _manifest(args), **report.to_json()}, None)
    return 0


def _cmd_split(args) -> int:
    req = SplitRequest(n=args.unit, terms=args.terms, cap=args.cap)
    if args.terms == 2 and args.cap == 0:
        splits = two_term_splits(req)
    else:
        splits = k_term_splits(req)
    if args.format == "tsv":
        for tup in splits:
            print("\t".join(map(str, tup)))
    else:
        _emit({"manifest": _manifest(args), "unit": args.unit, "terms": args.terms,
               "cap": args.cap, "splits": [list(t) for t in splits]}, None)
    return 0


def _threads(args) -> int:
    env = os.environ.get("UFMAX_THREADS")
    if env is not None:
        return int(env)
    return args.threads


def _cmd_solve(args) -> int:
    lo, hi = _parse_range(args.range)
    if args.max_terms:
        k = None
    elif args.terms is not None:
        k = args.terms
    else:
        raise ValueError("one of --terms or --max-terms is required")
    threads = _threads(args)
    spec = SearchSpec(lo=lo, hi=hi, k=k, target=_target(args), mode=args.mode)
    result = solve(spec, threads=threads)
    payload = {"manifest": _manifest(args, threads), **result.to_json()}
    if args.format == "tsv":
        lines = "\n".join("\t".join(map(str, s)) for s in result.solutions)
        if args.out:
            with open(args.out, "w") as f:
                f.write(lines + "\n")
        else:
            print(lines)
        return 0
    _emit(payload, args.out)
    if args.out:
        digest = _sha256(args.out)
        print(f"wrote {args.out} ({len(result.solutions)} solutions, sha256 {digest})",
              file=sys.stderr)
    return 0


def _load_solutions(path: str) -> tuple[list[tuple[int, ...]], Fraction, dict]:
    with open(path) as f:
        data = json.load(f)
    sols = [tuple(s) for s in data["solutions"]]
    target = parse_rational(data.get("spec", {}).get("target", "1/1"))
    return sols, target, data


def _cmd_verify(args) -> int:
    sols, target, _ = _load_solutions(args.solutions)
    if args.target is not None:
        target = parse_rational(args.target)
    verdicts = []
    ok_all = True
    for sol in sols:
        v = verify_solution(sol, target)
        ok_all &= v.ok
        verdicts.append({"denominators": list(sol), "ok": v.ok, "reason": v.reason})
    _emit({"manifest": _manifest(args), "input_sha256": _sha256(args.solutions),
           "target": format_rational(target), "all_ok": ok_all, "verdicts": verdicts}, None)
    return 0 if ok_all else 1


def _cmd_analyze(args) -> int:
    sols, _, _ = _load_solutions(args.solutions)
    if not sols:
        raise ValueError("no solutions to analyze")
    payload = analyze(sols)
    _emit({"manifest": _manifest(args), "input_sha256": _sha256(args.solutions), **payload}, None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ufmax",
        description="Exact search and analysis of bounded distinct unit-fraction sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="harmonic suffix-window term-count bound")
    p.add_argument("--max-den", type=int, required=True)
    p.add_argument("--target", default="1/1")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("sieve", help="p-adic residue exclusion sieve")
    p.add_argument("--range", required=True, metavar="LO:HI")
    p.add_argument("--target", default="1/1")
    p.set_defaults(func=_cmd_sieve)

    p = sub.add_parser("split", help="decompose 1/N into K distinct unit fractions")
    p.add_argument("--unit", type=int, required=True, metavar="N")
    p.add_argument("--terms", type=int, default=2, metavar="K")
    p.add_argument("--cap", type=int, default=0)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("solve", help="exhaustive search for exact sums")
    p.add_argument("--range", required=True, metavar="LO:HI")
    p.add_argument("--terms", type=int, default=None, metavar="K")
    p.add_argument("--max-terms", action="store_true",
                   help="find the largest feasible term count")
    p.add_argument("--target", default="1/1")
    p.add_argument("--mode", choices=("dfs", "complement"), default="dfs")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, metavar="FILE")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="re-check solutions with independent arithmetic")
    p.add_argument("--solutions", required=True, metavar="FILE")
    p.add_argument("--target", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="common core, frequencies, swap graph")
    p.add_argument("--solutions", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"ufmax: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
