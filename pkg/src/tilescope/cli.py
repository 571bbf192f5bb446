"""Command-line surface: analyze, search, render.

Exit codes: 0 for a completed analysis (tile or not), 2 for parse or
validation errors, 3 when chain stabilization is inconclusive within the
search bound.  ``search`` emits one JSON line per digit set followed by a
summary line; the worker count comes from --workers, overridden by the
``TILESCOPE_WORKERS`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Any, TextIO

from .core import DigitSet, expand
from .geometry import approx, intervals_json, tower_svg
from .report import (
    EXIT_OK,
    EXIT_USAGE,
    analyze_digit_set,
    render_text,
    report_to_json,
)
from .skewform import skew_decompose
from .tiling import is_tile

MAX_SEARCH_SETS = 500_000


def _parse_digits(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise ValueError(f"digits must be comma-separated integers, got {text!r}")


def enumerate_normalized(base: int, bound: int) -> list[tuple[int, ...]]:
    """All normalized digit sets in [0, bound]: 0 included, gcd 1, sorted."""
    if bound < base - 1:
        return []
    out = []
    for rest in combinations(range(1, bound + 1), base - 1):
        if math.gcd(*rest) == 1:
            out.append((0,) + rest)
    return out


def _search_record(args: tuple[tuple[int, ...], int, int]) -> dict[str, Any]:
    digits, base, m_max = args
    d = DigitSet(base, digits)
    tile, witness = is_tile(d)
    m_found = None
    for m in range(1, m_max + 1):
        level = expand(d, m)
        if level.collisions:
            break
        if skew_decompose(level.values, base**m, 1) is not None:
            m_found = m
            break
    if tile:
        status = "tile" if m_found is not None else "inconclusive"
    else:
        status = "non_tile"
    return {
        "digits": list(digits),
        "tile": tile,
        "m": m_found,
        "witness_level": None if witness is None else witness.level,
        "status": status,
        "violation": (not tile) and m_found is not None,
    }


def run_search(
    base: int,
    bound: int,
    m_max: int,
    workers: int,
    max_base: int = 12,
    max_bound: int = 64,
) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    if base > max_base:
        raise ValueError(f"search base {base} exceeds the default cap {max_base}")
    if bound > max_bound:
        raise ValueError(f"search bound {bound} exceeds the default cap {max_bound}")
    corpus = enumerate_normalized(base, bound)
    if len(corpus) > MAX_SEARCH_SETS:
        raise ValueError(
            f"{len(corpus)} digit sets exceed the search cap {MAX_SEARCH_SETS}; "
            f"lower the bound"
        )
    jobs = [(digits, base, m_max) for digits in corpus]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(
                pool.map(_search_record, jobs, chunksize=max(len(jobs) // (4 * workers), 1))
            )
    else:
        records = [_search_record(job) for job in jobs]
    tiles = [r for r in records if r["status"] == "tile"]
    summary = {
        "command": "search",
        "base": base,
        "bound": bound,
        "m_max": m_max,
        "count": len(records),
        "tiles": len(tiles),
        "non_tiles": sum(r["status"] == "non_tile" for r in records),
        "inconclusive": sum(r["status"] == "inconclusive" for r in records),
        "max_m": max((r["m"] for r in tiles), default=None),
        "violations": [r["digits"] for r in records if r["violation"]],
    }
    return records, summary


def _cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    report, code = analyze_digit_set(
        args.base,
        _parse_digits(args.digits),
        m_max=args.mmax,
        k_max=args.kmax,
        strict_t2=args.strict_t2,
    )
    out.write(report_to_json(report) if args.json else render_text(report))
    return code


def _cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    workers = int(os.environ.get("TILESCOPE_WORKERS", args.workers))
    records, summary = run_search(args.base, args.bound, args.mmax, workers)
    sink = open(args.out, "w") if args.out else out
    try:
        if args.json:
            for record in records:
                sink.write(json.dumps(record) + "\n")
            sink.write(json.dumps({"summary": summary}) + "\n")
        else:
            sink.write(
                f"base {summary['base']}, bound {summary['bound']}: "
                f"{summary['count']} sets, {summary['tiles']} tiles, "
                f"{summary['non_tiles']} non-tiles, "
                f"{summary['inconclusive']} inconclusive\n"
            )
            sink.write(f"max stage among tiles: {summary['max_m']}\n")
            sink.write(f"violations: {summary['violations']}\n")
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


def _cmd_render(args: argparse.Namespace, out: TextIO) -> int:
    d = DigitSet(args.base, tuple(_parse_digits(args.digits)))
    unions = [approx(d, k) for k in range(1, args.k + 1)]
    if args.format == "svg":
        payload = tower_svg(d, unions, width=args.width, height=args.height)
    else:
        payload = json.dumps(intervals_json(d, unions), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        out.write(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilescope",
        description="Exact analysis of integer digit sets: tiling, "
        "decomposition, and spectral structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full analysis of one digit set")
    p_analyze.add_argument("-b", "--base", type=int, required=True)
    p_analyze.add_argument(
        "-d", "--digits", required=True, help="comma-separated integers"
    )
    p_analyze.add_argument("--mmax", type=int, default=12)
    p_analyze.add_argument("--kmax", type=int, default=None)
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument(
        "--strict-t2",
        action="store_true",
        help="gate spectra on the literal (T2) reading as well",
    )
    p_analyze.set_defaults(func=_cmd_analyze)

    p_search = sub.add_parser(
        "search", help="classify every normalized digit set up to a bound"
    )
    p_search.add_argument("-b", "--base", type=int, required=True)
    p_search.add_argument("--bound", type=int, required=True)
    p_search.add_argument("--mmax", type=int, default=6)
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--json", action="store_true")
    p_search.add_argument("--out", default=None)
    p_search.set_defaults(func=_cmd_search)

    p_render = sub.add_parser(
        "render", help="emit the interval tower as SVG or JSON"
    )
    p_render.add_argument("-b", "--base", type=int, required=True)
    p_render.add_argument("-d", "--digits", required=True)
    p_render.add_argument("-k", type=int, default=4)
    p_render.add_argument("--format", choices=("svg", "json"), default="svg")
    p_render.add_argument("--out", default=None)
    p_render.add_argument("--width", type=int, default=800)
    p_render.add_argument("--height", type=int, default=400)
    p_render.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
