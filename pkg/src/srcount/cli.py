"""Command-line front end.

Texts are read as raw bytes; labels are whitespace-separated decimal
integers, one per text byte. Every command prints one decimal count per
query. Exit codes: 0 success, 2 usage error, 3 input validation error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import oracle
from .applications import (
    AlignedIndex, GapSpec, GappedIndex, IntervalSet, intervals_build,
    intervals_count, prsc_build, prsc_count,
)
from .errors import InvalidInputError
from .index import IndexConfig, LabeledText, SrcIndex

EXIT_USAGE = 2
EXIT_INVALID = 3


class InputError(Exception):
    """Bad file contents or arguments detected after parsing."""


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _read_ints(path: str) -> list[int]:
    out = []
    for k, tok in enumerate(_read_bytes(path).split(), 1):
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(f"{path}: token {k} is not an integer: {tok[:20]!r}") from None
    return out


def _read_text(args) -> bytes:
    text = _read_bytes(args.text)
    if args.alphabet is not None:
        allowed = set(os.fsencode(args.alphabet))
        bad = sorted(set(text) - allowed)
        if bad:
            raise InputError(f"{args.text}: byte {bad[0]:#04x} outside the declared alphabet")
    if not text:
        raise InputError(f"{args.text}: text is empty")
    return text


def _labeled_text(args) -> LabeledText:
    text = _read_text(args)
    labels = _read_ints(args.labels)
    if len(labels) != len(text):
        raise InputError(f"{len(labels)} labels for {len(text)} text bytes")
    return LabeledText(text, labels, args.universe)


def _pattern(s: str) -> bytes:
    p = os.fsencode(s)
    if not p:
        raise InputError("pattern must be non-empty")
    return p


def _config(args) -> IndexConfig:
    return IndexConfig(tau=args.tau)


def cmd_count(args) -> list[int]:
    lt = _labeled_text(args)
    a, b = args.range
    pat = _pattern(args.pattern)
    if args.oracle:
        _check_range(lt, a, b)
        return [oracle.naive_count(lt, pat, a, b)]
    return [SrcIndex(lt, _config(args)).count(pat, a, b)]


def _check_range(lt: LabeledText, a: int, b: int) -> None:
    for x in (a, b):
        if not 0 <= x <= lt.u:
            raise InputError(f"label {x} outside [0, {lt.u}]")


def _parse_queries(path: str) -> list[tuple[bytes, int, int]]:
    queries = []
    for lineno, line in enumerate(_read_bytes(path).splitlines(), 1):
        parts = line.split()
        try:
            if len(parts) != 3:
                raise ValueError
            queries.append((parts[0], int(parts[1]), int(parts[2])))
        except ValueError:
            raise InputError(f"{path}:{lineno}: expected 'PATTERN A B'") from None
    return queries


def cmd_batch(args) -> list[int]:
    lt = _labeled_text(args)
    queries = _parse_queries(args.queries)
    for a, b in ((q[1], q[2]) for q in queries):
        _check_range(lt, a, b)
    if args.oracle:
        return [oracle.naive_count(lt, p, a, b) for p, a, b in queries]
    idx = SrcIndex(lt, _config(args))
    if args.threads > 1:
        with ThreadPoolExecutor(args.threads) as pool:
            return list(pool.map(lambda q: idx.count(*q), queries))
    return [idx.count(p, a, b) for p, a, b in queries]


def _read_intervals(path: str) -> IntervalSet:
    spans = []
    for lineno, line in enumerate(_read_bytes(path).splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        try:
            s, e = (int(x) for x in parts)
        except ValueError:
            raise InputError(f"{path}:{lineno}: expected 'START END'") from None
        spans.append((s, e))
    return IntervalSet(spans)


def cmd_app(args) -> list[int]:
    text = _read_text(args)
    cfg = _config(args)
    if args.app == "prsc":
        pat = _pattern(args.pattern)
        if args.oracle:
            if not 1 <= args.i <= args.j <= len(text):
                raise InputError(f"bad position interval [{args.i}, {args.j}]")
            return [oracle.naive_prsc(text, pat, args.i, args.j)]
        return [prsc_count(prsc_build(text, cfg), pat, args.i, args.j)]
    if args.app == "intervals":
        pat = _pattern(args.pattern)
        pi = _read_intervals(args.intervals)
        pi.check(len(text))
        if args.oracle:
            if args.i < 1 or args.j > len(text):
                raise InputError(f"bad position interval [{args.i}, {args.j}]")
            return [oracle.naive_intervals(text, pi.intervals, pat, args.i, args.j)]
        return [intervals_count(intervals_build(text, pi, cfg), pat, args.i, args.j)]
    if args.app == "gaps":
        gap = GapSpec(args.d)
        p1, p2 = _pattern(args.p1), _pattern(args.p2)
        if args.oracle:
            return [oracle.naive_gaps(text, gap.d, p1, p2)]
        return [GappedIndex(text, gap, cfg).count(p1, p2)]
    # aligned
    text2 = _read_bytes(args.text2)
    if not text2:
        raise InputError(f"{args.text2}: text is empty")
    p1, p2 = _pattern(args.p1), _pattern(args.p2)
    if args.oracle:
        return [oracle.naive_aligned(text, text2, p1, p2)]
    return [AlignedIndex(text, text2, config=cfg).count(p1, p2)]


def _common(p: argparse.ArgumentParser, labels: bool = True) -> None:
    p.add_argument("--text", required=True, metavar="FILE")
    if labels:
        p.add_argument("--labels", required=True, metavar="FILE")
        p.add_argument("--universe", type=int, default=None, metavar="U",
                       help="label universe bound (default: largest label)")
    p.add_argument("--alphabet", default=None, metavar="STR",
                   help="reject text bytes outside these characters")
    p.add_argument("--tau", type=int, default=None, metavar="N",
                   help="string-depth cutoff for the node-string descent")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srcount",
        description="Substring range counting over labeled texts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count one pattern in a label range")
    _common(p)
    p.add_argument("--pattern", required=True)
    p.add_argument("--range", nargs=2, type=int, required=True, metavar=("A", "B"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("batch", help="answer 'PATTERN A B' lines from a file")
    _common(p)
    p.add_argument("--queries", required=True, metavar="FILE")
    p.add_argument("--threads", type=int, default=1, metavar="N")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("app", help="position-restricted, intervals, gaps, aligned")
    apps = p.add_subparsers(dest="app", required=True)
    a = apps.add_parser("prsc", help="occurrences starting in [i, j]")
    _common(a, labels=False)
    a.add_argument("--pattern", required=True)
    a.add_argument("--i", type=int, required=True)
    a.add_argument("--j", type=int, required=True)
    a = apps.add_parser("intervals", help="occurrences in [i, j] inside given intervals")
    _common(a, labels=False)
    a.add_argument("--intervals", required=True, metavar="FILE")
    a.add_argument("--pattern", required=True)
    a.add_argument("--i", type=int, required=True)
    a.add_argument("--j", type=int, required=True)
    a = apps.add_parser("gaps", help="P1, then d characters, then P2")
    _common(a, labels=False)
    a.add_argument("--d", type=int, required=True)
    a.add_argument("--p1", required=True)
    a.add_argument("--p2", required=True)
    a = apps.add_parser("aligned", help="P1 in the first text aligned with P2 in the second")
    _common(a, labels=False)
    a.add_argument("--text2", required=True, metavar="FILE")
    a.add_argument("--p1", required=True)
    a.add_argument("--p2", required=True)
    p.set_defaults(func=cmd_app)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("srcount: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        results = args.func(args)
    except (InputError, InvalidInputError) as exc:
        print(f"srcount: {exc}", file=sys.stderr)
        return EXIT_INVALID
    out = sys.stdout
    for r in results:
        out.write(f"{r}\n")
    out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
