"""Command line interface.

Exit status: 0 when the property holds / the artifact was produced,
1 when it does not hold, 2 on any error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .decision import is_outerplanar, is_outerplanar_naive, is_planar, is_planar_naive, planarity_report
from .embedding import (
    embedding_from_json,
    embedding_to_json,
    outerplanar_embedding,
    planar_embedding,
    verify_embedding,
)
from .formats import RunConfig, embedding_to_svg, parse_instance, random_instance, serialize_instance
from .ladder import LadderError
from .oracle import DEFAULT_BUDGET, BudgetExceeded, oracle_is_outerplanar, oracle_is_planar, to_simple_graph
from .rng import SplitMix64
from .witness import (
    certificate_to_json,
    certificate_to_text,
    extract_k33_witness,
    extract_outerplanar_witness,
    verify_certificate,
)

BENCH_HEADER = ["m", "n", "k", "t_indexed_ns", "t_naive_ns", "t_oracle_ns", "verdict"]


class CliError(Exception):
    pass


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def cmd_check(args) -> int:
    g = _load(args.file)
    if args.outer:
        report = is_outerplanar(g)
    else:
        report = planarity_report(g) if args.report else is_planar(g)
    print(report.describe())
    if args.report:
        flags = report.per_edge_flags if report.per_edge_flags is not None else planarity_report(g).per_edge_flags
        print("# l r up_down up_up down_up down_down")
        for e, fl in flags.items():
            print(e.l, e.r, *(int(f) for f in fl))
    if args.oracle:
        h = to_simple_graph(g)
        oracle = oracle_is_outerplanar(h, args.budget) if args.outer else oracle_is_planar(h, args.budget)
        agree = oracle == report.verdict
        print(f"oracle: {'yes' if oracle else 'no'} ({'agrees' if agree else 'DISAGREES'})")
        if not agree:
            return 2
    return 0 if report.verdict else 1


def cmd_witness(args) -> int:
    g = _load(args.file)
    cert = extract_outerplanar_witness(g) if args.outer else extract_k33_witness(g)
    if not verify_certificate(g, cert):
        raise CliError("internal error: extracted certificate failed verification")
    if args.format == "json":
        _emit(json.dumps(certificate_to_json(cert), indent=2) + "\n", args.output)
    else:
        _emit(certificate_to_text(cert), args.output)
    return 0


def cmd_embed(args) -> int:
    g = _load(args.file)
    emb = outerplanar_embedding(g) if args.outer else planar_embedding(g)
    if not verify_embedding(g, emb, method="sweep"):
        raise CliError("internal error: constructed embedding failed verification")
    if args.format == "svg":
        _emit(embedding_to_svg(emb), args.output)
    else:
        _emit(json.dumps(embedding_to_json(emb)) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    g = _load(args.file)
    try:
        emb = embedding_from_json(Path(args.embedding).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {args.embedding}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"malformed embedding file: {exc}") from None
    ok = verify_embedding(g, emb, method=args.method)
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_random(args) -> int:
    g = random_instance(RunConfig(seed=args.seed), args.m, args.n, args.k)
    _emit(serialize_instance(g), args.output)
    return 0


def _parse_size(text: str) -> tuple[int, int, int]:
    try:
        m, n, k = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise CliError(f"bad size {text!r}, expected MxNxK") from None
    return m, n, k


def cmd_bench(args) -> int:
    sizes = [_parse_size(s) for s in args.sizes]
    seeds = SplitMix64(args.seed)
    rows = [BENCH_HEADER]
    for m, n, k in sizes:
        g = random_instance(RunConfig(seed=seeds.next_u64()), m, n, k)
        t0 = time.perf_counter_ns()
        verdict = is_planar(g).verdict
        t_indexed = time.perf_counter_ns() - t0
        t_naive: int | str = ""
        if k <= args.naive_max_k:
            t0 = time.perf_counter_ns()
            naive = is_planar_naive(g).verdict
            t_naive = time.perf_counter_ns() - t0
            if naive != verdict:
                raise CliError(f"indexed and naive disagree on {m}x{n}x{k}")
        t_oracle: int | str = ""
        if m + n <= args.oracle_max_vertices:
            t0 = time.perf_counter_ns()
            try:
                oracle_is_planar(to_simple_graph(g), args.budget)
                t_oracle = time.perf_counter_ns() - t0
            except BudgetExceeded:
                pass
        rows.append([m, n, k, t_indexed, t_naive, t_oracle, "planar" if verdict else "nonplanar"])
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    _emit(buf.getvalue(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genladder", description="Planarity of generalized ladder graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide planarity (or outerplanarity with --outer)")
    c.add_argument("file")
    c.add_argument("--outer", action="store_true")
    c.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    c.add_argument("--report", action="store_true", help="print per-edge quadrant flags")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.set_defaults(func=cmd_check)

    w = sub.add_parser("witness", help="emit a verified forbidden-subdivision certificate")
    w.add_argument("file")
    w.add_argument("--outer", action="store_true")
    w.add_argument("--format", choices=["text", "json"], default="json")
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_witness)

    e = sub.add_parser("embed", help="emit a verified integer embedding")
    e.add_argument("file")
    e.add_argument("--outer", action="store_true")
    e.add_argument("--format", choices=["json", "svg"], default="json")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_embed)

    v = sub.add_parser("verify", help="check an embedding JSON file against an instance")
    v.add_argument("file")
    v.add_argument("embedding")
    v.add_argument("--method", choices=["quadratic", "sweep"], default="quadratic")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("random", help="write a seeded random instance")
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("-m", type=int, required=True)
    r.add_argument("-n", type=int, required=True)
    r.add_argument("-k", type=int, required=True)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_random)

    b = sub.add_parser("bench", help="time indexed vs naive decision (CSV)")
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--sizes", nargs="+", required=True, metavar="MxNxK")
    b.add_argument("--naive-max-k", type=int, default=4000)
    b.add_argument("--oracle-max-vertices", type=int, default=14)
    b.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (LadderError, CliError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # malformed input must never produce a traceback
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
