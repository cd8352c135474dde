"""Command-line entry point: ``chordless {enumerate,oracle,gen,stats}``.

Exit status is 0 on success, 1 on a usage error, 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import sys
import time
from pathlib import Path

from .enumeration import ALGORITHMS, Enumeration
from .foodweb import DIRECTIONS, FoodWeb, niche_overlap
from .generators import from_spec
from .graph import Graph, GraphError, drop_isolated
from .io import ParseError, format_cycle, format_edgelist, parse_dimacs, parse_edgelist
from .labeling import degree_labeling
from .oracle import ORACLE_MAX_VERTICES, oracle_enumerate
from .report import RunReport
from .seeding import triplets

log = logging.getLogger("chordless")

EXIT_OK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_input(p):
    src = p.add_argument_group("input")
    src.add_argument("--input", metavar="PATH", help="graph file ('-' for stdin)")
    src.add_argument("--generator", metavar="SPEC", help="e.g. cycle:100, grid:5,6, kbip:8,8")
    src.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    src.add_argument("--niche-overlap", choices=DIRECTIONS, metavar="DIRECTION",
                     help="read --input as a food web with arcs in DIRECTION "
                          "(predator-to-prey | prey-to-predator) and use its niche-overlap graph")
    src.add_argument("--drop-isolated", action="store_true", help="remove degree-0 vertices")


def _add_output(p):
    p.add_argument("--output", metavar="PATH", help="write cycles here instead of stdout")
    p.add_argument("--stats-json", metavar="PATH", help="write the run report as JSON")
    p.add_argument("--include-triangles", action="store_true", help="same as --min-length 3")
    p.add_argument("--min-length", type=int, choices=(3, 4), default=4)
    p.add_argument("--limit", type=int, metavar="N", help="stop after N cycles")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chordless", description="Enumerate chordless cycles of a graph.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list or count chordless cycles")
    _add_input(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="dfs")
    p.add_argument("--count-only", action="store_true", help="print the report, not the cycles")
    _add_output(p)

    p = sub.add_parser("oracle", help=f"brute-force enumeration (n <= {ORACLE_MAX_VERTICES})")
    _add_input(p)
    _add_output(p)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--generator", metavar="SPEC", required=True)
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("stats", help="run an enumeration and print only the report")
    _add_input(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="dfs")
    p.add_argument("--stats-json", metavar="PATH")
    return parser


def load_graph(args) -> Graph:
    if (args.input is None) == (args.generator is None):
        raise UsageError("exactly one of --input or --generator is required")
    if args.generator is not None:
        if args.niche_overlap:
            raise UsageError("--niche-overlap applies to --input food webs only")
        try:
            g = from_spec(args.generator)
        except (ValueError, GraphError) as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.niche_overlap and args.format != "edgelist":
            raise UsageError("--niche-overlap requires --format edgelist")
        try:
            text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        try:
            if args.niche_overlap:
                g = niche_overlap(FoodWeb.from_text(text), args.niche_overlap)
            elif args.format == "dimacs":
                g = parse_dimacs(text)
            else:
                g = parse_edgelist(text)
        except (ParseError, GraphError, ValueError) as exc:
            raise InputError(f"{args.input}: {exc}") from None
    if args.drop_isolated:
        g = drop_isolated(g)
    return g


@contextlib.contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _write_report(report: RunReport, path):
    if path:
        Path(path).write_text(report.to_json() + "\n")


def _cmd_enumerate(args) -> int:
    g = load_graph(args)
    run = Enumeration(g, algorithm=args.algorithm)
    include_tri = args.include_triangles or args.min_length == 3
    if args.count_only:
        stats = run.run(None, include_triangles=include_tri, limit=args.limit)
    else:
        with _open_out(args.output) as out:
            stats = run.run(lambda c: out.write(format_cycle(g, c) + "\n"),
                            include_triangles=include_tri, limit=args.limit)
    report = RunReport.from_stats(g, stats, args.algorithm)
    _write_report(report, args.stats_json)
    if args.count_only:
        print(report.to_json())
    log.info("holes=%d triangles=%d in %.1f ms", report.holes, report.triangles, report.runtime_ms)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = load_graph(args)
    if g.n > ORACLE_MAX_VERTICES:
        raise InputError(f"oracle is limited to {ORACLE_MAX_VERTICES} vertices, graph has {g.n}")
    t0 = time.perf_counter()
    ell = degree_labeling(g)
    found = sorted(oracle_enumerate(g, ell), key=lambda c: (len(c), c))
    seeds, tris = triplets(g, ell)
    min_len = 3 if args.include_triangles else args.min_length
    shown = [c for c in found if len(c) >= min_len]
    if args.limit is not None:
        shown = shown[: args.limit]
    with _open_out(args.output) as out:
        for c in shown:
            out.write(format_cycle(g, c) + "\n")
    report = RunReport(
        n=g.n, m=g.m, num_triplets=len(seeds), triangles=sum(len(c) == 3 for c in found),
        holes=sum(len(c) >= 4 for c in found), longest_path=max(map(len, found), default=0),
        visits=0, recursions=0, runtime_ms=round((time.perf_counter() - t0) * 1e3, 3),
        algorithm="oracle",
    )
    _write_report(report, args.stats_json)
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        g = from_spec(args.generator)
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    with _open_out(args.output) as out:
        out.write(format_edgelist(g))
    return EXIT_OK


def _cmd_stats(args) -> int:
    g = load_graph(args)
    stats = Enumeration(g, algorithm=args.algorithm).count()
    report = RunReport.from_stats(g, stats, args.algorithm)
    _write_report(report, args.stats_json)
    print(report.to_json())
    return EXIT_OK


_COMMANDS = {"enumerate": _cmd_enumerate, "oracle": _cmd_oracle, "gen": _cmd_gen,
             "stats": _cmd_stats}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"chordless: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chordless: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"chordless: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
