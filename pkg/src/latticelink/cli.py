"""Command line interface.

Exit codes: 0 success (and "realizable" for check/lift), 1 valid input that
is not realizable (or a link that fails verification), 2 invalid input or
I/O failure, 3 internal inconsistency between independent checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .diagram import parse_diagram, serialize_diagram, trace_strands
from .digraph import EscherSquare, build_digraph, export_dot, find_escher_squares, height_function
from .errors import Inconsistent, LatticeError, RetriesExhausted
from .gen import GenConfig, SplitMix64, random_diagram
from .lift import export_link, export_link_lines, parse_link, realize, verify_realization
from .render import diagram_to_svg

GREEN = "\x1b[32m"
RED = "\x1b[31m"
RESET = "\x1b[0m"


def _paint(text: str, color: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"{color}{text}{RESET}"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _corners(square: EscherSquare) -> str:
    return " ".join(f"({x},{y})" for x, y in square.corners)


def cmd_validate(args: argparse.Namespace) -> int:
    d = parse_diagram(_read(args.diagram))
    strands = trace_strands(d)
    print(
        f"valid diagram: {len(d.edges)} edges, {len(d.degrees)} vertices, "
        f"{len(d.crossings)} crossings, {len(strands)} strands"
    )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    d = parse_diagram(_read(args.diagram))
    g = build_digraph(d)
    h = height_function(g)
    squares = find_escher_squares(d)
    if (h is None) != bool(squares):
        raise Inconsistent(
            "height search and square scan disagree: "
            f"heights {'absent' if h is None else 'present'}, {len(squares)} squares"
        )
    realizable = h is not None
    if args.json:
        report = {
            "realizable": realizable,
            "edges": len(d.edges),
            "crossings": len(d.crossings),
            "digraph": {"vertices": g.num_vertices, "arcs": len(g.arcs)},
            "max_height": max(h.values(), default=0) if h is not None else None,
            "escher_squares": [[list(c) for c in s.corners] for s in squares],
        }
        print(json.dumps(report, separators=(",", ":")))
    elif realizable:
        print(_paint("REALIZABLE", GREEN))
        print(f"max height: {max(h.values(), default=0)}")
    else:
        print(_paint("NOT REALIZABLE", RED))
        if args.witness:
            for square in squares:
                print(f"escher square: {_corners(square)}")
    return 0 if realizable else 1


def cmd_lift(args: argparse.Namespace) -> int:
    d = parse_diagram(_read(args.diagram))
    result = realize(d)
    if isinstance(result, EscherSquare):
        print(_paint("NOT REALIZABLE", RED))
        print(f"escher square: {_corners(result)}")
        return 1
    report = verify_realization(d, result)
    if not report.ok:
        bad = ", ".join(c.name for c in report.clauses() if not c.ok)
        raise Inconsistent(f"constructed link fails its own verification: {bad}")
    text = export_link_lines(result) if args.xyz else export_link(result) + "\n"
    _write(args.output, text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    d = parse_diagram(_read(args.diagram))
    link = parse_link(_read(args.link), require_embedded=False)
    report = verify_realization(d, link)
    for clause in report.clauses():
        if clause.ok:
            print(f"{clause.name}: ok")
        else:
            print(f"{clause.name}: FAIL ({clause.detail})")
    if report.ok:
        print(_paint("link realizes the diagram", GREEN))
        return 0
    print(_paint("link does not realize the diagram", RED))
    return 1


def cmd_digraph(args: argparse.Namespace) -> int:
    d = parse_diagram(_read(args.diagram))
    g = build_digraph(d)
    if args.dot:
        _write(args.output, export_dot(g))
        return 0
    acyclic = height_function(g) is not None
    print(
        f"digraph: {g.num_vertices} vertices, {len(g.arcs)} arcs, "
        f"{'acyclic' if acyclic else 'cyclic'}"
    )
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    d = parse_diagram(_read(args.diagram))
    _write(args.output, diagram_to_svg(d, scale=args.scale))
    return 0


def _gen_config(args: argparse.Namespace, seed: int) -> GenConfig:
    return GenConfig(
        seed=seed,
        n_loops=args.loops,
        bbox=args.bbox,
        max_retries=args.max_retries,
        rectilinear=args.rectilinear,
    )


def cmd_random(args: argparse.Namespace) -> int:
    d = random_diagram(_gen_config(args, args.seed))
    _write(args.output, serialize_diagram(d) + "\n")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    rng = SplitMix64(args.seed)
    generated = 0
    failed = 0
    realizable = 0
    height_sum = 0
    height_max = 0
    for _ in range(args.trials):
        seed = rng.next_u64()
        try:
            d = random_diagram(_gen_config(args, seed))
        except RetriesExhausted:
            failed += 1
            continue
        generated += 1
        h = height_function(build_digraph(d))
        squares = find_escher_squares(d)
        if (h is None) != bool(squares):
            raise Inconsistent(f"detectors disagree on generated diagram, seed {seed}")
        if h is not None:
            realizable += 1
            top = max(h.values(), default=0)
            height_sum += top
            height_max = max(height_max, top)
    print(f"trials: {args.trials}")
    print(f"generated: {generated} ({failed} failed)")
    if generated:
        print(f"realizable: {realizable}/{generated} ({100 * realizable / generated:.1f}%)")
    if realizable:
        print(f"max height: mean {height_sum / realizable:.2f}, max {height_max}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticelink",
        description=(
            "Decide whether a grid link diagram lifts to an embedded link in "
            "the cubic lattice, construct the lift, and verify it."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a diagram")
    p.add_argument("diagram", help="diagram JSON file, or - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="decide whether a diagram is realizable")
    p.add_argument("diagram", help="diagram JSON file, or - for stdin")
    p.add_argument("--witness", action="store_true", help="print obstructing squares")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lift", help="construct an embedded lift of a diagram")
    p.add_argument("diagram", help="diagram JSON file, or - for stdin")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.add_argument("--xyz", action="store_true", help="write x y z lines instead of JSON")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="check that a link realizes a diagram")
    p.add_argument("diagram", help="diagram JSON file, or - for stdin")
    p.add_argument("link", help="link JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("digraph", help="inspect the over/under precedence digraph")
    p.add_argument("diagram", help="diagram JSON file, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a summary")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("render", help="render a diagram as SVG")
    p.add_argument("diagram", help="diagram JSON file, or - for stdin")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.add_argument("--scale", type=int, default=40, help="pixels per grid unit")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("random", help="generate a seeded random diagram")
    p.add_argument("seed", type=int)
    p.add_argument("--loops", type=int, default=2, help="number of closed loops")
    p.add_argument("--bbox", type=int, default=4, help="coordinate bound")
    p.add_argument("--max-retries", type=int, default=64)
    p.add_argument("--rectilinear", action="store_true", help="polyomino loops, not rectangles")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("stats", help="realizability statistics over random diagrams")
    p.add_argument("seed", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--loops", type=int, default=2, help="number of closed loops")
    p.add_argument("--bbox", type=int, default=4, help="coordinate bound")
    p.add_argument("--max-retries", type=int, default=64)
    p.add_argument("--rectilinear", action="store_true", help="polyomino loops, not rectangles")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Inconsistent as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
