"""Command-line interface.

Coordinates are 0-based ``R,C`` (row, column). The Matlab-style 1-based
linear index ``(s_j - 1) * H + s_i`` corresponds to ``C * H + R`` here.

Exit codes: 0 ok, 1 mismatch against the oracle, 2 usage or parse error,
3 stopped at ``--max-iters`` before convergence, 4 target unreachable.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from . import formats
from .analysis import convergence_trace, error_vs_oracle, extract_path
from .bench import CSV_HEADER, run_bench
from .costs import image_to_costs, load_pgm, random_image, random_lattice, write_pgm
from .errors import PGMParseError, RasterFormatError, UnreachableError
from .lattice import check_coord
from .oracle import dijkstra_reference
from .solver import solve

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_ANYTIME = 3
EXIT_UNREACHABLE = 4


class UsageError(Exception):
    pass


def _dims(text: str) -> tuple[int, int]:
    try:
        h, w = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected HxW, got {text!r}") from None
    if h < 1 or w < 1:
        raise argparse.ArgumentTypeError("dimensions must be positive")
    return h, w


def _coord(text: str) -> tuple[int, int]:
    try:
        r, c = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R,C, got {text!r}") from None
    return r, c


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="PGM image (P2 or P5)")
    src.add_argument("--random", type=_dims, metavar="HxW", help="seeded random lattice")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--source", type=_coord, required=True, metavar="R,C")


def _add_solver(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-iters", type=int, default=None)
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")


def _load_lattice(args):
    if args.input is not None:
        try:
            return image_to_costs(load_pgm(args.input.read_bytes()))
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
    return random_lattice(args.random, args.seed)


def _prepare(args):
    lattice = _load_lattice(args)
    try:
        source = check_coord(args.source, lattice.dims)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    if args.max_iters is not None and args.max_iters < 0:
        raise UsageError("--max-iters must be non-negative")
    threads = args.threads or os.cpu_count() or 1
    if threads < 1:
        raise UsageError("--threads must be positive")
    return lattice, source, threads


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def cmd_solve(args) -> int:
    lattice, source, threads = _prepare(args)
    res = solve(lattice, source, max_iterations=args.max_iters, workers=threads)
    formats.write_distances(args.out, res.bed)
    if args.pred:
        formats.write_predecessors(args.pred, res.pred)
    if args.viz:
        args.viz.write_bytes(write_pgm(formats.distance_image(res.bed)))
    if args.trace:
        exact = dijkstra_reference(lattice, source)
        # replays the run with the oracle attached; same fields by determinism
        trace = convergence_trace(lattice, source, args.max_iters, threads, exact)
        _write_trace(args.trace, trace)
    wall_ms = sum(r.wall_time for r in res.reports) * 1e3
    print(
        f"converged={str(res.converged).lower()} K={res.k_iterations} "
        f"updates_total={res.updates_total} wall_ms={wall_ms:.3f}"
    )
    return EXIT_OK if res.converged else EXIT_ANYTIME


def cmd_compare(args) -> int:
    lattice, source, threads = _prepare(args)
    res = solve(lattice, source, max_iterations=args.max_iters, workers=threads)
    err = error_vs_oracle(res.bed, dijkstra_reference(lattice, source))
    print(
        f"l1={_fmt(err.l1)} linf={_fmt(err.linf)} mismatched={err.mismatched} "
        f"K={res.k_iterations} converged={str(res.converged).lower()}"
    )
    return EXIT_OK if err.mismatched == 0 else EXIT_MISMATCH


def _write_trace(path: Path, trace) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(["iteration", "updates", "l1", "linf", "mismatched", "wall_ms"])
        for e in trace:
            out.writerow(
                [e.iteration, e.updates, _fmt(e.error.l1), _fmt(e.error.linf), e.error.mismatched, f"{e.wall_time * 1e3:.3f}"]
            )


def cmd_trace(args) -> int:
    lattice, source, threads = _prepare(args)
    snap = None
    if args.snapshots_dir is not None:
        args.snapshots_dir.mkdir(parents=True, exist_ok=True)

        def snap(report, bed):
            formats.write_distances(args.snapshots_dir / f"iter_{report.iteration:05d}.anyd", bed)

    trace = convergence_trace(lattice, source, args.max_iters, threads, on_iteration=snap)
    _write_trace(args.out_csv, trace)
    return EXIT_OK


def cmd_path(args) -> int:
    lattice, source, threads = _prepare(args)
    try:
        target = check_coord(args.target, lattice.dims)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    res = solve(lattice, source, max_iterations=args.max_iters, workers=threads)
    try:
        path = extract_path(res, source, target, lattice)
    except UnreachableError as exc:
        print(f"unreachable: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    print(f"cost={_fmt(path.cost)} turns={path.turns}")
    for r, c in path.nodes:
        print(f"{r},{c}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.repeats < 1:
        raise UsageError("--repeats must be positive")
    if any(t < 1 for t in args.threads) or any(s < 1 for s in args.sizes):
        raise UsageError("--sizes and --threads must be positive")
    print(CSV_HEADER)
    for row in run_bench(args.sizes, args.seeds, args.threads, args.repeats, heap=not args.no_heap):
        print(row.csv(), flush=True)
    return EXIT_OK


def cmd_generate(args) -> int:
    maxval = args.maxval
    if not 1 <= maxval <= 65535:
        raise UsageError("--maxval must be in 1..65535")
    args.out.write_bytes(write_pgm(random_image(args.random, args.seed, maxval)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anydijkstra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the sweep solver and write a distance raster")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--pred", type=Path)
    p.add_argument("--trace", type=Path, help="also write a per-iteration error CSV")
    p.add_argument("--viz", type=Path, help="16-bit PGM of the normalized distances")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="sweep solver vs heap Dijkstra")
    _add_input(p)
    _add_solver(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("trace", help="per-iteration error against heap Dijkstra")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--out-csv", type=Path, required=True)
    p.add_argument("--snapshots-dir", type=Path)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("path", help="print the shortest path to one target")
    _add_input(p)
    _add_solver(p)
    p.add_argument("--target", type=_coord, required=True, metavar="R,C")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("bench", help="CSV timings of sweep vs heap on random lattices")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--seeds", type=_int_list, default=[1])
    p.add_argument("--threads", type=_int_list, default=[1])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--no-heap", action="store_true", help="skip the heap baseline rows")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a seeded random grayscale PGM")
    p.add_argument("--random", type=_dims, required=True, metavar="HxW")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--maxval", type=int, default=255)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PGMParseError, RasterFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
