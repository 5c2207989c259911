"""Command-line entry points: ``solve``, ``bench`` and ``oracle``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from . import BACKEND
from .frontend import ElaborationError, ParseError, format_term, parse, parse_term
from .search import SearchConfig
from .solve import solve

EXIT_SOLVED, EXIT_UNSOLVED, EXIT_ERROR = 0, 1, 2


def bundled_problems() -> Path:
    return Path(str(resources.files("inhabit") / "problems"))


def _config(args):
    return SearchConfig(
        entropy_start=args.entropy_start,
        entropy_factor=args.entropy_factor,
        extend=args.extend,
        branch_factor=args.branch_factor,
    )


def _load(path):
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), name=path.stem)


def _search_flags(p):
    p.add_argument("--timeout", type=float, default=60.0, metavar="SECONDS")
    p.add_argument("--entropy-start", type=float, default=1000.0, metavar="F")
    p.add_argument("--entropy-factor", type=float, default=3.0, metavar="F")
    p.add_argument("--extend", type=int, default=4, metavar="N")
    p.add_argument("--branch-factor", type=float, default=5.0, metavar="F")
    p.add_argument("--max-iterations", type=int, default=None, metavar="N",
                   help="stop after N deepening passes")


def cmd_solve(args):
    try:
        problem = _load(args.path)
    except OSError as e:
        print(f"{args.path}: {e.strerror or e}", file=sys.stderr)
        return EXIT_ERROR
    except ParseError as e:
        print(f"{args.path}:{e}", file=sys.stderr)
        return EXIT_ERROR

    def trace(k, entropy, capacity, nodes):
        print(f"iteration {k}: budget {entropy:g}, capacity {capacity}, "
              f"nodes so far {nodes}", file=sys.stderr)

    def on_solution(elab, state, term):
        print(format_term(term), flush=True)

    try:
        result, _ = solve(
            problem, count=args.count, timeout=args.timeout, config=_config(args),
            max_iterations=args.max_iterations, on_iteration=trace if args.trace else None,
            on_solution=on_solution,
        )
    except ElaborationError as e:
        print(f"{args.path}: {e}", file=sys.stderr)
        return EXIT_ERROR
    if args.trace:
        print(f"finished: {result.iterations} iterations, {result.nodes} nodes, "
              f"{result.wall:.3f}s", file=sys.stderr)
    if result.solved:
        return EXIT_SOLVED
    reason = "timed out" if result.timed_out else "search exhausted"
    print(f"{args.path}: no solution ({reason})", file=sys.stderr)
    return EXIT_UNSOLVED


def bench_one(path, timeout, config, max_iterations=None):
    record = {"name": Path(path).stem, "solved": False, "wall_ms": 0.0,
              "iterations": 0, "nodes": 0}
    try:
        problem = _load(path)
        result, _ = solve(problem, timeout=timeout, config=config,
                          max_iterations=max_iterations)
    except (OSError, ParseError, ElaborationError) as e:
        record["error"] = str(e)
        return record
    record.update(solved=result.solved, wall_ms=round(result.wall * 1000, 3),
                  iterations=result.iterations, nodes=result.nodes)
    if result.solved:
        record["solution"] = result.solutions[0]
    return record


def cmd_bench(args):
    directory = Path(args.dir) if args.dir else bundled_problems()
    paths = sorted(directory.glob("*.dtt"))
    config = _config(args)
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(bench_one, paths, [args.timeout] * len(paths),
                                    [config] * len(paths), [args.max_iterations] * len(paths)))
    else:
        records = [bench_one(p, args.timeout, config, args.max_iterations) for p in paths]

    if args.json:
        for r in records:
            print(json.dumps({k: v for k, v in r.items() if k != "solution"}, ensure_ascii=False))
        return EXIT_SOLVED

    width = max([len(r["name"]) for r in records] + [4])
    print(f"{'name':<{width}}  {'solved':<6}  {'wall ms':>10}  {'iters':>5}  {'nodes':>9}")
    for r in records:
        status = "error" if "error" in r else ("yes" if r["solved"] else "no")
        print(f"{r['name']:<{width}}  {status:<6}  {r['wall_ms']:>10.1f}  "
              f"{r['iterations']:>5}  {r['nodes']:>9}")
    solved = sum(r["solved"] for r in records)
    print(f"solved {solved}/{len(records)} ({BACKEND} kernel)")
    return EXIT_SOLVED


def cmd_oracle(args):
    from .oracle import OracleError, oracle_check, oracle_enumerate

    try:
        problem = _load(args.path)
    except (OSError, ParseError) as e:
        print(f"{args.path}: {e}", file=sys.stderr)
        return EXIT_ERROR
    try:
        if args.check is not None:
            ok = oracle_check(problem, parse_term(args.check))
            print("true" if ok else "false")
            return EXIT_SOLVED if ok else EXIT_UNSOLVED
        for term in oracle_enumerate(problem, args.max_nodes):
            print(format_term(term))
    except (OracleError, ParseError) as e:
        print(f"{args.path}: {e}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_SOLVED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="inhabit", description="Type inhabitation for dependent type theory.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="search for inhabitants of a problem's goal")
    p.add_argument("path")
    p.add_argument("--count", type=int, default=1, metavar="N")
    p.add_argument("--trace", action="store_true",
                   help="report each deepening pass on stderr")
    _search_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="solve every problem in a directory")
    p.add_argument("dir", nargs="?", help="defaults to the bundled corpus")
    p.add_argument("--json", action="store_true", help="one JSON record per problem")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    _search_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force reference enumeration and checking")
    p.add_argument("path")
    p.add_argument("--max-nodes", type=int, default=4, metavar="N")
    p.add_argument("--check", metavar="TERM", help="check TERM instead of enumerating")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
