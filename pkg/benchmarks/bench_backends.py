"""Compare the compiled and pure-Python kernels on the bundled corpus.

Each backend runs in its own interpreter (the kernel is chosen at import),
and every problem is solved ``--repeat`` times; the best wall time counts.

    python benchmarks/bench_backends.py [--repeat 3] [--timeout 60]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys
from inhabit import BACKEND
from inhabit.cli import bundled_problems, _load
from inhabit.solve import solve

repeat, timeout = int(sys.argv[1]), float(sys.argv[2])
rows = []
for path in sorted(bundled_problems().glob("*.dtt")):
    problem = _load(path)
    best = None
    for _ in range(repeat):
        result, _ = solve(problem, timeout=timeout)
        if best is None or result.wall < best.wall:
            best = result
    rows.append({"name": path.stem, "solved": best.solved, "wall_ms": best.wall * 1000,
                 "nodes": best.nodes, "solution": best.solutions[:1]})
print(json.dumps({"backend": BACKEND, "rows": rows}))
"""


def run(pure, repeat, timeout):
    env = dict(os.environ)
    env.pop("INHABIT_PURE", None)
    if pure:
        env["INHABIT_PURE"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat), str(timeout)],
        env=env, check=True, capture_output=True, text=True,
    ).stdout
    return json.loads(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--timeout", type=float, default=60.0)
    args = parser.parse_args()

    compiled = run(False, args.repeat, args.timeout)
    python = run(True, args.repeat, args.timeout)
    if compiled["backend"] != "compiled":
        print("compiled kernel is not built; run `pip install -e .` first", file=sys.stderr)

    print(f"{'problem':<15} {'nodes':>7} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    total_py = total_c = 0.0
    for c, p in zip(compiled["rows"], python["rows"]):
        if (c["nodes"], c["solution"]) != (p["nodes"], p["solution"]):
            print(f"{c['name']}: backends disagree", file=sys.stderr)
            sys.exit(1)
        total_py += p["wall_ms"]
        total_c += c["wall_ms"]
        print(f"{c['name']:<15} {c['nodes']:>7} {p['wall_ms']:>10.1f} {c['wall_ms']:>12.1f} "
              f"{p['wall_ms'] / max(c['wall_ms'], 1e-9):>7.2f}x")
    print(f"{'total':<15} {'':>7} {total_py:>10.1f} {total_c:>12.1f} "
          f"{total_py / max(total_c, 1e-9):>7.2f}x")


if __name__ == "__main__":
    main()
