"""Compare the numba and pure-numpy kernel backends on one fixed workload.

Each backend runs in its own subprocess because the choice is made at import
time. Usage::

    python3 benchmarks/bench_backends.py [--n 20000] [--queries 2000] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from srcount import LabeledText, SrcIndex, BACKEND

n, q, repeat = map(int, sys.argv[1:4])
rng = random.Random(1)
text = "".join(rng.choice("acgt") for _ in range(n))
labels = [rng.randint(0, n) for _ in range(n)]
lt = LabeledText(text, labels, n)

def patterns(tau):
    out = []
    for _ in range(q):
        m = rng.randint(1, 2 * tau + 4)
        i = rng.randrange(n - m + 1)
        a, b = sorted((rng.randint(0, n), rng.randint(0, n)))
        out.append((text[i:i + m], a, b))
    return out

# warm-up triggers compilation (or the numba on-disk cache) outside the timings
warm = SrcIndex(LabeledText("acgtacgt", list(range(8)), 8))
warm.count("ac", 0, 8); warm.count("acgtacg", 0, 8); warm.report_one("acgtac", 0, 8)

build, count, report = [], [], []
for _ in range(repeat):
    t0 = time.perf_counter()
    idx = SrcIndex(lt)
    build.append(time.perf_counter() - t0)
    qs = patterns(idx.tau)
    t0 = time.perf_counter()
    for p, a, b in qs:
        idx.count(p, a, b)
    count.append(time.perf_counter() - t0)
    t0 = time.perf_counter()
    for p, a, b in qs:
        idx.report_one(p, a, b)
    report.append(time.perf_counter() - t0)
print(json.dumps({"backend": BACKEND, "build": min(build), "count": min(count),
                  "report": min(report)}))
"""


def run(flag: str, args) -> dict:
    env = dict(os.environ, SRCOUNT_DISABLE_NUMBA=flag)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(args.n), str(args.queries), str(args.repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--queries", type=int, default=2_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = [run("0", args), run("1", args)]
    print(f"n={args.n} queries={args.queries} best of {args.repeat}")
    print(f"{'backend':8} {'build s':>9} {'count us/q':>11} {'report us/q':>12}")
    for r in rows:
        print(f"{r['backend']:8} {r['build']:9.3f} {1e6 * r['count'] / args.queries:11.1f} "
              f"{1e6 * r['report'] / args.queries:12.1f}")
    fast, slow = rows
    print(f"speedup  build x{slow['build'] / fast['build']:.1f}  "
          f"count x{slow['count'] / fast['count']:.1f}  "
          f"report x{slow['report'] / fast['report']:.1f}")


if __name__ == "__main__":
    main()
