"""Compare the compiled closure/class kernel against the pure-Python one.

Runs each variant in a subprocess (the kernel is chosen at import time via
STB_KERNEL) on the same workload: enumerate a group from its candidate
generators, then compute its conjugacy classes.  Reports wall-clock times
and the speedup.

Usage: python3 benchmarks/bench_kernel.py [--dim 5] [--q 3] [--repeat 1]
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORK = r"""
import json, os, sys, time
from stb import kernel, matgrp

dim = int(sys.argv[1]); q = int(sys.argv[2])
t0 = time.perf_counter()
G = matgrp.build_group("SO" if q % 2 else "Omega", dim, q)
t1 = time.perf_counter()
classes = G.conj_classes()
t2 = time.perf_counter()
print(json.dumps({
    "kernel": kernel.name,
    "order": G.order,
    "classes": len(classes),
    "build_s": t1 - t0,
    "classes_s": t2 - t1,
}))
"""


def run_variant(variant, dim, q):
    env = dict(os.environ, STB_KERNEL=variant)
    out = subprocess.run(
        [sys.executable, "-c", WORK, str(dim), str(q)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dim", type=int, default=5)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    results = {}
    for variant in ("c", "py"):
        best = None
        try:
            for _ in range(args.repeat):
                r = run_variant(variant, args.dim, args.q)
                if best is None or r["build_s"] + r["classes_s"] < \
                        best["build_s"] + best["classes_s"]:
                    best = r
        except subprocess.CalledProcessError as exc:
            print(f"{variant}: failed\n{exc.stderr}", file=sys.stderr)
            continue
        results[variant] = best
        print(f"{best['kernel']:>8}: build {best['build_s']:8.3f}s  "
              f"classes {best['classes_s']:8.3f}s  "
              f"(order {best['order']}, {best['classes']} classes)")

    if "c" in results and "py" in results:
        a = results["py"]["build_s"] + results["py"]["classes_s"]
        b = results["c"]["build_s"] + results["c"]["classes_s"]
        if results["c"]["order"] != results["py"]["order"] or \
                results["c"]["classes"] != results["py"]["classes"]:
            print("MISMATCH between kernels", file=sys.stderr)
            return 1
        print(f"speedup: {a / b:.1f}x (same order, same class count)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
