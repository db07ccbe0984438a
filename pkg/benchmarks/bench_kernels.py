#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two kernel micro-benchmarks in-process (both implementations are
importable side by side) and the two end-to-end solver workloads in
subprocesses with DEGSEQ_BACKEND forced, so each measurement uses exactly one
backend.  Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from degseq import _kernels  # noqa: E402
from degseq._kernels import pure  # noqa: E402


def timeit(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_imatmul(quick):
    rng = random.Random(7)
    k, r, g = (800, 3, 200) if quick else (4000, 3, 400)
    a = [[rng.randint(-100, 100) for _ in range(r)] for _ in range(k)]
    b = [[rng.randint(-100, 100) for _ in range(r)] for _ in range(g)]
    t_c = timeit(lambda: _kernels.imatmul(a, b)) if _kernels.backend_name() == "c" else None
    t_p = timeit(lambda: pure.imatmul(a, b))
    return f"imatmul {k}x{r} @ {g}x{r}", t_c, t_p


def bench_maxplus(quick):
    rng = random.Random(8)
    shape = (12, 20, 20) if quick else (16, 30, 30)

    def table():
        size = shape[0] * shape[1] * shape[2]
        return [None if rng.random() < 0.2 else rng.randint(-50, 50) for _ in range(size)]

    a, b = table(), table()
    caps = (40, 40, 40)
    t_c = (
        timeit(lambda: _kernels.maxplus_convolve(a, shape, b, shape, caps), repeats=1)
        if _kernels.backend_name() == "c"
        else None
    )
    t_p = timeit(lambda: pure.maxplus_convolve(a, shape, b, shape, caps), repeats=1)
    return f"maxplus {shape}+{shape}", t_c, t_p


END_TO_END = r"""
import json, sys, time
from degseq.graphs import MaxAffine, MultiCriteriaObjective
from degseq.instances import Instance
from degseq.multicriteria import maximize_multicriteria
from degseq.randgen import random_bounded_td_instance, random_graph_with_edge_count, random_weight_rows, rng_of
from degseq.colored import solve_colored_dp
from degseq import _kernels

which = sys.argv[1]
if which == "multi":
    rng = rng_of(5)
    graph = random_graph_with_edge_count(rng, 60, 300)
    weights = random_weight_rows(rng, 60, 2, lo=-5, hi=5)
    obj = MultiCriteriaObjective(weights, MaxAffine((((2, -1), 0), ((-1, 2), 3))))
    t0 = time.perf_counter()
    sol = maximize_multicriteria(graph, 150, obj)
    print(json.dumps({"backend": _kernels.backend_name(), "t": time.perf_counter() - t0,
                      "value": sol.value, "queries": sol.oracle_queries}))
else:
    rng = rng_of(99)
    inst, forest = random_bounded_td_instance(rng, 200, 4, 2, edge_prob=0.6, counts=(25, 25))
    t0 = time.perf_counter()
    sol = solve_colored_dp(inst.graph, forest, inst.coloring, inst.vertex_functions)
    print(json.dumps({"backend": _kernels.backend_name(), "t": time.perf_counter() - t0,
                      "value": sol.value}))
"""


def bench_end_to_end(which):
    out = {}
    for backend in ("c", "pure"):
        env = dict(os.environ, DEGSEQ_BACKEND=backend,
                   PYTHONPATH=os.path.join(os.path.dirname(__file__), "..", "src"))
        try:
            proc = subprocess.run(
                [sys.executable, "-c", END_TO_END, which],
                capture_output=True, text=True, env=env, check=True,
            )
        except subprocess.CalledProcessError as exc:
            if backend == "c":
                out[backend] = None  # extension not built
                continue
            raise RuntimeError(exc.stderr)
        import json

        data = json.loads(proc.stdout)
        out[backend] = data
    label = "solve-multi n=60 |E|=300" if which == "multi" else "colored DP n=200 p=2"
    t_c = out["c"]["t"] if out.get("c") else None
    t_p = out["pure"]["t"]
    if out.get("c"):
        assert out["c"]["value"] == out["pure"]["value"], "backends disagree on the optimum"
    return label, t_c, t_p


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller kernel sizes")
    args = parser.parse_args()

    print(f"active backend: {_kernels.backend_name()}")
    rows = [bench_imatmul(args.quick), bench_maxplus(args.quick)]
    rows.append(bench_end_to_end("multi"))
    rows.append(bench_end_to_end("colored"))

    width = max(len(r[0]) for r in rows) + 2
    print(f"{'workload':<{width}} {'c':>10} {'pure':>10} {'speedup':>9}")
    for label, t_c, t_p in rows:
        c_str = f"{t_c:.4f}s" if t_c is not None else "n/a"
        ratio = f"{t_p / t_c:.1f}x" if t_c else "-"
        print(f"{label:<{width}} {c_str:>10} {t_p:>9.4f}s {ratio:>9}")


if __name__ == "__main__":
    main()
