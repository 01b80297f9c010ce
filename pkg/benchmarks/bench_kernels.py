"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--cliques 3,3,3,2] [--repeat 3]

The pure path is the same source run through ``py_func``, which is what
``CLIQUEBELL_DISABLE_JIT=1`` selects at import time.
"""
import argparse
import time

import numpy as np

from cliquebell import kernels
from cliquebell._jit import JIT_ENABLED, python_impl
from cliquebell.clique_colourings import build_family, parse_sizes


def drain(fill, clique, chunk=65536):
    n = len(clique)
    labels = np.full(n, -1, dtype=np.int64)
    prefix = np.zeros(n + 1, dtype=np.int64)
    state = np.zeros(3, dtype=np.int64)
    total = 0
    while not state[2]:
        out = np.empty((chunk, n), dtype=np.int8)
        total += fill(clique, 0, labels, prefix, state, out)
    return total


def best_of(repeat, func, *args):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = func(*args)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cliques", default="3,3,3,2")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not JIT_ENABLED:
        raise SystemExit("JIT is disabled; unset CLIQUEBELL_DISABLE_JIT to compare")

    clique = build_family(parse_sizes(args.cliques)).clique_array()
    drain(kernels.rgs_fill, clique[:2])  # compile outside the timing
    t_jit, rows = best_of(args.repeat, drain, kernels.rgs_fill, clique)
    t_py, rows_py = best_of(args.repeat, drain, python_impl(kernels.rgs_fill), clique)
    assert rows == rows_py
    print(f"colourings of {args.cliques}: {rows} rows")
    print(f"  numba  {t_jit * 1e3:10.2f} ms")
    print(f"  python {t_py * 1e3:10.2f} ms   speed-up x{t_py / t_jit:.0f}")

    series_args = (2, 3, 6, 1.0, 1e-12, 18, 100_000)
    kernels.series_sum(*series_args)
    t_jit, a = best_of(args.repeat * 100, kernels.series_sum, *series_args)
    t_py, b = best_of(args.repeat * 100, python_impl(kernels.series_sum), *series_args)
    assert a == b
    print(f"series B_(3,3)(6) with {a[1]} terms")
    print(f"  numba  {t_jit * 1e6:10.2f} us")
    print(f"  python {t_py * 1e6:10.2f} us   speed-up x{t_py / t_jit:.0f}")


if __name__ == "__main__":
    main()
