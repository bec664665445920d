"""Compare the compiled and pure-Python row-reduction kernels.

    python benchmarks/bench_kernel.py [--repeat 3] [--weight 1,1,1]

Times three workloads per backend: random sparse integer elimination,
building a module in Littelmann coordinates, and the commutant solve.
"""

from __future__ import annotations

import argparse
import random
import time

import anrest.linalg as la
from anrest.decomp import is_indecomposable
from anrest.repbuild import build_module
from anrest.restrict import an_generators


def random_rows(nrows, ncols, density, seed):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        row = {c: rng.randint(-9, 9) for c in range(ncols) if rng.random() < density}
        rows.append({c: v for c, v in row.items() if v})
    return rows


def workloads(weight):
    rows = random_rows(120, 120, 0.04, 1)
    real = build_module(weight)
    act = an_generators(real)
    return {
        "sparse_rank_120x120": lambda: la.kernel.rank(rows),
        f"build_module_{'_'.join(map(str, weight))}": lambda: build_module(weight),
        f"commutant_{'_'.join(map(str, weight))}": lambda: is_indecomposable(act),
    }


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--weight", default="1,1,1")
    args = ap.parse_args(argv)
    weight = tuple(int(x) for x in args.weight.split(","))

    try:
        from anrest.linalg import _kernel_c  # noqa: F401
    except ImportError:
        print("compiled kernel not built; only the Python backend is available")
        backends = ["python"]
    else:
        backends = ["cython", "python"]

    original = la.BACKEND
    results: dict[str, dict[str, float]] = {}
    try:
        for name in backends:
            la.use_backend(name)
            for label, fn in workloads(weight).items():
                results.setdefault(label, {})[name] = best_of(fn, args.repeat)
    finally:
        la.use_backend(original)

    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, times in results.items():
        line = f"{label:<28}" + "".join(f"{times[b]:>11.3f}s" for b in backends)
        if len(backends) == 2:
            line += f"{times['python'] / times['cython']:>11.2f}x"
        print(line)


if __name__ == "__main__":
    main()
