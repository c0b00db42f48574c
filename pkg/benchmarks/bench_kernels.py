"""Compare the pure-Python and compiled kernel backends on the hot paths.

Each kernel is timed on the same inputs under both backends (best of
--repeat runs), followed by end-to-end timings of the public pipeline
under whichever backend the current process selected.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --quick --repeat 3
"""

import argparse
import random
import time

import bpskit
from bpskit import _kernels_py
from bpskit.k3 import kkv_decompose, kkv_product, ky_series
from bpskit.series import eta_power

try:
    from bpskit import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def kernel_cases(quick):
    rng = random.Random(7)
    small = 10 ** 6
    big = 10 ** 40
    sizes = [300, 1000] if not quick else [300]

    cases = []
    for n in sizes:
        a = [rng.randint(-small, small) for _ in range(n)]
        b = [rng.randint(-small, small) for _ in range(n)]
        cases.append((f"mul_trunc n={n}",
                      lambda m, a=a, b=b, n=n: m.mul_trunc(a, b, n)))
    wide = [rng.randint(-big, big) for _ in range(300)]
    cases.append(("mul_trunc n=300 40-digit",
                  lambda m, w=wide: m.mul_trunc(w, w, 300)))

    for n in sizes:
        c = [1] + [rng.randint(-9, 9) for _ in range(n - 1)]
        cases.append((f"inverse_unit n={n}",
                      lambda m, c=c, n=n: m.inverse_unit(c, n)))

    # eta-style sparse factors: multiply by (1 - q^k) for k = 1 .. n/2
    n = sizes[-1]
    start = [rng.randint(-small, small) for _ in range(n)]

    def sparse(m, start=start, n=n):
        acc = list(start)
        for k in range(1, n // 2):
            m.mul_sparse_unit_inplace(acc, [k], [-1])
        return acc

    cases.append((f"sparse eta sweep n={n}", sparse))

    rows = 2 * n + 1
    src = [rng.randint(-small, small) for _ in range(rows)]

    def axpy(m, src=src, rows=rows):
        dst = [0] * rows
        for k in range(200):
            m.axpy_shift(dst, src, 0, 2 * k + 1, k, rows - 1 - k)
        return dst

    cases.append((f"axpy_shift x200 rows={rows}", axpy))
    return cases


def pipeline_cases(quick):
    h = 8 if quick else 14
    return [
        (f"eta_power(-24, {40 * h})", lambda: eta_power(-24, 40 * h)),
        (f"kkv_product({h}) + decompose",
         lambda: kkv_decompose(kkv_product(h))),
        (f"ky_series({h // 2}, {10 * h})", lambda: ky_series(h // 2, 10 * h)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    print(f"selected backend: {bpskit.kernel_backend}")
    if _speedups is None:
        print("compiled backend not available; timing pure Python only\n")
    else:
        print()

    width = max(len(name) for name, _ in kernel_cases(args.quick)) + 2
    header = f"{'kernel':<{width}}{'python':>10}"
    if _speedups is not None:
        header += f"{'ext':>10}{'speedup':>9}"
    print(header)
    for name, call in kernel_cases(args.quick):
        t_py = best_of(lambda: call(_kernels_py), args.repeat)
        line = f"{name:<{width}}{t_py * 1000:>8.2f}ms"
        if _speedups is not None:
            t_ext = best_of(lambda: call(_speedups), args.repeat)
            line += f"{t_ext * 1000:>8.2f}ms{t_py / t_ext:>8.1f}x"
        print(line)

    print(f"\npipeline (backend: {bpskit.kernel_backend})")
    for name, call in pipeline_cases(args.quick):
        t = best_of(call, args.repeat)
        print(f"{name:<{width}}{t * 1000:>8.2f}ms")


if __name__ == "__main__":
    main()
