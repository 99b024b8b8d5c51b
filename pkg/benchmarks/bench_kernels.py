"""Compare the compiled and pure-Python hot loops.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.  Each case
first checks that both backends agree, then reports the best time per
call over ``repeat`` rounds.
"""

from __future__ import annotations

import argparse
import math
import timeit

from ellipleg import _purekernels

try:
    from ellipleg import _speedups
except ImportError:  # pragma: no cover - depends on the build
    _speedups = None

CASES = {
    "series_2f1 x=0.5": ("series_2f1", (0.25, 0.75, 1.5, 0.5, 1e-17, 3, 10_000)),
    "series_2f1 x=0.95": ("series_2f1", (1 / 6, 5 / 6, 1.25, 0.95, 1e-17, 3, 10_000)),
    "log_series_2f1 m=2": ("log_series_2f1",
                           (0.5, 0.5, 2, 0.3, math.log(0.3), -0.5772156649015329,
                            0.9227843350984671, -1.9635100260214235, -1.9635100260214235,
                            1e-17, 3, 10_000)),
    "agm_ke m=0.3": ("agm_ke", (0.3, 0.7, 1e-16, 64)),
    "agm_ke m=1-1e-12": ("agm_ke", (1.0 - 1e-12, 1e-12, 1e-16, 64)),
}


def _best(fn, args, number: int, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=2000)
    args = parser.parse_args()
    if _speedups is None:
        print("compiled extension not built; only the pure-Python timings are shown")
    print(f"{'case':22s} {'python':>12s} {'compiled':>12s} {'speedup':>8s}")
    for name, (func, fargs) in CASES.items():
        py_fn = getattr(_purekernels, func)
        t_py = _best(py_fn, fargs, args.number, args.repeat)
        if _speedups is None:
            print(f"{name:22s} {t_py * 1e6:10.2f}us")
            continue
        c_fn = getattr(_speedups, func)
        a, b = py_fn(*fargs), c_fn(*fargs)
        if abs(a[0] - b[0]) > 1e-14 * abs(a[0]):
            raise SystemExit(f"{name}: backends disagree ({a[0]!r} vs {b[0]!r})")
        t_c = _best(c_fn, fargs, args.number, args.repeat)
        print(f"{name:22s} {t_py * 1e6:10.2f}us {t_c * 1e6:10.2f}us {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
