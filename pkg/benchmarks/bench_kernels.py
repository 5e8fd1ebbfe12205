"""Compare the compiled enumeration kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--quick]

Times the two backends on the same workloads and checks that their censuses
agree, so the speedup number is also a correctness cross-check.
"""

import argparse
import time

from qtcat import _kernels_py

try:
    from qtcat import _speedups
except ImportError:
    _speedups = None


def bench(label, fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    print("  %-28s %8.3f s" % (label, best))
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="use smaller workloads")
    args = ap.parse_args()

    if args.quick:
        workloads = [
            ("rational_census", (13, 8)),
            ("ellm_census_bounded", (5, 3, 10)),
        ]
    else:
        workloads = [
            ("rational_census", (17, 12)),
            ("ellm_census_bounded", (7, 3, 20)),
            ("ellm_maximal_bounded", (8, 3, 20)),
        ]

    backends = [("python", _kernels_py)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled backend unavailable; timing pure Python only")

    for name, params in workloads:
        print("%s%s" % (name, params))
        times = {}
        results = {}
        for bname, mod in backends:
            t, r = bench(bname, getattr(mod, name), *params, repeat=1 if not args.quick else 3)
            times[bname] = t
            results[bname] = r
        if len(results) == 2:
            assert results["python"] == results["compiled"], "backend mismatch!"
            print("  agree; speedup %.1fx" % (times["python"] / times["compiled"]))


if __name__ == "__main__":
    main()
