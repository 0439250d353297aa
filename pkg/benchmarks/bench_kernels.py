"""Compare the compiled kernels with their numpy fallbacks.

Run with ``python3 benchmarks/bench_kernels.py [--grid N] [--repeat R]``.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from datashare import _fallback

try:
    from datashare import _kernels as compiled
except ImportError:  # pragma: no cover
    compiled = None


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", type=int, default=10_001)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    alphas = np.linspace(0.0, 1.0, args.grid)
    scan_args = (alphas, 1.0, 1.0, 0.32, -0.1, 0.5, 1e-12)
    curve_args = (alphas, 1.0, -0.1, 0.5, 0.68)
    cases = [("leader_scan", scan_args), ("onpath_utility", curve_args)]

    print(f"grid={args.grid} repeat={args.repeat} (best of, microseconds)")
    print(f"{'kernel':<16}{'numpy':>12}{'cython':>12}{'speedup':>10}")
    for name, call_args in cases:
        t_np = best_of(lambda: getattr(_fallback, name)(*call_args), args.repeat)
        if compiled is None:
            print(f"{name:<16}{t_np * 1e6:>12.1f}{'n/a':>12}{'':>10}")
            continue
        t_cy = best_of(lambda: getattr(compiled, name)(*call_args), args.repeat)
        print(f"{name:<16}{t_np * 1e6:>12.1f}{t_cy * 1e6:>12.1f}{t_np / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
