"""Compare the compiled genus-tree walker with the pure-Python fallback.

    python benchmarks/bench_walk.py --max-genus 20 --repeat 3
"""

import argparse
import time

from wilfbounds import _walk
from wilfbounds.enumeration import SweepConfig, genus_counts, sweep

try:
    from wilfbounds._kernel import walk as kernel_walk
except ImportError:
    kernel_walk = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=20)
    ap.add_argument("--sweep-genus", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    walkers = [("python", _walk.walk)]
    if kernel_walk is not None:
        walkers.append(("compiled", kernel_walk))
    else:
        print("compiled kernel not built; only the fallback is timed")

    print(f"tree walk, genus <= {args.max_genus}")
    base = None
    for name, w in walkers:
        t, counts = best_of(lambda: genus_counts(args.max_genus, w), args.repeat)
        base = base or t
        print(f"  {name:9s} {t:8.3f}s  {sum(counts):>9d} nodes  {sum(counts) / t:>12.0f} nodes/s  x{base / t:.1f}")

    # end-to-end sweep, dominated by per-semigroup checks rather than the walk
    t, r = best_of(lambda: sweep(SweepConfig(max_genus=args.sweep_genus)), 1)
    print(f"full sweep genus <= {args.sweep_genus}: {t:.2f}s, {r.filtered} checked, {r.total_violations} violations")


if __name__ == "__main__":
    main()
