"""Time the numba and numpy oracle kernels on the same (pattern, n, k) cells.

    python3 benchmarks/bench_oracle.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from patwords import _kernels
from patwords.matcher import placements
from patwords.patterns import parse_pattern

CASES = [("13-2", 9, 4), ("1-2-3", 8, 5), ("111", 12, 3), ("21-1", 10, 4)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.NUMBA_AVAILABLE:
        print("numba not installed; only the numpy path can run")
    print(f"{'pattern':8} {'n':>3} {'k':>3} {'words':>9} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for tau, n, k in CASES:
        pat = parse_pattern(tau)
        arrays = _kernels.pattern_arrays(pat.letters, placements(pat.block_lengths, n))
        total = k ** n
        t_np, h_np = best_of(lambda: _kernels.histogram_numpy(n, k, 0, total, *arrays), args.repeat)
        if _kernels.NUMBA_AVAILABLE:
            _kernels.histogram_numba(n, k, 0, 1, *arrays)  # compile outside the timing
            t_nb, h_nb = best_of(lambda: _kernels.histogram_numba(n, k, 0, total, *arrays), args.repeat)
            assert np.array_equal(h_np, h_nb)
            print(f"{tau:8} {n:>3} {k:>3} {total:>9} {t_np:>9.4f} {t_nb:>9.4f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{tau:8} {n:>3} {k:>3} {total:>9} {t_np:>9.4f} {'-':>9} {'-':>8}")


if __name__ == "__main__":
    main()
