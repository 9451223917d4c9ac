"""Time the compiled and pure-Python elimination kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--sizes 20,40,60] [--repeat 3]
"""
import argparse
import random
import timeit

from almostcomm import kernels
from almostcomm.kernels import _pykernels

try:
    from almostcomm.kernels import _ckernels
except ImportError:
    _ckernels = None


def random_rows(r, n, rank):
    # product of n x rank and rank x n integer matrices has rank <= rank
    left = [[r.randint(-9, 9) for _ in range(rank)] for _ in range(n)]
    right = [[r.randint(-9, 9) for _ in range(n)] for _ in range(rank)]
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)] for row in left]


def bench(fn, rows, ncols, repeat):
    return min(timeit.repeat(lambda: fn(rows, ncols), number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", default="20,40,60")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install --no-build-isolation -e .` first")
        return 1
    r = random.Random(args.seed)
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'kernel':<12}{'n':>5}{'rank':>6}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>9}")
    for n in (int(s) for s in args.sizes.split(",")):
        rows = random_rows(r, n, n - n // 4)
        for name in ("echelon_int", "rank_mod_p"):
            py, cy = getattr(_pykernels, name), getattr(_ckernels, name)
            assert py(rows, n) == cy(rows, n)
            t_py = bench(py, rows, n, args.repeat)
            t_cy = bench(cy, rows, n, args.repeat)
            rank = _pykernels.rank_mod_p(rows, n)
            print(f"{name:<12}{n:>5}{rank:>6}{t_py:>12.4f}{t_cy:>14.4f}{t_py / t_cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
