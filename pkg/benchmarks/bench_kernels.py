"""Benchmark the orbit-sweep kernels: numba backend vs numpy backend.

Runs the exhaustive minimal-mask sweep over all 2^{4p} connection sets
for each backend and worker count, reporting wall times and checking
that every configuration returns the same orbit count.

Usage:
    python benchmarks/bench_kernels.py --p 5 --workers 1,2,4 --repeat 3
"""

import argparse
import os
import time

from cayley8p.domain import induced_permutations
from cayley8p.kernels import ENV_FLAG, HAS_NUMBA, sweep_minimal_count, warmup


def time_sweep(backend, perms, workers, repeat):
    os.environ[ENV_FLAG] = backend
    if backend == "numba":
        warmup()
    count = None
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        count = sweep_minimal_count(perms, workers=workers)
        times.append(time.perf_counter() - t0)
    return count, min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, default=5, help="odd prime (default 5)")
    parser.add_argument(
        "--workers", default="1,2,4", help="comma separated worker counts"
    )
    parser.add_argument(
        "--repeat", type=int, default=3, help="runs per configuration; best is kept"
    )
    args = parser.parse_args()

    worker_counts = [int(tok) for tok in args.workers.split(",") if tok]
    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    if not HAS_NUMBA:
        print("numba not installed; benchmarking the numpy backend only")

    perms = induced_permutations(args.p)
    n_masks = 1 << (4 * args.p)
    print(
        f"p={args.p}: {len(perms)} permutations on {4 * args.p} classes, "
        f"{n_masks} masks, best of {args.repeat}"
    )
    print(f"{'backend':>8}  {'workers':>7}  {'seconds':>9}  {'masks/s':>12}  {'count':>8}")

    saved = os.environ.get(ENV_FLAG)
    counts = set()
    try:
        for backend in backends:
            for workers in worker_counts:
                count, best = time_sweep(backend, perms, workers, args.repeat)
                counts.add(count)
                print(
                    f"{backend:>8}  {workers:>7}  {best:>9.3f}  "
                    f"{n_masks / best:>12.0f}  {count:>8}"
                )
    finally:
        if saved is None:
            os.environ.pop(ENV_FLAG, None)
        else:
            os.environ[ENV_FLAG] = saved

    if len(counts) != 1:
        print(f"ERROR: backends disagree: {sorted(counts)}")
        return 1
    print(f"all configurations agree: {counts.pop()} orbits")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
