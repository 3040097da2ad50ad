"""Benchmark the JIT kernels against the pure-numpy fallback.

Times the active path in-process, then re-executes itself with
QDISCORD_DISABLE_NUMBA=1 to measure the fallback, and prints both with
speedups.  Run from the repository root:

    python benchmarks/bench_accel.py
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

import qdiscord as qd
from qdiscord import _accel
from qdiscord.entropic import _pauli_blocks, fibonacci_sphere


def timed(fn, repeats=3):
    fn()  # warmup (and JIT compile on the numba path)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_benchmarks():
    rho22 = qd.random_density_matrix(2, 2, 1)
    rho23 = qd.random_density_matrix(2, 3, 2)
    g22 = _pauli_blocks(rho22)
    g23 = _pauli_blocks(rho23)
    dirs = fibonacci_sphere(4096)
    b = qd.bloch_triple(rho22)
    corr = np.ascontiguousarray(b.corr)
    starts = qd.geometric.oracle_starts(32, 0)

    return [
        (
            "entropy scan, d_B=2 (4096 dirs)",
            timed(lambda: _accel.conditional_entropy_scan(*g22, dirs)),
        ),
        (
            "entropy scan, d_B=3 (4096 dirs)",
            timed(lambda: _accel.conditional_entropy_scan(*g23, dirs)),
        ),
        (
            "geometric oracle (32 starts)",
            timed(lambda: _accel.oracle_search(b.x, b.y, corr, starts, 1500, 1e-13, 1e-8)),
        ),
        (
            "entropic discord (defaults)",
            timed(lambda: qd.entropic_discord(rho22)),
        ),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", action="store_true", help="machine-readable output")
    args = parser.parse_args()

    results = run_benchmarks()
    path = "numba" if _accel.USE_NUMBA else "numpy"
    if args.csv:
        for name, seconds in results:
            print(f"{name}\t{seconds:.6f}")
        return

    print(f"active path: {path}")
    for name, seconds in results:
        print(f"  {name:<36} {seconds * 1e3:10.3f} ms")

    if not _accel.USE_NUMBA:
        return
    env = dict(os.environ, QDISCORD_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--csv"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    fallback = {}
    for line in out.stdout.strip().splitlines():
        name, seconds = line.split("\t")
        fallback[name] = float(seconds)

    print("\nfallback path: numpy (QDISCORD_DISABLE_NUMBA=1)")
    for name, _ in results:
        print(f"  {name:<36} {fallback[name] * 1e3:10.3f} ms")
    print("\nspeedup (numpy / numba)")
    for name, seconds in results:
        print(f"  {name:<36} {fallback[name] / seconds:9.1f}x")


if __name__ == "__main__":
    main()
