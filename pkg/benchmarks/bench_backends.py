"""Benchmark the compiled quadrature kernels against the pure-Python twin.

Kernel workloads are timed in-process against both implementations; the
end-to-end rows re-run a CLI verification in a subprocess with the
backend pinned through PQTRIG_PURE_PYTHON.

Usage: python benchmarks/bench_backends.py [--reps N]
"""

import argparse
import os
import subprocess
import sys
import time

from pqtrig import _dequad_py as pure

try:
    from pqtrig import _dequad_c as compiled
except ImportError:
    compiled = None

GRID = (1.25, 1.5, 2.0, 3.0, 5.0)


def time_it(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_half_pi(kernels):
    def work():
        for p in GRID:
            for q in GRID:
                kernels.arcsin_quad(p, q, 1.0, 1e-12, 12, 1000000)

    return work


def bench_arcsin_interior(kernels):
    xs = [i / 500.0 for i in range(1, 500)]

    def work():
        for x in xs:
            kernels.arcsin_quad(4.0 / 3.0, 4.0, x, 1e-12, 12, 1000000)

    return work


def bench_arcsinh(kernels):
    xs = [0.02 * i for i in range(1, 500)]

    def work():
        for x in xs:
            kernels.arcsinh_quad(2.0, 4.0, x, 1e-12, 12, 1000000)

    return work


def bench_m_star(kernels):
    pairs = [(p, q) for p in GRID for q in GRID if p < q]

    def work():
        for p, q in pairs:
            kernels.mstar_quad(p, q, 1e-12, 12, 1000000)

    return work


KERNEL_BENCHES = [
    ("half_pi over 25 exponent pairs", bench_half_pi),
    ("arcsin integral, 499 points at (4/3, 4)", bench_arcsin_interior),
    ("arcsinh integral, 499 points at (2, 4)", bench_arcsinh),
    ("m_star over the finite cells", bench_m_star),
]

CLI_ARGS = [
    "sweep", "--check", "thm11-sin", "--p-range", "1.5:5:3",
    "--q-range", "1.5:5:3", "--grid", "12",
]


def bench_cli(pure_python: bool) -> float:
    env = dict(os.environ)
    env.pop("PQTRIG_PURE_PYTHON", None)
    if pure_python:
        env["PQTRIG_PURE_PYTHON"] = "1"
    t0 = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "pqtrig.cli", *CLI_ARGS],
        check=True, env=env, stdout=subprocess.DEVNULL,
    )
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=5, help="repetitions per workload")
    args = parser.parse_args()

    if compiled is None:
        print("compiled extension not built; nothing to compare")
        return 1

    width = max(len(name) for name, _ in KERNEL_BENCHES) + 2
    print(f"{'workload':<{width}} {'python':>10} {'compiled':>10} {'speedup':>9}")
    for name, factory in KERNEL_BENCHES:
        t_py = time_it(factory(pure), args.reps)
        t_c = time_it(factory(compiled), args.reps)
        print(f"{name:<{width}} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms {t_py / t_c:>8.1f}x")

    t_py = bench_cli(pure_python=True)
    t_c = bench_cli(pure_python=False)
    name = "CLI sweep thm11-sin 3x3 pairs (subprocess)"
    print(f"{name:<{width}} {t_py * 1e3:>8.0f}ms {t_c * 1e3:>8.0f}ms {t_py / t_c:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
