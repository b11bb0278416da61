"""Compare the numba kernels against the pure-numpy fallback.

Run directly: python3 benchmarks/bench_accel.py
"""

import time

import numpy as np

from eigenscape.accel import _numba, _numpy

SIZES = {
    "bisect_times": [1_000, 10_000, 100_000],
    "heat_pair_sums": [(300, 300), (1000, 500), (2000, 1000)],
    "oracle_inner": [100, 300, 600],
}
REPS = 5


def _time(fn, *args):
    fn(*args)  # warm: jit compile / page in
    best = np.inf
    for _ in range(REPS):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_bisect(mod, n):
    rng = np.random.default_rng(0)
    lams = rng.uniform(0.01, 100.0, n)
    mus = rng.uniform(0.01, 100.0, n)
    return _time(mod.bisect_times, lams, mus)


def bench_pair_sums(mod, shape):
    k, j = shape
    rng = np.random.default_rng(0)
    S = np.ascontiguousarray(rng.uniform(0.0, 1.0, (k, j)))
    lam = rng.uniform(0.0, 50.0, k)
    ts = rng.uniform(0.1, 5.0, j)
    return _time(mod.heat_pair_sums, S, lam, ts)


def bench_oracle(mod, n):
    rng = np.random.default_rng(0)
    P = rng.uniform(0.0, 1.0, (n, n))
    w = np.ones(n)
    fi = rng.normal(size=n)
    fj = rng.normal(size=n)
    return _time(mod.oracle_inner, P, w, fi, fj)


def main():
    rows = []
    for n in SIZES["bisect_times"]:
        rows.append((f"bisect_times n={n}",
                     bench_bisect(_numpy, n), bench_bisect(_numba, n)))
    for shape in SIZES["heat_pair_sums"]:
        rows.append((f"heat_pair_sums {shape[0]}x{shape[1]}",
                     bench_pair_sums(_numpy, shape), bench_pair_sums(_numba, shape)))
    for n in SIZES["oracle_inner"]:
        rows.append((f"oracle_inner n={n}",
                     bench_oracle(_numpy, n), bench_oracle(_numba, n)))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':{width}s}  {'numpy':>10s}  {'numba':>10s}  {'speedup':>8s}")
    for name, t_np, t_nb in rows:
        print(f"{name:{width}s}  {t_np*1e3:9.2f}ms  {t_nb*1e3:9.2f}ms  "
              f"{t_np/t_nb:7.1f}x")


if __name__ == "__main__":
    main()
