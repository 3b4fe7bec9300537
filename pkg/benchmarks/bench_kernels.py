"""Time the numba kernels against their numpy fallbacks.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5]

Both paths are called directly (the env flag only picks the default),
so a single run reports both and checks that their outputs agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bkcodes import _kernels as K
from bkcodes import construct_field, make_ring


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng: np.random.Generator):
    F = construct_field(2, 2)
    R = make_ring(F, 3)
    coeffs = rng.integers(0, F.q, size=(200_000, R.m))
    yield "zeta", (coeffs, F.add), K.np_zeta, getattr(K, "nb_zeta", None)
    yield "moebius", (coeffs, F.sub), K.np_moebius, getattr(K, "nb_moebius", None)
    basis = rng.integers(0, F.q, size=(9, 12))
    yield "span", (basis, F.add, F.mul, F.q), K.np_span, getattr(K, "nb_span", None)
    F3 = construct_field(3)
    spans = tuple(K.np_span(rng.integers(0, 3, size=(4, 10)), F3.add, F3.mul, 3) for _ in range(2))
    yield "combine", (spans, 81), K.np_combine, getattr(K, "nb_combine", None)
    idx = rng.integers(0, R.size, size=(200_000, 6))
    yield "lut_rowsum", (idx, R.lee_table), K.np_lut_rowsum, getattr(K, "nb_lut_rowsum", None)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"default backend: {K.BACKEND}")
    print(f"{'kernel':<12}{'numpy (ms)':>12}{'numba (ms)':>12}{'speedup':>10}")
    for name, call_args, np_fn, nb_fn in cases(rng):
        t_np = best_of(lambda: np_fn(*call_args), args.repeat)
        if nb_fn is None:
            print(f"{name:<12}{t_np * 1e3:>12.2f}{'n/a':>12}{'':>10}")
            continue
        nb_fn(*call_args)  # compile outside the timed region
        t_nb = best_of(lambda: nb_fn(*call_args), args.repeat)
        assert np.array_equal(np_fn(*call_args), nb_fn(*call_args)), name
        print(f"{name:<12}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
