"""Compare the numba and numpy paths of the order-relation kernels.

    python3 benchmarks/bench_kernels.py [--n 4] [--max-part 3] [--repeat 5]

Both paths must agree; timings are informational.  The first numba call
includes JIT compilation and is reported separately.
"""
import argparse
import time

import numpy as np

from capelli import _kernels as K
from capelli import weights as W


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--max-part", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    comps = W.compositions_bounded(args.n, args.max_part)
    ks = [W.k_vector(c) for c in comps]
    perms = [tuple(p) for p in K.all_permutations(args.n)]
    cases = {
        "preceq_bruteforce": lambda u: K.preceq_bruteforce_matrix(comps, comps, use_numba=u),
        "preceq_candidate": lambda u: K.preceq_candidate_matrix(comps, comps, ks, ks, use_numba=u),
        "bruhat_leq": lambda u: K.bruhat_leq_matrix(perms, perms, use_numba=u),
    }
    print(f"n={args.n} max_part={args.max_part}: {len(comps)} compositions, {len(perms)} permutations")
    print(f"numba available: {K.HAVE_NUMBA}")
    for name, fn in cases.items():
        t_np, ref = _time(lambda: fn(False), args.repeat)
        line = f"{name:18s} numpy {t_np * 1e3:9.2f} ms"
        if K.HAVE_NUMBA:
            t0 = time.perf_counter()
            fn(True)
            jit = time.perf_counter() - t0
            t_nb, out = _time(lambda: fn(True), args.repeat)
            assert np.array_equal(out, ref), f"{name}: numba and numpy disagree"
            line += f" | numba {t_nb * 1e3:9.2f} ms (first call {jit:.2f} s) | speedup {t_np / t_nb:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
