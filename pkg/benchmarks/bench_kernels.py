"""Compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical results; the script exits 1 otherwise.
"""
import argparse
import sys
import time

import numpy as np

from cupcube import _kernels_py, kernels
from cupcube.branched import branched_setup, knot_diagram
from cupcube.coloring import Representation


def best(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled extension not built; only the fallback is available")
        return 0
    from cupcube import _kernels
    cases = []
    for knot, n in (("4_1", 3), ("5_2", 3), ("6_1", 3)):
        D = knot_diagram(knot)
        st = branched_setup(n)
        f = Representation.constant(D, st.group, "t")
        cases.append((f"enumerate {knot} over A({n}), {n ** (2 * D.n_arcs)} candidates",
                      lambda impl, D=D, f=f, M=st.module: kernels.brute_force_colorings(
                          D, f, M, backend=impl)))
    rng = np.random.default_rng(0)
    A = rng.integers(0, 97, (120, 120))
    B = rng.integers(0, 97, (120, 120))
    cases.append(("matmul_mod 120x120 mod 97",
                  lambda impl: (_kernels if impl == "cython" else _kernels_py).matmul_mod(A, B, 97).tolist()))
    bad = 0
    print(f"{'case':<52}{'cython s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, fn in cases:
        tc, oc = best(lambda: fn("cython"), args.repeat)
        tp, op = best(lambda: fn("python"), args.repeat)
        same = oc == op
        bad += not same
        print(f"{name:<52}{tc:>10.4f}{tp:>10.4f}{tp / tc:>8.1f}x" + ("" if same else "  MISMATCH"))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
