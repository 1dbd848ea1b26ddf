#!/usr/bin/env python3
"""Throughput of the axis-batch kernel: compiled extension vs numpy fallback.

Evaluates every notion over growing axis batches and reports axes/second
for each backend plus the speedup. The compiled kernel is the one the
package actually dispatches to when it built; this script times both
implementations directly, so it works regardless of HOLEVOQ_DISABLE_EXTENSION.
"""

import argparse
import time

import numpy as np

from holevoq import _axes_py
from holevoq.notions import DistanceNotion
from holevoq.sampling import random_qubit_ensemble, rng_from_seed

try:
    from holevoq import _axes_cy
except ImportError:
    _axes_cy = None

CODES = [
    (DistanceNotion.KOLMOGOROV, _axes_py.CODE_KOLMOGOROV),
    (DistanceNotion.PROB_ERROR, _axes_py.CODE_PROB_ERROR),
    (DistanceNotion.BHATTACHARYYA, _axes_py.CODE_BHATTACHARYYA),
    (DistanceNotion.RELATIVE_ENTROPY, _axes_py.CODE_RELATIVE_ENTROPY),
    (DistanceNotion.QJSD, _axes_py.CODE_QJSD),
]


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,10000,100000,1000000",
                        help="comma-separated axis batch sizes")
    parser.add_argument("--states", type=int, default=3,
                        help="ensemble members (default 3)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats, best is kept (default 5)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = rng_from_seed(args.seed)
    e = random_qubit_ensemble(rng, n_states=args.states)
    from holevoq.qubit import density_to_bloch

    weights = np.ascontiguousarray(e.weights)
    bloch = np.ascontiguousarray([density_to_bloch(s) for s in e.states])

    if _axes_cy is None:
        print("compiled extension not available; timing the fallback only\n")

    header = f"{'notion':<18} {'batch':>9} {'numpy ax/s':>12}"
    if _axes_cy is not None:
        header += f" {'cython ax/s':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for notion, code in CODES:
        for size in sizes:
            axes = rng.normal(size=(size, 3))
            axes /= np.linalg.norm(axes, axis=1, keepdims=True)
            axes = np.ascontiguousarray(axes)

            t_py = best_time(lambda: _axes_py.evaluate_axes(code, weights, bloch, axes),
                             args.repeats)
            line = f"{notion.value:<18} {size:>9} {size / t_py:>12.3g}"
            if _axes_cy is not None:
                out_py = _axes_py.evaluate_axes(code, weights, bloch, axes)
                out_cy = np.asarray(_axes_cy.evaluate_axes(code, weights, bloch, axes))
                err = np.abs(out_py - out_cy).max()
                if err > 1e-12:
                    raise AssertionError(
                        f"backends disagree for {notion.value}: {err:.3e}"
                    )
                t_cy = best_time(
                    lambda: _axes_cy.evaluate_axes(code, weights, bloch, axes),
                    args.repeats,
                )
                line += f" {size / t_cy:>12.3g} {t_py / t_cy:>7.2f}x"
            print(line)
        print()


if __name__ == "__main__":
    main()
