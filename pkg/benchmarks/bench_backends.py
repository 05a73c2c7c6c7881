#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs the three hot paths on realistic workloads:

* power iteration over every bicyclic digraph at n = 12 on an alpha grid;
* characteristic-determinant evaluation over a root-scan-sized x grid;
* the n = 5 enumeration pipeline (strong-connectivity filter plus
  canonical minimization over all 120 relabelings).

Numba timings exclude compilation (one warm-up call per kernel).  Use
``--n 4`` for a quicker enumeration round.
"""

import argparse
import time

import numpy as np

from alphaspectra import _backend
from alphaspectra.digraph import _perm_bit_table, adjacency_rows_from_masks
from alphaspectra.families import generate, list_bicyclic
from alphaspectra.spectral import build_alpha_matrix


def timed(fn, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_power(pairs):
    mats = [
        build_alpha_matrix(generate(spec), alpha).matrix + np.eye(spec.n_vertices)
        for spec in list_bicyclic(12)
        for alpha in (0.0, 0.25, 0.5, 0.75)
    ]

    def run(impl):
        acc = 0.0
        for m in mats:
            _, lo, hi, _ = impl(m, 1e-12, 1_000_000)
            acc += 0.5 * (lo + hi)
        return acc

    for name, impl in pairs:
        cost, acc = timed(lambda impl=impl: run(impl))
        yield f"power-iteration ({name})", cost, f"sum of radii {acc:.6f}", len(mats)


def bench_det(pairs):
    mats = [
        build_alpha_matrix(generate(spec), alpha).matrix
        for spec in list_bicyclic(12)
        for alpha in (0.0, 0.5)
    ]
    xs = np.linspace(1.0, 3.0, 60)

    def run(impl):
        acc = 0.0
        for m in mats:
            eye = np.eye(m.shape[0])
            for x in xs:
                acc += impl(x * eye - m)
        return acc

    for name, impl in pairs:
        cost, acc = timed(lambda impl=impl: run(impl))
        yield f"char-det ({name})", cost, f"sum of dets {acc:.3e}", len(mats) * len(xs)


def bench_enumeration(sc_pairs, perm_pairs, n):
    masks = np.arange(1 << (n * (n - 1)), dtype=np.int64)
    rows = adjacency_rows_from_masks(masks, n)
    table = _perm_bit_table(n)

    flags = None
    for name, impl in sc_pairs:
        cost, flags = timed(lambda impl=impl: impl(rows, n), repeats=1)
        yield f"sc-filter ({name})", cost, f"{int(flags.sum())} strongly connected", len(masks)

    sc_masks = masks[flags]
    for name, impl in perm_pairs:
        cost, canon = timed(lambda impl=impl: impl(sc_masks, table), repeats=1)
        classes = np.unique(canon).shape[0]
        yield f"canonical-min ({name})", cost, f"{classes} classes", len(sc_masks)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5, help="enumeration size (4 for a quick run)")
    args = parser.parse_args()

    if not _backend.HAVE_NUMBA:
        print("numba backend unavailable (SPECTRA_NO_NUMBA set or numba missing);")
        print("timing the numpy path only.\n")

    def impl_pairs(nb_name, py_name):
        pairs = []
        if _backend.HAVE_NUMBA:
            pairs.append(("numba", getattr(_backend, nb_name)))
        pairs.append(("numpy", getattr(_backend, py_name)))
        return pairs

    rows = []
    print("warming up kernels...")
    if _backend.HAVE_NUMBA:
        warm = np.eye(3) + 0.1
        _backend.power_iteration_nb(warm, 1e-6, 100)
        _backend.det_via_lu_nb(warm.copy())
        _backend.sc_filter_nb(np.zeros((1, 3), dtype=np.int64), 3)
        _backend.perm_min_nb(np.zeros(1, dtype=np.int64), _perm_bit_table(3))

    rows.extend(bench_power(impl_pairs("power_iteration_nb", "power_iteration_py")))
    rows.extend(bench_det(impl_pairs("det_via_lu_nb", "det_via_lu_py")))
    rows.extend(
        bench_enumeration(
            impl_pairs("sc_filter_nb", "sc_filter_py"),
            impl_pairs("perm_min_nb", "perm_min_py"),
            args.n,
        )
    )

    print(f"\n{'benchmark':<28} {'time':>10} {'items':>9}  result")
    print("-" * 78)
    seen = {}
    for name, cost, note, items in rows:
        base = name.split(" (")[0] if "(" in name else name
        print(f"{name:<28} {cost:>9.3f}s {items:>9,}  {note}")
        seen.setdefault(base, []).append((name, cost))
    print()
    for base, entries in seen.items():
        if len(entries) == 2:
            (n0, t0), (n1, t1) = entries
            fast, slow = (n0, n1) if t0 < t1 else (n1, n0)
            ratio = max(t0, t1) / max(min(t0, t1), 1e-9)
            print(f"{base}: {fast.split('(')[-1].rstrip(')')} is {ratio:.1f}x faster")


if __name__ == "__main__":
    main()
