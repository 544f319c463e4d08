"""Time the compiled and pure-Python graph kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Both variants are imported directly, so the environment flag does not matter
here; it only decides which one the package routes through.
"""

import argparse
import time

import numpy as np

from pantsdist import _kernels
from pantsdist.construct import build_gamma
from pantsdist.lcf import named_graph


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    graphs = [("heawood", named_graph("heawood"))] + [(f"gamma_{m}", build_gamma(m)) for m in (140, 180, 300)]
    kernels = [("girth", "girth_py", "girth_nb"), ("bfs", "bfs_distances_py", "bfs_distances_nb"), ("components", "component_labels_py", "component_labels_nb")]
    if not _kernels.HAVE_NUMBA:
        print("numba path unavailable; timing the pure-Python path only")

    print(f"{'graph':<12} {'kernel':<11} {'python ms':>10} {'numba ms':>10} {'speedup':>8}")
    for name, g in graphs:
        indptr, indices, edge_ids = g.csr
        removed = np.zeros(g.vertex_count, dtype=np.bool_)
        removed[::7] = True
        inputs = {"girth": (indptr, indices, edge_ids), "bfs": (indptr, indices, 0), "components": (indptr, indices, removed)}
        for label, py_name, nb_name in kernels:
            py_fn = getattr(_kernels, py_name)
            t_py = best_time(py_fn, inputs[label], args.repeat)
            if _kernels.HAVE_NUMBA:
                nb_fn = getattr(_kernels, nb_name)
                nb_fn(*inputs[label])  # compile outside the timed region
                t_nb = best_time(nb_fn, inputs[label], args.repeat)
                print(f"{name:<12} {label:<11} {t_py * 1e3:>10.3f} {t_nb * 1e3:>10.3f} {t_py / t_nb:>7.1f}x")
            else:
                print(f"{name:<12} {label:<11} {t_py * 1e3:>10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
