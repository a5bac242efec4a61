"""Numba kernels against the pure-Python path on the completion enumeration.

    python3 benchmarks/bench_oracle.py [--repeat 3]

Both paths run in-process: the jitted dispatcher and ``_kernels.pure``,
which rebinds every kernel to its undecorated source.  Running the whole
package with ``BOXIKIT_DISABLE_NUMBA=1`` selects the same pure path.
"""

import argparse
import time

import numpy as np

from boxikit import _kernels
from boxikit._accel import NUMBA_ENABLED
from boxikit.families import build_crown, build_tcc
from boxikit.graph import cycle_graph, join_graphs
from boxikit.recognition import graph_rows

CASES = [
    ("TCC(1,1,1)", build_tcc([1, 1, 1])),
    ("TCC(2,2)", build_tcc([2, 2])),
    ("crown(4)", build_crown(4)),
    ("C4 v C4", join_graphs([cycle_graph(4, "a"), cycle_graph(4, "b")])),
    ("TCC(1,3)", build_tcc([1, 3])),
]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not NUMBA_ENABLED:
        print("numba disabled: both columns time the pure path")
    fast = _kernels.minimal_completion_masks
    slow = _kernels.pure("minimal_completion_masks")
    print(f"{'graph':12s} {'non-edges':>9s} {'mode':>9s} {'numba s':>9s} {'python s':>9s} {'speedup':>8s}")
    for name, g in CASES:
        ne = g.non_edges()
        eu = np.array([i for i, _ in ne], dtype=np.int64)
        ev = np.array([j for _, j in ne], dtype=np.int64)
        rows = graph_rows(g)
        for unit in (False, True):
            fast(rows, g.n, eu, ev, unit)  # compile outside the timing
            t_fast, a = timed(lambda: fast(rows, g.n, eu, ev, unit), args.repeat)
            t_slow, b = timed(
                lambda: slow([int(r) for r in rows], g.n, eu.tolist(), ev.tolist(), unit), args.repeat
            )
            assert np.array_equal(a, b)
            mode = "cubicity" if unit else "boxicity"
            print(f"{name:12s} {len(ne):9d} {mode:>9s} {t_fast:9.4f} {t_slow:9.4f} {t_slow / t_fast:8.1f}x")


if __name__ == "__main__":
    main()
