"""Time the compiled and pure-Python state kernels on the same inputs.

    python benchmarks/bench_kernel.py [--repeat 3]
"""

import argparse
import statistics
import time

from periodica import _core
from periodica.diagram import AnnularDiagram, braid_tangle, load_diagram
from periodica.cli import data_dir


def cases():
    yield "10_61 (10 crossings)", load_diagram(f"{data_dir()}/10_61.pd"), 0
    yield "T(9,2) full (9 crossings)", AnnularDiagram(braid_tangle(2, [1]), 9).flatten(), 0
    flat = AnnularDiagram(braid_tangle(3, [1, -2]), 9).flatten()
    yield "3-braid x9 (18 crossings)", flat, 0
    yield "3-braid x9, aperiodic filter", flat, 6


def timed(kernel, flat, shift, repeat):
    slot_end, end_slot = flat.ends()
    n = flat.n_crossings
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = kernel(slot_end, end_slot, list(flat.seam), n, 0, 1 << n, shift)
        runs.append(time.perf_counter() - t)
    return statistics.median(runs), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _core.compiled_histogram is None:
        print("compiled kernel not available; only the fallback is timed")
    print(f"{'case':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, flat, shift in cases():
        tp, rp = timed(_core.pure_histogram, flat, shift, args.repeat)
        if _core.compiled_histogram is None:
            print(f"{name:32} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc, rc = timed(_core.compiled_histogram, flat, shift, args.repeat)
        assert rp == rc, name
        print(f"{name:32} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
