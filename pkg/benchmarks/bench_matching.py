"""Time the compiled and pure-Python matching kernels on the same regions.

    python benchmarks/bench_matching.py --repeat 3
"""

import argparse
import time

from cornergap import kernels
from cornergap.enumeration import forward_offsets, matching_bound
from cornergap.region import DGap, G, build, strip_forced

CASES = [G(4, 2), G(5, 3), G(6, 4), G(7, 4), DGap(8, 1, 4, 4), G(8, 5)]


def best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if not kernels.compiled_available():
        print("compiled kernel not built; only the Python kernel will run")
    print(f"{'region':28} {'cells':>5} {'python s':>10} {'compiled s':>11} {'speedup':>8}  count")
    for spec in CASES:
        reg, _ = strip_forced(build(spec))
        fw = forward_offsets(reg)
        bound = matching_bound(reg)
        t_py, c_py = best_time(lambda: kernels.count_forward(fw, bound, "python"), args.repeat)
        if kernels.compiled_available():
            t_c, c_c = best_time(lambda: kernels.count_forward(fw, bound, "compiled"), args.repeat)
            assert c_c == c_py, (spec, c_c, c_py)
            print(f"{spec.label():28} {len(reg):5d} {t_py:10.4f} {t_c:11.4f} {t_py / t_c:8.1f}  {c_py}")
        else:
            print(f"{spec.label():28} {len(reg):5d} {t_py:10.4f} {'-':>11} {'-':>8}  {c_py}")


if __name__ == "__main__":
    main()
