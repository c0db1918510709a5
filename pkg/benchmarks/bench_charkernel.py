#!/usr/bin/env python3
"""Benchmark the compiled character kernel against the pure-Python twin.

Builds the full character table of one symmetric group with each kernel
(cold caches) and reports the best wall time over a few repeats:

    python benchmarks/bench_charkernel.py --degree 14 --repeats 3
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from repstab import _mnpure  # noqa: E402
from repstab.partitions import cycle_types_of, partitions_of  # noqa: E402

try:
    from repstab import _mncore
except ImportError:
    _mncore = None


def build_table(kernel, m):
    lams = partitions_of(m)
    pairs = [(lam.parts, t.cycles_desc()) for t in cycle_types_of(m) for lam in lams]
    for shape, cycles in pairs:
        kernel.char_value(shape, cycles)
    return len(pairs)


def best_time(kernel, m, repeats):
    best = float("inf")
    for _ in range(repeats):
        kernel.clear_cache()
        t0 = time.perf_counter()
        build_table(kernel, m)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=14, help="symmetric group degree")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    m = args.degree
    entries = len(partitions_of(m)) ** 2
    print(f"full character table of degree {m}: {entries} entries")

    pure = best_time(_mnpure, m, args.repeats)
    print(f"pure python : {pure:8.3f} s")
    if _mncore is None:
        print("compiled    : not built (python setup.py build_ext --inplace)")
        return
    fast = best_time(_mncore, m, args.repeats)
    print(f"compiled    : {fast:8.3f} s")
    print(f"speedup     : {pure / fast:8.1f} x")

    # equality spot check so a benchmark run doubles as a sanity check
    lams = partitions_of(m)
    types = cycle_types_of(m)
    for lam in lams[:: max(1, len(lams) // 8)]:
        for t in types[:: max(1, len(types) // 8)]:
            a = _mnpure.char_value(lam.parts, t.cycles_desc())
            b = _mncore.char_value(lam.parts, t.cycles_desc())
            assert a == b, (lam, t)
    print("kernels agree on spot checks")


if __name__ == "__main__":
    main()
