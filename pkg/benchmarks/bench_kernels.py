"""Compare the compiled and pure-Python weight-enumeration kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--workers W]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from nbstab import families, kernels

CASES = [
    ("five-qubit dual (2^6)", lambda: families.hamming_hermitian(2, 2).dual()),
    ("QR(3,23) C_R (3^12)", lambda: families.qr(3, 23).css[0]),
    ("BCH(2,4,3) hermitian dual (2^22)", lambda: families.bch_hermitian(2, 2, 3, mode="bound").dual()),
    ("Melas(2,2) dual (4^11)", lambda: families.melas(2, 2, mode="bound").dual()),
]


def timed(fn, repeat: int) -> tuple[float, np.ndarray]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    header = f"{'case':36s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else "")
    print(header)
    for name, build in CASES:
        code = build()
        args_ = (code.basis, code.p, code.symbol_map, code.n)
        times, hists = [], []
        for b in backends:
            t, h = timed(lambda: kernels.span_histogram(*args_, backend=b, n_workers=args.workers), args.repeat)
            times.append(t)
            hists.append(h)
        assert all((h == hists[0]).all() for h in hists), name
        line = f"{name:36s}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) > 1:
            line += f"{times[0] / times[1]:11.1f}x"
        print(line)
    if len(backends) == 1:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
