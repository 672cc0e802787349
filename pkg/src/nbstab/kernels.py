"""Backend selection for the span enumeration kernel.

The compiled extension is used when it imports; otherwise (or when
``NBSTAB_PURE=1``) the numpy fallback runs.  ``NBSTAB_WORKERS`` sets the
number of threads used to split large enumerations; results are identical
for any worker count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _fallback
from ._fallback import iter_span  # noqa: F401  (re-exported)

try:
    if os.environ.get("NBSTAB_PURE", "") not in ("", "0"):
        raise ImportError("pure backend requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
MAX_ENUMERATION = 1 << 24


def _backend(name: str | None):
    name = name or BACKEND
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel not available")
        return _compiled
    if name == "python":
        return _fallback
    raise ValueError(f"unknown backend {name!r}")


def workers() -> int:
    try:
        return max(1, int(os.environ.get("NBSTAB_WORKERS", "1")))
    except ValueError:
        return 1


def span_histogram(basis, p: int, symbol, nsym: int, backend: str | None = None,
                   n_workers: int | None = None) -> np.ndarray:
    """Histogram of symbol weights over all ``p^r`` words spanned by ``basis``.

    ``symbol[j]`` is the symbol (coordinate) that digit column ``j`` belongs
    to; the weight of a word is the number of symbols with a nonzero digit.
    """
    impl = _backend(backend)
    basis = np.ascontiguousarray(basis, dtype=np.uint8)
    r, n = basis.shape
    symbol = np.ascontiguousarray(symbol, dtype=np.int32)
    n_workers = n_workers or workers()
    split = 0
    while split < r and p**split < n_workers:
        split += 1
    if n_workers == 1:
        split = 0
    low, high = basis[: r - split], basis[r - split :]

    def run(coeffs) -> np.ndarray:
        hist = np.zeros(nsym + 1, dtype=np.int64)
        off = (np.asarray(coeffs, dtype=np.int64) @ high.astype(np.int64)) % p if split else np.zeros(n, dtype=np.int64)
        impl.span_histogram(np.ascontiguousarray(low), p, symbol, nsym,
                            np.ascontiguousarray(off, dtype=np.uint8), hist)
        return hist

    offsets = list(itertools.product(range(p), repeat=split))
    if len(offsets) == 1:
        return run(offsets[0])
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        return sum(pool.map(run, offsets))
