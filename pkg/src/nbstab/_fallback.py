"""Pure-Python (numpy) twin of the compiled weight-histogram kernel."""

from __future__ import annotations

import itertools

import numpy as np

_BLOCK_CELLS = 1 << 22


def _span_block(rows: np.ndarray, p: int, start: np.ndarray) -> np.ndarray:
    words = start[None, :].astype(np.int32)
    for row in rows.astype(np.int32):
        words = np.concatenate([(words + c * row) % p for c in range(p)])
    return words


def span_histogram(basis, p, symbol, nsym, offset, hist) -> None:
    """Add the symbol-weight histogram of ``offset + span(basis)`` to ``hist``."""
    basis = np.asarray(basis, dtype=np.int32)
    r, n = basis.shape
    symbol = np.asarray(symbol)
    order = np.argsort(symbol, kind="stable")
    per = n // nsym
    low = 0
    while low < r and p ** (low + 1) * n <= _BLOCK_CELLS:
        low += 1
    block = _span_block(basis[:low], p, np.zeros(n, dtype=np.int32))
    high = basis[low:]
    offset = np.asarray(offset, dtype=np.int32)
    for coeffs in itertools.product(range(p), repeat=r - low):
        shift = (offset + np.asarray(coeffs, dtype=np.int32) @ high) % p if len(coeffs) else offset
        words = (block + shift) % p
        w = words[:, order].reshape(len(words), nsym, per).any(axis=2).sum(axis=1)
        hist += np.bincount(w, minlength=nsym + 1)[: nsym + 1].astype(np.int64)


def iter_span(basis, p, chunk_cells: int = _BLOCK_CELLS):
    """Yield all words of ``span(basis)`` in chunks (rows are words)."""
    basis = np.asarray(basis, dtype=np.int32)
    r, n = basis.shape
    low = 0
    while low < r and p ** (low + 1) * max(n, 1) <= chunk_cells:
        low += 1
    block = _span_block(basis[:low], p, np.zeros(n, dtype=np.int32))
    high = basis[low:]
    for coeffs in itertools.product(range(p), repeat=r - low):
        if len(coeffs):
            yield (block + np.asarray(coeffs, dtype=np.int32) @ high) % p
        else:
            yield block
