"""Dense linear algebra over a prime field F_p with numpy int64 arrays."""

from __future__ import annotations

import numpy as np


def _inv_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = a.shape
    inv = _inv_table(p)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * inv[a[r, c]] % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(mat, p: int) -> int:
    a = np.asarray(mat)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(mat, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (rows) of ``{x : mat @ x = 0}``."""
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        n = ncols if ncols is not None else a.shape[1]
        return np.eye(n, dtype=np.int64)
    r, piv = rref(a, p)
    n = a.shape[1]
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for row, pc in enumerate(piv):
            out[i, pc] = (-r[row, f]) % p
    return out


def in_rowspace(basis_rref: np.ndarray, pivots: list[int], vec, p: int) -> bool:
    """Membership test against an RREF basis."""
    v = np.array(vec, dtype=np.int64) % p
    for row, c in zip(basis_rref, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return not v.any()


def reduce(basis_rref: np.ndarray, pivots: list[int], vec, p: int) -> np.ndarray:
    v = np.array(vec, dtype=np.int64) % p
    for row, c in zip(basis_rref, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return v


def solve_left(basis, vec, p: int) -> np.ndarray | None:
    """Coefficients ``c`` with ``c @ basis = vec``, or None."""
    b = np.asarray(basis, dtype=np.int64)
    k = b.shape[0]
    aug = np.concatenate([b.T, np.asarray(vec, dtype=np.int64)[:, None]], axis=1) % p
    r, piv = rref(aug, p)
    if k in piv:
        return None
    c = np.zeros(k, dtype=np.int64)
    for row, pc in enumerate(piv):
        c[pc] = r[row, k]
    return c


def complement_basis(sub_rref: np.ndarray, sub_piv: list[int], sup_rows, p: int) -> np.ndarray:
    """Rows of ``sup_rows`` (in order) extending a basis of the subspace to
    one of the larger space."""
    rows = [r for r in np.asarray(sub_rref, dtype=np.int64)]
    out = []
    cur, piv = (np.array(rows), list(sub_piv)) if rows else (np.zeros((0, 0), dtype=np.int64), [])
    for v in np.asarray(sup_rows, dtype=np.int64):
        if len(rows) and in_rowspace(cur, piv, v, p):
            continue
        out.append(v % p)
        rows.append(v % p)
        cur, piv = rref(np.array(rows), p)
    n = np.asarray(sup_rows).shape[1] if np.asarray(sup_rows).ndim == 2 else 0
    return np.array(out, dtype=np.int64).reshape(len(out), n)
