# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled weight-histogram kernel.

Walks an F_p span in modular Gray-code order: step t adds basis row
``nu_p(t)`` once, so every word is visited with one sparse row update.
"""

from libc.stdlib cimport calloc, malloc, free


def span_histogram(const unsigned char[:, ::1] basis, int p,
                   const int[::1] symbol, int nsym,
                   const unsigned char[::1] offset, long long[::1] hist):
    """Add the symbol-weight histogram of ``offset + span(basis)`` to ``hist``."""
    cdef Py_ssize_t r = basis.shape[0], n = basis.shape[1]
    cdef Py_ssize_t i, j, c, k
    cdef int *nnz = <int *> malloc((r + 1) * sizeof(int))
    cdef int *cols = <int *> malloc((r * n + 1) * sizeof(int))
    cdef unsigned char *vals = <unsigned char *> malloc(r * n + 1)
    cdef unsigned char *word = <unsigned char *> malloc(n + 1)
    cdef int *count = <int *> calloc(nsym + 1, sizeof(int))
    cdef int *ctr = <int *> calloc(r + 1, sizeof(int))
    cdef int weight = 0, old, new, s
    if not (nnz and cols and vals and word and count and ctr):
        free(nnz); free(cols); free(vals); free(word); free(count); free(ctr)
        raise MemoryError()
    with nogil:
        for i in range(r):
            k = 0
            for j in range(n):
                if basis[i, j]:
                    cols[i * n + k] = <int> j
                    vals[i * n + k] = basis[i, j]
                    k += 1
            nnz[i] = <int> k
        for j in range(n):
            word[j] = offset[j]
            if word[j]:
                count[symbol[j]] += 1
        for s in range(nsym):
            if count[s]:
                weight += 1
        hist[weight] += 1
        while True:
            i = 0
            while i < r and ctr[i] == p - 1:
                ctr[i] = 0
                i += 1
            if i == r:
                break
            ctr[i] += 1
            for k in range(nnz[i]):
                c = cols[i * n + k]
                old = word[c]
                new = old + vals[i * n + k]
                if new >= p:
                    new -= p
                word[c] = <unsigned char> new
                s = symbol[c]
                if old == 0:
                    count[s] += 1
                    if count[s] == 1:
                        weight += 1
                elif new == 0:
                    count[s] -= 1
                    if count[s] == 0:
                        weight -= 1
            hist[weight] += 1
    free(nnz); free(cols); free(vals); free(word); free(count); free(ctr)
