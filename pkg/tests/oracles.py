"""Brute-force reference implementations used only by the tests.

Everything here works from first principles (explicit polynomial arithmetic
via sympy, plain enumeration of vectors) so that it shares no code paths
with the package's table-driven field or the Gray-code kernels.
"""

from __future__ import annotations

import functools
import itertools

from sympy import GF, Poly, symbols

X = symbols("x")


def poly_of(x: int, p: int, m: int) -> Poly:
    digits = [(x // p**i) % p for i in range(m)]
    return Poly(list(reversed(digits)), X, domain=GF(p))


def int_of(poly: Poly, p: int) -> int:
    coeffs = [int(c) % p for c in reversed(poly.all_coeffs())]
    return sum(c * p**i for i, c in enumerate(coeffs))


def modulus_poly(field) -> Poly:
    return Poly(list(reversed(field.irreducible)), X, domain=GF(field.p))


def _mul(field, a: int, b: int) -> int:
    f = modulus_poly(field)
    prod = (poly_of(a, field.p, field.m) * poly_of(b, field.p, field.m)).rem(f)
    return int_of(prod, field.p)


def _add(field, a: int, b: int) -> int:
    return int_of(poly_of(a, field.p, field.m) + poly_of(b, field.p, field.m), field.p)


@functools.lru_cache(maxsize=None)
def _tables(field):
    q = field.order
    return ([[_mul(field, a, b) for b in range(q)] for a in range(q)],
            [[_add(field, a, b) for b in range(q)] for a in range(q)])


def mul(field, a: int, b: int) -> int:
    return _tables(field)[0][a][b]


def add(field, a: int, b: int) -> int:
    return _tables(field)[1][a][b]


def power(field, a: int, e: int) -> int:
    out = 1
    for _ in range(e):
        out = mul(field, out, a)
    return out


def trace_to_prime(field, x: int) -> int:
    """``x + x^p + ... + x^{p^{m-1}}`` by repeated multiplication."""
    total, y = 0, x
    for _ in range(field.m):
        total = add(field, total, y)
        y = power(field, y, field.p)
    return total


def irreducible(coeffs: list[int], p: int) -> bool:
    """``coeffs`` low to high."""
    return Poly(list(reversed(coeffs)), X, domain=GF(p)).is_irreducible


def all_vectors(q: int, length: int):
    return itertools.product(range(q), repeat=length)


def symplectic_form(field, u, v) -> int:
    n = len(u) // 2
    s = 0
    for k in range(n):
        s = add(field, s, mul(field, u[n + k], v[k]))
        neg = mul(field, v[n + k], u[k])
        s = add(field, s, mul(field, field.p - 1, neg))
    return trace_to_prime(field, s)


def span(field, gens: list[list[int]]) -> set[tuple[int, ...]]:
    """All F_p combinations of ``gens``."""
    p = field.p
    out = set()
    length = len(gens[0]) if gens else 0
    for coeffs in itertools.product(range(p), repeat=len(gens)):
        v = [0] * length
        for c, g in zip(coeffs, gens):
            for _ in range(c):
                v = [add(field, a, b) for a, b in zip(v, g)]
        out.add(tuple(v))
    return out


def symplectic_dual(field, n: int, gens: list[list[int]]) -> set[tuple[int, ...]]:
    return {v for v in all_vectors(field.order, 2 * n)
            if all(symplectic_form(field, list(v), g) == 0 for g in gens)}


def swt(v) -> int:
    n = len(v) // 2
    return sum(1 for k in range(n) if v[k] or v[n + k])


def swt_histogram(words, n: int) -> list[int]:
    h = [0] * (n + 1)
    for w in words:
        h[swt(w)] += 1
    return h


def hamming_histogram(words, n: int) -> list[int]:
    h = [0] * (n + 1)
    for w in words:
        h[sum(1 for x in w if x)] += 1
    return h
