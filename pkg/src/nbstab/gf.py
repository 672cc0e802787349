"""Finite fields GF(p^m) in a polynomial basis, plus polynomials over them.

Elements are plain Python ints: the element ``c_0 + c_1 x + ... + c_{m-1}
x^{m-1}`` is encoded as ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.  The prime
subfield is therefore the set of ints ``0 .. p-1``.

Fields are cached, so ``field_create(2, 4) is field_create(2, 4)`` and
elements of the same field can be compared by identity of their context.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZeroPoly,
    FieldTooLarge,
    MixedFields,
    NonPrime,
    NotASubfield,
    NotCoprime,
)

MAX_ORDER = 1 << 24
TABLE_LIMIT = 1 << 20
_ADD_TABLE_LIMIT = 1024
_TRIAL_DIVISION_MAX_DEGREE = 12


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^m``; raises NonPrime when ``q`` is not a prime power."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NonPrime(f"{q} is not a prime power")
    return p, m


def multiplicative_order(a: int, n: int) -> int:
    """Order of ``a`` modulo ``n`` (``n >= 1``, gcd(a, n) = 1)."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


# ---------------------------------------------------------------------------
# polynomials over F_p as coefficient lists (low -> high); used internally
# ---------------------------------------------------------------------------
def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] * inv_lead % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        _trim(r)
    return q, r


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def _ppowmod(base: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pdivmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), f, p)[1]
        base = _pdivmod(_pmul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _undigits(d: Iterable[int], p: int) -> int:
    x = 0
    for c in reversed(list(d)):
        x = x * p + c
    return x


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Trial division by every monic polynomial of degree at most deg/2 for
    small degrees; Rabin's test beyond that.
    """
    f = _trim(list(f))
    m = len(f) - 1
    if m <= 1:
        return m == 1
    if m <= _TRIAL_DIVISION_MAX_DEGREE:
        for k in range(1, m // 2 + 1):
            for c in range(p**k):
                if not _pdivmod(f, _digits(c, p, k) + [1], p)[1]:
                    return False
        return True
    x = [0, 1]
    if _trim([(a - b) % p for a, b in zip(_ppowmod(x, p**m, f, p) + [0, 0], x + [0] * m)]):
        return False
    for r in prime_factors(m):
        h = _ppowmod(x, p ** (m // r), f, p) + [0, 0]
        h[1] = (h[1] - 1) % p
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordering by the integer whose
    base-p digits are the lower coefficients."""
    for c in range(p**m):
        f = _digits(c, p, m) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------
class Field:
    """GF(p^m) with elements encoded as ints.

    Log/antilog tables are built lazily (thread-safe) for fields of at most
    2^20 elements; larger fields fall back to polynomial multiplication.
    """

    def __init__(self, p: int, m: int, irreducible: Sequence[int]):
        self.p = p
        self.m = m
        self.order = p**m
        self.irreducible = tuple(irreducible)
        self._pw = [p**i for i in range(m)]
        self._lock = threading.Lock()
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._exp_np: np.ndarray | None = None
        self._log_np: np.ndarray | None = None
        self._add_np: np.ndarray | None = None
        self._primitive: int | None = None

    # identity ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.irreducible == other.irreducible
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.irreducible))

    @property
    def q(self) -> int:
        return self.order

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "irreducible": list(self.irreducible)}

    @staticmethod
    def from_json(obj: dict) -> "Field":
        return field_create(obj["p"], obj["m"], obj.get("irreducible"))

    def elements(self) -> range:
        return range(self.order)

    # coefficient vectors ------------------------------------------------------
    def coeffs(self, x: int) -> list[int]:
        return _digits(x, self.p, self.m)

    def from_coeffs(self, c: Sequence[int]) -> int:
        c = list(c)
        if len(c) > self.m:
            raise ValueError("too many coefficients")
        return _undigits([v % self.p for v in c], self.p)

    def digits_array(self, arr) -> np.ndarray:
        """Expand an int array into a trailing axis of m base-p digits."""
        a = np.asarray(arr, dtype=np.int64)
        pw = np.array(self._pw, dtype=np.int64)
        return (a[..., None] // pw) % self.p

    def from_digits_array(self, d) -> np.ndarray:
        pw = np.array(self._pw, dtype=np.int64)
        return (np.asarray(d, dtype=np.int64) % self.p) @ pw

    # addition -------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.order <= _ADD_TABLE_LIMIT:
            return int(self._add_table()[a, b])
        p, r, w = self.p, 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            r += (da + db) % p * w
            w *= p
        return r

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, r, w = self.p, 0, 1
        while a:
            a, d = divmod(a, p)
            r += (-d) % p * w
            w *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scalar(self, c: int, a: int) -> int:
        """Multiply by an element ``c`` of the prime field."""
        c %= self.p
        if c == 0:
            return 0
        p, r, w = self.p, 0, 1
        while a:
            a, d = divmod(a, p)
            r += d * c % p * w
            w *= p
        return r

    def _add_table(self) -> np.ndarray:
        if self._add_np is None:
            with self._lock:
                if self._add_np is None:
                    d = self.digits_array(np.arange(self.order))
                    s = (d[:, None, :] + d[None, :, :]) % self.p
                    self._add_np = self.from_digits_array(s)
        return self._add_np

    # multiplication ---------------------------------------------------------
    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            f = _undigits(self.irreducible, 2)
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= f
            return r
        prod = _pmul(_digits(a, p, m), _digits(b, p, m), p)
        return _undigits(_pdivmod(prod, self.irreducible, p)[1], p)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    @property
    def primitive_element(self) -> int:
        """Smallest element (as an int) generating the multiplicative group."""
        if self._primitive is None:
            n = self.order - 1
            if n == 1:
                self._primitive = 1
            else:
                factors = prime_factors(n)
                for g in range(2, self.order):
                    if all(self._pow_slow(g, n // r) != 1 for r in factors):
                        self._primitive = g
                        break
        return self._primitive

    def _tables(self) -> bool:
        if self._exp is not None:
            return True
        if self.order > TABLE_LIMIT:
            return False
        with self._lock:
            if self._exp is None:
                self._build_tables()
        return True

    def _build_tables(self) -> None:
        p, m, n = self.p, self.m, self.order - 1
        g = self.primitive_element
        # matrix of multiplication by g acting on coefficient columns
        mg = np.array(
            [_digits(self._mul_slow(g, p**j), p, m) for j in range(m)], dtype=np.int64
        ).T
        block = max(1, math.isqrt(n))
        first = np.zeros((block, m), dtype=np.int64)
        v = np.zeros(m, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            first[i] = v
            v = mg @ v % p
        # v now holds g^block; its multiplication matrix advances a whole block
        step = np.array(
            [_digits(self._mul_slow(self.from_digits_array(v).item(), p**j), p, m) for j in range(m)],
            dtype=np.int64,
        )
        blocks = [first]
        total = block
        cur = first
        while total < n:
            cur = cur @ step % p
            blocks.append(cur)
            total += block
        powers = self.from_digits_array(np.concatenate(blocks)[:n])
        exp_np = np.concatenate([powers, powers]).astype(np.int64)
        log_np = np.full(self.order, -1, dtype=np.int64)
        log_np[powers] = np.arange(n)
        self._exp_np, self._log_np = exp_np, log_np
        self._log = log_np.tolist()
        self._exp = exp_np.tolist()

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._tables():
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        if self._tables():
            return self._exp[self._log[a] * e % (self.order - 1)]
        return self._pow_slow(a, e % (self.order - 1))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        if self._tables():
            return self._log[a]
        g, x, k = self.primitive_element, 1, 0  # pragma: no cover - huge fields
        while x != a:
            x = self._mul_slow(x, g)
            k += 1
        return k

    # vectorised helpers ---------------------------------------------------------
    def mul_array(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._tables():
            a, b = np.broadcast_arrays(a, b)
            out = self._exp_np[np.maximum(self._log_np[a], 0) + np.maximum(self._log_np[b], 0)]
            out[(a == 0) | (b == 0)] = 0
            return out
        f = np.vectorize(self.mul, otypes=[np.int64])
        return f(a, b)

    def add_array(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.from_digits_array(self.digits_array(a) + self.digits_array(b))

    def neg_array(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self.from_digits_array(-self.digits_array(a))

    # Frobenius and traces -------------------------------------------------------
    def frobenius(self, x: int, k: int = 1) -> int:
        """``x^(p^k)``."""
        return self.pow(x, self.p**k)

    def in_subfield(self, x: int, degree: int) -> bool:
        return self.pow(x, self.p**degree) == x

    def trace(self, x: int, sub_degree: int = 1, degree: int | None = None) -> int:
        """Trace from GF(p^degree) down to GF(p^sub_degree).

        ``degree`` defaults to the degree of this field; when smaller, ``x``
        must lie in that subfield.  The result is an element of this field.
        """
        degree = self.m if degree is None else degree
        if degree % sub_degree or self.m % degree:
            raise NotASubfield(f"GF(p^{sub_degree}) is not a subfield of GF(p^{degree})")
        step = self.p**sub_degree
        total, y = 0, x
        for _ in range(degree // sub_degree):
            total = self.add(total, y)
            y = self.pow(y, step)
        return total


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int, irreducible: tuple[int, ...]) -> Field:
    return Field(p, m, irreducible)


def field_create(p: int, m: int, irreducible: Sequence[int] | None = None) -> Field:
    """Create (or fetch from cache) GF(p^m).

    The default modulus is the smallest monic irreducible polynomial of
    degree m in the ordering used by :func:`smallest_irreducible`.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("degree must be positive")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"{p}^{m} exceeds {MAX_ORDER}")
    if irreducible is None:
        irreducible = _default_irreducible(p, m)
    else:
        irreducible = tuple(int(c) % p for c in irreducible)
        if len(irreducible) != m + 1 or irreducible[-1] != 1 or not is_irreducible(irreducible, p):
            raise ValueError("modulus must be monic irreducible of degree m")
    return _field_cached(p, m, tuple(irreducible))


@lru_cache(maxsize=None)
def _default_irreducible(p: int, m: int) -> tuple[int, ...]:
    return smallest_irreducible(p, m)


def field_of_order(q: int) -> Field:
    return field_create(*prime_power(q))


# ---------------------------------------------------------------------------
# subfields
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Embedding:
    """Field homomorphism ``base -> ext``, with its inverse on the image."""

    base: Field
    ext: Field
    forward: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.forward[x]

    @property
    def inverse(self) -> dict[int, int]:
        return _inverse_map(self)

    def back(self, y: int) -> int:
        try:
            return self.inverse[y]
        except KeyError:
            raise NotASubfield(f"{y} does not lie in the embedded {self.base}") from None


@lru_cache(maxsize=None)
def _inverse_map(e: Embedding) -> dict[int, int]:
    return {y: x for x, y in enumerate(e.forward)}


def subfield_elements(ext: Field, degree: int) -> list[int]:
    """Elements of the unique subfield of ``ext`` of degree ``degree``, sorted."""
    if ext.m % degree:
        raise NotASubfield(f"no subfield of degree {degree} in {ext}")
    n = ext.order - 1
    size = ext.p**degree
    g = ext.pow(ext.primitive_element, n // (size - 1))
    out, x = [0], 1
    for _ in range(size - 1):
        out.append(x)
        x = ext.mul(x, g)
    return sorted(out)


@lru_cache(maxsize=None)
def embedding(base: Field, ext: Field) -> Embedding:
    """Embed ``base`` into ``ext`` by sending x to the smallest root of the
    modulus of ``base`` inside ``ext``.  Deterministic and cached."""
    if base.p != ext.p or ext.m % base.m:
        raise NotASubfield(f"{base} is not a subfield of {ext}")
    if base == ext:
        return Embedding(base, ext, tuple(range(base.order)))
    f = base.irreducible
    root = None
    for s in subfield_elements(ext, base.m):
        acc = 0
        for c in reversed(f):
            acc = ext.add(ext.mul(acc, s), c)
        if acc == 0:
            root = s
            break
    assert root is not None
    powers = [1]
    for _ in range(base.m - 1):
        powers.append(ext.mul(powers[-1], root))
    forward = []
    for x in range(base.order):
        y = 0
        for c, w in zip(base.coeffs(x), powers):
            if c:
                y = ext.add(y, ext.scalar(c, w))
        forward.append(y)
    return Embedding(base, ext, tuple(forward))


def nth_root_of_unity(field: Field, n: int) -> tuple[Field, int]:
    """Smallest extension GF(q^t) of ``field`` containing a primitive n-th
    root of unity, and such a root (a fixed power of the primitive element)."""
    q = field.order
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    t = multiplicative_order(q, n)
    if q**t > MAX_ORDER:
        raise FieldTooLarge(f"splitting field of x^{n}-1 over GF({q}) is too large")
    ext = field_create(field.p, field.m * t)
    beta = ext.pow(ext.primitive_element, (ext.order - 1) // n)
    return ext, beta


def normal_pair(field: Field) -> int:
    """Smallest beta in GF(q^2) such that beta and beta^q are linearly
    independent over GF(q).  ``field`` must have even degree."""
    if field.m % 2:
        raise NotASubfield(f"{field} is not a quadratic extension")
    q = field.p ** (field.m // 2)
    for b in range(1, field.order):
        bq = field.pow(b, q)
        if field.pow(b, (q - 1) ** 2) != 1 and field.sub(field.mul(bq, bq), field.mul(b, b)) != 0:
            return b
    raise AssertionError("no normal pair")  # pragma: no cover


# ---------------------------------------------------------------------------
# polynomials over a field
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients (low to high) in ``field``."""

    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        _trim(c)
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        F, acc = self.field, 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def _check(self, other: "Poly") -> Field:
        if self.field != other.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        return self.field

    def __add__(self, other: "Poly") -> "Poly":
        F = self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Poly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, tuple(out))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        F = self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        inv_lead = F.inv(b[-1])
        q = [0] * max(len(r) - len(b) + 1, 0)
        while len(r) >= len(b):
            c = F.mul(r[-1], inv_lead)
            shift = len(r) - len(b)
            q[shift] = c
            for i, bi in enumerate(b):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, bi))
            _trim(r)
        return Poly(F, tuple(q)), Poly(F, tuple(r))

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return Poly(F, tuple(F.mul(c, inv) for c in self.coeffs))

    def map(self, fn) -> "Poly":
        """Apply a coefficient map, e.g. an embedding or Frobenius."""
        return Poly(self.field, tuple(fn(c) for c in self.coeffs))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_from_roots(field: Field, roots: Iterable[int]) -> Poly:
    """Monic ``prod (x - r)``."""
    g = Poly(field, (1,))
    for r in roots:
        g = g * Poly(field, (field.neg(r), 1))
    return g
