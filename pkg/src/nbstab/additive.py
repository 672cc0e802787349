"""Additive (F_p-linear) codes and the forms used to take their duals.

Three ambient spaces are supported:

``symplectic``
    vectors ``(a|b)`` in F_q^{2n}; weight is the symplectic weight (number of
    positions k with ``(a_k, b_k) != (0, 0)``).
``qsquare``
    vectors in F_{q^2}^n with Hamming weight.
``classical``
    vectors in F_q^n with Hamming weight.

A code is stored as a reduced row-echelon basis over F_p after expanding
each field symbol into its ``m`` polynomial-basis coordinates.  Every dual
(symplectic, trace-alternating, hermitian, euclidean) is computed as the
F_p-kernel of a block Gram matrix built from traces.
"""

from __future__ import annotations

import enum
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels, linalg
from .errors import CodeTooLarge, MixedAmbient, NotASubcode, NotLinear
from .gf import Field, embedding, field_create, normal_pair

FLAVORS = ("symplectic", "qsquare", "classical")
DEFAULT_FORM = {"symplectic": "symplectic", "qsquare": "alternating", "classical": "euclidean"}


class Unbounded(enum.Enum):
    """Minimum over an empty set of words."""

    INFINITY = "inf"

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"


INFINITY = Unbounded.INFINITY


# ---------------------------------------------------------------------------
# field-level helpers on single vectors
# ---------------------------------------------------------------------------
def symplectic_weight(vec: Sequence[int]) -> int:
    n = len(vec) // 2
    return sum(1 for k in range(n) if vec[k] or vec[n + k])


def hamming_weight(vec: Sequence[int]) -> int:
    return sum(1 for x in vec if x)


def symplectic_form(field: Field, u: Sequence[int], v: Sequence[int]) -> int:
    """``tr_{q/p}(b . a' - b' . a)`` for ``u = (a|b)``, ``v = (a'|b')``."""
    n = len(u) // 2
    s = 0
    for k in range(n):
        s = field.add(s, field.mul(u[n + k], v[k]))
        s = field.sub(s, field.mul(v[n + k], u[k]))
    return field.trace(s)


def hermitian_product(field: Field, x: Sequence[int], y: Sequence[int]) -> int:
    """``sum x_k^q y_k`` in GF(q^2)."""
    q = field.p ** (field.m // 2)
    s = 0
    for a, b in zip(x, y):
        s = field.add(s, field.mul(field.pow(a, q), b))
    return s


def euclidean_product(field: Field, x: Sequence[int], y: Sequence[int]) -> int:
    s = 0
    for a, b in zip(x, y):
        s = field.add(s, field.mul(a, b))
    return s


def _alt_scale(field: Field, beta: int) -> int:
    q = field.p ** (field.m // 2)
    b2 = field.mul(beta, beta)
    return field.inv(field.sub(field.pow(b2, q), b2))


def trace_alternating(field: Field, beta: int, v: Sequence[int], w: Sequence[int]) -> int:
    """``tr_{q/p}((v . w^q - v^q . w) / (beta^{2q} - beta^2))``."""
    q = field.p ** (field.m // 2)
    s = 0
    for a, b in zip(v, w):
        s = field.add(s, field.sub(field.mul(a, field.pow(b, q)), field.mul(field.pow(a, q), b)))
    return field.trace(field.mul(s, _alt_scale(field, beta)), 1, field.m // 2)


def phi(small: Field, big: Field, beta: int, vec: Sequence[int]) -> list[int]:
    """Map ``(a|b)`` in F_q^{2n} to ``beta a + beta^q b`` in F_{q^2}^n."""
    emb = embedding(small, big)
    n = len(vec) // 2
    bq = big.pow(beta, small.order)
    return [big.add(big.mul(beta, emb(vec[k])), big.mul(bq, emb(vec[n + k]))) for k in range(n)]


def phi_inverse(small: Field, big: Field, beta: int, vec: Sequence[int]) -> list[int]:
    emb = embedding(small, big)
    q = small.order
    bq = big.pow(beta, q)
    inv_det = big.inv(big.sub(big.mul(beta, beta), big.mul(bq, bq)))
    a, b = [], []
    for v in vec:
        vq = big.pow(v, q)
        a.append(emb.back(big.mul(big.sub(big.mul(v, beta), big.mul(vq, bq)), inv_det)))
        b.append(emb.back(big.mul(big.sub(big.mul(vq, beta), big.mul(v, bq)), inv_det)))
    return a + b


# ---------------------------------------------------------------------------
# trace Gram blocks
# ---------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _trace_block(field: Field) -> np.ndarray:
    """``T[i, j] = tr_{F/F_p}(x^i x^j)``."""
    m, p = field.m, field.p
    basis = [p**i for i in range(m)]
    return np.array([[field.trace(field.mul(a, b)) for b in basis] for a in basis], dtype=np.int64)


@lru_cache(maxsize=None)
def _hermitian_block(field: Field) -> np.ndarray:
    m, p = field.m, field.p
    q = p ** (m // 2)
    basis = [p**i for i in range(m)]
    return np.array(
        [[field.trace(field.mul(field.pow(a, q), b)) for b in basis] for a in basis], dtype=np.int64
    )


@lru_cache(maxsize=None)
def _alternating_block(field: Field, beta: int) -> np.ndarray:
    m, p = field.m, field.p
    basis = [p**i for i in range(m)]
    return np.array(
        [[trace_alternating(field, beta, [a], [b]) for b in basis] for a in basis], dtype=np.int64
    )


# ---------------------------------------------------------------------------
# the code
# ---------------------------------------------------------------------------
class AdditiveCode:
    """An F_p-linear code in one of the ambient spaces listed in the module doc.

    Parameters
    ----------
    field:
        Symbol field: F_q for ``symplectic`` and ``classical``, F_{q^2} for
        ``qsquare``.
    flavor:
        Ambient space name.
    n:
        Length in symbols (a symplectic vector has ``2n`` field entries).
    generators:
        Field-element vectors whose F_p-span is the code.
    beta:
        Normal-pair element used by the trace-alternating form (``qsquare``
        only); defaults to :func:`~nbstab.gf.normal_pair`.
    """

    def __init__(self, field: Field, flavor: str, n: int, generators: Iterable[Sequence[int]] = (),
                 beta: int | None = None):
        rows = [self._expand(field, flavor, n, g) for g in generators]
        digits = np.array(rows, dtype=np.int64).reshape(len(rows), self._ncols(field, flavor, n))
        self._init(field, flavor, n, digits, beta)

    # construction helpers ----------------------------------------------------------
    @staticmethod
    def _ncols(field: Field, flavor: str, n: int) -> int:
        return (2 if flavor == "symplectic" else 1) * n * field.m

    @staticmethod
    def _expand(field: Field, flavor: str, n: int, vec) -> np.ndarray:
        width = 2 if flavor == "symplectic" else 1
        vec = list(vec)
        if len(vec) != width * n:
            raise MixedAmbient(f"vector of length {len(vec)} in a {flavor} space of length {n}")
        if any(not 0 <= x < field.order for x in vec):
            raise ValueError("entries must be field elements")
        return field.digits_array(vec).reshape(-1)

    def _init(self, field, flavor, n, digits, beta):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.field = field
        self.flavor = flavor
        self.n = n
        self.p = field.p
        if flavor == "qsquare":
            if field.m % 2:
                raise ValueError("qsquare codes need a field of even degree")
            self.beta = normal_pair(field) if beta is None else beta
        else:
            self.beta = None
        if digits.shape[0]:
            self.basis, self.pivots = linalg.rref(digits, self.p)
        else:
            self.basis = np.zeros((0, self.ncols), dtype=np.int64)
            self.pivots = []
        self._hist = None

    @classmethod
    def from_digits(cls, field: Field, flavor: str, n: int, digits, beta: int | None = None) -> "AdditiveCode":
        obj = cls.__new__(cls)
        digits = np.asarray(digits, dtype=np.int64).reshape(-1, cls._ncols(field, flavor, n))
        obj._init(field, flavor, n, digits % field.p, beta)
        return obj

    @classmethod
    def linear(cls, field: Field, flavor: str, n: int, generators: Iterable[Sequence[int]],
               beta: int | None = None) -> "AdditiveCode":
        """F-linear span of ``generators`` (F = symbol field)."""
        scalars = [field.p**j for j in range(field.m)]
        rows = []
        for g in generators:
            for s in scalars:
                rows.append([field.mul(s, x) for x in g])
        return cls(field, flavor, n, rows, beta)

    def _like(self, digits) -> "AdditiveCode":
        return AdditiveCode.from_digits(self.field, self.flavor, self.n, digits, self.beta)

    # basic attributes ------------------------------------------------------------
    @property
    def m(self) -> int:
        return self.field.m

    @property
    def width(self) -> int:
        return 2 if self.flavor == "symplectic" else 1

    @property
    def ncols(self) -> int:
        return self.width * self.n * self.field.m

    @property
    def dim(self) -> int:
        """Dimension over F_p."""
        return len(self.pivots)

    @property
    def size(self) -> int:
        return self.p**self.dim

    @cached_property
    def symbol_map(self) -> np.ndarray:
        return (np.arange(self.ncols) // self.field.m) % self.n

    def __repr__(self) -> str:
        return f"AdditiveCode({self.field}, {self.flavor}, n={self.n}, |C|={self.p}^{self.dim})"

    def same_ambient(self, other: "AdditiveCode") -> bool:
        return self.field == other.field and self.flavor == other.flavor and self.n == other.n

    def _require_same(self, other: "AdditiveCode") -> None:
        if not self.same_ambient(other):
            raise MixedAmbient(f"{self!r} and {other!r} live in different spaces")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdditiveCode)
            and self.same_ambient(other)
            and self.dim == other.dim
            and np.array_equal(self.basis, other.basis)
        )

    __hash__ = None

    # vectors -----------------------------------------------------------------------
    def to_digits(self, vec) -> np.ndarray:
        return self._expand(self.field, self.flavor, self.n, vec)

    def to_vector(self, digits) -> list[int]:
        d = np.asarray(digits, dtype=np.int64).reshape(-1, self.field.m)
        return [int(x) for x in self.field.from_digits_array(d)]

    def generators(self) -> list[list[int]]:
        """Field vectors of the F_p basis."""
        return [self.to_vector(r) for r in self.basis]

    def contains(self, vec) -> bool:
        return self.contains_digits(self.to_digits(vec))

    def contains_digits(self, digits) -> bool:
        if self.dim == 0:
            return not (np.asarray(digits) % self.p).any()
        return linalg.in_rowspace(self.basis, self.pivots, digits, self.p)

    def is_subcode_of(self, other: "AdditiveCode") -> bool:
        self._require_same(other)
        return all(other.contains_digits(r) for r in self.basis)

    def subcode_witness(self, other: "AdditiveCode") -> list[int] | None:
        """A basis vector of ``self`` outside ``other`` (None if contained)."""
        self._require_same(other)
        for r in self.basis:
            if not other.contains_digits(r):
                return self.to_vector(r)
        return None

    def span_with(self, other: "AdditiveCode") -> "AdditiveCode":
        self._require_same(other)
        return self._like(np.concatenate([self.basis, other.basis]))

    def scale_vector(self, vec, s: int) -> list[int]:
        return [self.field.mul(s, x) for x in vec]

    def is_linear(self) -> bool:
        """Closed under multiplication by every element of the symbol field."""
        if self.field.m == 1:
            return True
        x = self.field.p  # the element ``x`` generates the field over F_p
        return all(self.contains(self.scale_vector(v, x)) for v in self.generators())

    # forms and duals ---------------------------------------------------------------
    def form_matrix(self, form: str | None = None) -> np.ndarray:
        """F_p matrix ``G`` with ``form(u, v) = u G v^T`` on digit vectors."""
        form = form or DEFAULT_FORM[self.flavor]
        F, n = self.field, self.n
        eye = np.eye(n, dtype=np.int64)
        if form == "symplectic":
            if self.flavor != "symplectic":
                raise MixedAmbient("symplectic form needs a symplectic code")
            t = np.kron(eye, _trace_block(F))
            z = np.zeros_like(t)
            return np.block([[z, -t], [t, z]]) % self.p
        if form == "euclidean":
            if self.flavor == "symplectic":
                raise MixedAmbient("euclidean form is defined on F^n only")
            return np.kron(eye, _trace_block(F))
        if self.flavor != "qsquare":
            raise MixedAmbient(f"{form} form needs a qsquare code")
        if form == "hermitian":
            return np.kron(eye, _hermitian_block(F))
        if form == "alternating":
            return np.kron(eye, _alternating_block(F, self.beta))
        raise ValueError(f"unknown form {form!r}")

    def gram(self, other: "AdditiveCode | None" = None, form: str | None = None) -> np.ndarray:
        other = self if other is None else other
        self._require_same(other)
        return self.basis @ self.form_matrix(form) @ other.basis.T % self.p

    def dual(self, form: str | None = None) -> "AdditiveCode":
        """Dual with respect to ``form``.

        The euclidean and hermitian duals are only meaningful for codes that
        are linear over the symbol field; for those the trace form gives the
        same dual as the field-valued product.
        """
        form = form or DEFAULT_FORM[self.flavor]
        if form in ("euclidean", "hermitian") and not self.is_linear():
            raise NotLinear(f"{form} dual needs a linear code")
        g = self.form_matrix(form)
        if self.dim == 0:
            return self._like(np.eye(self.ncols, dtype=np.int64))
        ker = linalg.nullspace(self.basis @ g % self.p, self.p)
        return self._like(ker)

    def self_orthogonality_witness(self, form: str | None = None) -> tuple[list[int], list[int]] | None:
        """A pair of basis vectors with nonzero form value, or None."""
        gm = self.gram(form=form)
        nz = np.argwhere(gm)
        if len(nz) == 0:
            return None
        i, j = nz[0]
        return self.to_vector(self.basis[i]), self.to_vector(self.basis[j])

    def is_self_orthogonal(self, form: str | None = None) -> bool:
        return self.self_orthogonality_witness(form) is None

    # weights -----------------------------------------------------------------------
    def weight_histogram(self) -> np.ndarray:
        """``A_j`` for j = 0..n by exhaustive enumeration (at most 2^24 words)."""
        if self._hist is None:
            if self.size > kernels.MAX_ENUMERATION:
                raise CodeTooLarge(f"{self.size} words exceed the enumeration limit")
            basis = self.basis if self.dim else np.zeros((0, self.ncols), dtype=np.int64)
            self._hist = kernels.span_histogram(basis, self.p, self.symbol_map, self.n)
        return self._hist

    def weight_enumerator(self) -> list[int]:
        return [int(x) for x in self.weight_histogram()]

    def min_weight(self) -> int | Unbounded:
        """Smallest weight of a nonzero word."""
        h = self.weight_histogram()
        nz = np.nonzero(h[1:])[0]
        return int(nz[0]) + 1 if len(nz) else INFINITY

    def min_weight_in_difference(self, sub: "AdditiveCode") -> int | Unbounded:
        """Smallest weight in ``self`` minus ``sub``; needs ``sub`` inside ``self``."""
        w = sub.subcode_witness(self)
        if w is not None:
            raise NotASubcode(f"vector {w} of the subtrahend is not in the code")
        diff = self.weight_histogram() - sub.weight_histogram()
        nz = np.nonzero(diff)[0]
        return int(nz[0]) if len(nz) else INFINITY

    def words(self):
        """Iterate over all words as digit arrays, in chunks (rows)."""
        if self.size > kernels.MAX_ENUMERATION:
            raise CodeTooLarge(f"{self.size} words exceed the enumeration limit")
        yield from kernels.iter_span(self.basis, self.p)

    def word_weights(self, digits: np.ndarray) -> np.ndarray:
        """Weights of a batch of digit rows."""
        d = np.asarray(digits).reshape(len(digits), self.width, self.n, self.field.m)
        return d.any(axis=3).any(axis=1).sum(axis=1)

    # coordinate operations -------------------------------------------------------
    def _digit_cols(self, symbols: Sequence[int]) -> np.ndarray:
        m = self.field.m
        cols = []
        for half in range(self.width):
            for s in symbols:
                base = (half * self.n + s) * m
                cols.extend(range(base, base + m))
        return np.array(cols, dtype=np.int64)

    def restrict(self, symbols: Sequence[int]) -> "AdditiveCode":
        """Keep only the given coordinates (in the given order)."""
        cols = self._digit_cols(symbols)
        return AdditiveCode.from_digits(self.field, self.flavor, len(symbols), self.basis[:, cols], self.beta)

    def shorten(self, symbols: Sequence[int]) -> "AdditiveCode":
        """Words vanishing on ``symbols``, with those coordinates removed."""
        cols = self._digit_cols(symbols)
        keep = [k for k in range(self.n) if k not in set(symbols)]
        if self.dim == 0:
            return AdditiveCode.from_digits(self.field, self.flavor, len(keep), np.zeros((0, 0)), self.beta)
        coeffs = linalg.nullspace(self.basis[:, cols].T % self.p, self.p, self.dim)
        sub = coeffs @ self.basis % self.p if len(coeffs) else np.zeros((0, self.ncols), dtype=np.int64)
        kept = self._digit_cols(keep)
        return AdditiveCode.from_digits(self.field, self.flavor, len(keep), sub[:, kept], self.beta)

    # conversions -------------------------------------------------------------------
    def to_qsquare(self, beta: int | None = None) -> "AdditiveCode":
        """Image of a symplectic code under ``(a|b) -> beta a + beta^q b``."""
        if self.flavor != "symplectic":
            raise MixedAmbient("expected a symplectic code")
        big = field_create(self.p, 2 * self.field.m)
        beta = normal_pair(big) if beta is None else beta
        rows = [phi(self.field, big, beta, g) for g in self.generators()]
        return AdditiveCode(big, "qsquare", self.n, rows, beta)

    def to_symplectic(self) -> "AdditiveCode":
        if self.flavor != "qsquare":
            raise MixedAmbient("expected a qsquare code")
        small = field_create(self.p, self.field.m // 2)
        rows = [phi_inverse(small, self.field, self.beta, g) for g in self.generators()]
        return AdditiveCode(small, "symplectic", self.n, rows)

    # serialisation -------------------------------------------------------------------
    def to_json(self) -> dict:
        F = self.field
        out = {"field": F.to_json(), "flavor": self.flavor, "n": self.n}
        if self.beta is not None:
            out["beta"] = F.coeffs(self.beta)
        out["generators"] = [[F.coeffs(x) for x in g] for g in self.generators()]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "AdditiveCode":
        F = Field.from_json(obj["field"])
        beta = F.from_coeffs(obj["beta"]) if obj.get("beta") is not None else None
        gens = [[F.from_coeffs(c) if isinstance(c, list) else int(c) for c in g] for g in obj["generators"]]
        return cls(F, obj["flavor"], int(obj["n"]), gens, beta)


def direct_sum(a: AdditiveCode, b: AdditiveCode) -> AdditiveCode:
    """Codes side by side on disjoint coordinates."""
    if a.field != b.field or a.flavor != b.flavor:
        raise MixedAmbient("direct sum needs the same field and flavor")
    n = a.n + b.n
    out = AdditiveCode.from_digits(a.field, a.flavor, n, np.zeros((0, 0)), a.beta)
    cols_a = out._digit_cols(range(a.n))
    cols_b = out._digit_cols(range(a.n, n))
    rows = np.zeros((a.dim + b.dim, out.ncols), dtype=np.int64)
    rows[: a.dim][:, cols_a] = a.basis
    rows[a.dim :][:, cols_b] = b.basis
    return AdditiveCode.from_digits(a.field, a.flavor, n, rows, a.beta)


def random_code(field: Field, flavor: str, n: int, dim: int, rng: np.random.Generator) -> AdditiveCode:
    """Span of ``dim`` uniformly random digit rows (dimension may come out lower)."""
    ncols = AdditiveCode._ncols(field, flavor, n)
    return AdditiveCode.from_digits(field, flavor, n, rng.integers(0, field.p, (dim, ncols)))
