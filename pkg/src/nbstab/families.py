"""Code families: Hamming, quadratic residue, Melas, BCH (both routes),
extended BCH, character codes and generalized Reed-Muller codes."""

from __future__ import annotations

import itertools
import math
from typing import Sequence

from . import stabilizer as st
from .additive import AdditiveCode
from .cyclic import (
    CyclicCode,
    build_cyclic,
    coset_of,
    euclidean_self_orthogonal,
    hermitian_self_orthogonal,
    union_of_cosets,
)
from .errors import (
    BadParameters,
    DeltaOutOfRange,
    InconsistentSize,
    NotExtendable,
    NotPrime,
    NotResidue,
    OrderOutOfRange,
)
from .gf import Field, embedding, field_create, is_prime, nth_root_of_unity, prime_power


def _field(q: int) -> Field:
    try:
        p, m = prime_power(q)
    except Exception as exc:
        raise BadParameters(str(exc)) from exc
    return field_create(p, m)


def _square_field(q: int) -> Field:
    p, m = prime_power(q)
    return field_create(p, 2 * m)


def _hermitian_route(b: CyclicCode, q: int, d_claimed: int, mode: str, provenance: dict) -> st.StabilizerCode:
    """Stabilizer code from a cyclic code over F_{q^2} containing its
    hermitian dual: the carrier is that dual."""
    code = b.code("qsquare")
    dual = code.dual("hermitian")
    if not dual.is_subcode_of(code):
        raise BadParameters("cyclic code does not contain its hermitian dual")
    return st.from_alternating(dual, d_claimed, mode, provenance)


# ---------------------------------------------------------------------------
# Hamming
# ---------------------------------------------------------------------------
def hamming_hermitian(q: int, m: int, mode: str = "exact") -> st.StabilizerCode:
    """``[[n, n-2m, 3]]_q`` with ``n = (q^{2m}-1)/(q^2-1)`` from a cyclic
    Hamming code over F_{q^2}."""
    _field(q)
    if m < 2 or math.gcd(m, q * q - 1) != 1:
        raise BadParameters(f"need m >= 2 and gcd(m, q^2-1) = 1 (q={q}, m={m})")
    n = (q ** (2 * m) - 1) // (q * q - 1)
    b = build_cyclic(n, _square_field(q), coset_of(1, n, q * q))
    if b.dimension != n - m:
        raise InconsistentSize("unexpected Hamming dimension")
    return _hermitian_route(b, q, 3, mode, {"family": "hamming-h", "q": q, "m": m})


def hamming_euclidean(q: int, m: int, mode: str = "exact") -> st.StabilizerCode:
    """``[[n, n-2m, 3]]_q`` with ``n = (q^m-1)/(q-1)`` from the CSS
    construction on a cyclic Hamming code over F_q."""
    F = _field(q)
    if m < 2 or math.gcd(m, q - 1) != 1:
        raise BadParameters(f"need m >= 2 and gcd(m, q-1) = 1 (q={q}, m={m})")
    n = (q**m - 1) // (q - 1)
    h = build_cyclic(n, F, coset_of(1, n, q))
    if h.dimension != n - m or not euclidean_self_orthogonal(h.defining_set, n):
        raise BadParameters("Hamming code does not contain its dual")
    c = h.code()
    return st.css(c, c, 3, mode, {"family": "hamming-e", "q": q, "m": m})


# ---------------------------------------------------------------------------
# quadratic residue codes
# ---------------------------------------------------------------------------
def quadratic_residues(n: int) -> tuple[int, ...]:
    return tuple(sorted({x * x % n for x in range(1, n)}))


def qr_codes(q: int, n: int) -> tuple[CyclicCode, CyclicCode]:
    """The pair (C_R, C_N) of quadratic-residue codes of prime length ``n``."""
    F = _field(q)
    if not is_prime(n) or n == 2:
        raise NotPrime(f"{n} is not an odd prime")
    if n % F.p == 0:
        raise BadParameters("length must be coprime to q")
    res = quadratic_residues(n)
    if q % n not in res:
        raise NotResidue(f"{q} is not a quadratic residue mod {n}")
    non = tuple(x for x in range(1, n) if x not in res)
    return build_cyclic(n, F, res), build_cyclic(n, F, non)


def qr_distance_bound(n: int) -> int:
    """Square-root bound on the minimum distance of a QR code of length n."""
    if n % 4 == 3:
        d = 1
        while d * d - d + 1 < n:
            d += 1
        return d
    return math.isqrt(n - 1) + 1


def qr(q: int, n: int, mode: str = "exact") -> st.StabilizerCode:
    """CSS code from quadratic-residue codes; ``[[n, 1, >= d]]_q``."""
    cr, cn = qr_codes(q, n)
    a = cr.code()
    b = a if n % 4 == 3 else cn.code()
    return st.css(a, b, qr_distance_bound(n), mode, {"family": "qr", "q": q, "n": n})


# ---------------------------------------------------------------------------
# Melas
# ---------------------------------------------------------------------------
def melas(q: int, m: int, mode: str = "exact") -> st.StabilizerCode:
    """``[[q^{2m}-1, q^{2m}-1-4m, >=3]]_q`` for even q."""
    if q % 2:
        raise BadParameters("Melas construction needs even q")
    _field(q)
    if m < 1:
        raise BadParameters("m must be positive")
    n = q ** (2 * m) - 1
    z = union_of_cosets([1, n - 1], n, q * q)
    if not hermitian_self_orthogonal(z, n, q):
        raise BadParameters("Melas code does not contain its hermitian dual")
    b = build_cyclic(n, _square_field(q), z)
    return _hermitian_route(b, q, 3, mode, {"family": "melas", "q": q, "m": m})


# ---------------------------------------------------------------------------
# BCH
# ---------------------------------------------------------------------------
def bch_euclidean_max_delta(q: int, m: int) -> int:
    return q ** ((m + 1) // 2) - 1 - (q - 2) * (m % 2)


def bch_code(q: int, m: int, delta: int, alphabet: Field | None = None,
             mult: int | None = None) -> CyclicCode:
    """Narrow-sense primitive BCH code of designed distance ``delta`` over
    ``alphabet`` (default F_q) with length ``q^m - 1``."""
    F = alphabet or _field(q)
    mult = mult or F.order
    n = mult**m - 1 if alphabet is not None else q**m - 1
    return build_cyclic(n, F, union_of_cosets(range(1, delta), n, mult))


def bch_euclidean(q: int, m: int, delta: int, mode: str = "exact") -> st.StabilizerCode:
    """``[[q^m-1, q^m-1-2m*ceil((delta-1)(1-1/q)), >= delta]]_q``."""
    _field(q)
    if m < 2:
        raise BadParameters("m must be at least 2")
    if not 2 <= delta <= bch_euclidean_max_delta(q, m):
        raise DeltaOutOfRange(f"delta must lie in [2, {bch_euclidean_max_delta(q, m)}]")
    b = bch_code(q, m, delta)
    n = q**m - 1
    expected = n - m * math.ceil((delta - 1) * (q - 1) / q)
    if b.dimension != expected:
        raise InconsistentSize(f"BCH dimension {b.dimension} != {expected}")
    if not euclidean_self_orthogonal(b.defining_set, n):
        raise BadParameters("BCH code does not contain its euclidean dual")
    c = b.code()
    return st.css(c, c, delta, mode, {"family": "bch-e", "q": q, "m": m, "delta": delta})


def bch_hermitian_code(q: int, m: int, delta: int) -> CyclicCode:
    """The BCH code over F_{q^2} of length ``q^{2m} - 1`` used by :func:`bch_hermitian`."""
    _field(q)
    if m < 1:
        raise BadParameters("m must be positive")
    if not 2 <= delta <= q**m - 1:
        raise DeltaOutOfRange(f"delta must lie in [2, {q ** m - 1}]")
    return bch_code(q, m, delta, alphabet=_square_field(q), mult=q * q)


def bch_hermitian(q: int, m: int, delta: int, mode: str = "exact") -> st.StabilizerCode:
    """``[[q^{2m}-1, q^{2m}-1-2m*ceil((delta-1)(1-1/q^2)), >= delta]]_q``."""
    b = bch_hermitian_code(q, m, delta)
    n = q ** (2 * m) - 1
    expected = n - m * math.ceil((delta - 1) * (q * q - 1) / (q * q))
    if b.dimension != expected:
        raise InconsistentSize(f"BCH dimension {b.dimension} != {expected}")
    if not hermitian_self_orthogonal(b.defining_set, n, q):
        raise BadParameters("BCH code does not contain its hermitian dual")
    return _hermitian_route(b, q, delta, mode, {"family": "bch-h", "q": q, "m": m, "delta": delta})


def extend_bch(code: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """Extend a hermitian-BCH code by an overall parity coordinate:
    ``[[n, k, d]]_q -> [[n+1, k-1, >= d+1]]_q`` when ``n = -1 mod p``."""
    prov = code.provenance
    if prov.get("family") != "bch-h":
        raise BadParameters("extension is implemented for hermitian BCH codes")
    q, m, delta = prov["q"], prov["m"], prov["delta"]
    b = bch_hermitian_code(q, m, delta)
    F, n = b.field, b.n
    if (n + 1) % F.p:
        raise NotExtendable(f"n = {n} is not -1 mod {F.p}")
    rows = []
    for g in b.generator_matrix():
        s = 0
        for x in g:
            s = F.add(s, x)
        rows.append(g + [F.neg(s)])
    ext = AdditiveCode.linear(F, "qsquare", n + 1, rows)
    dual = ext.dual("hermitian")
    if not dual.is_subcode_of(ext):
        raise NotExtendable("extended code does not contain its hermitian dual")
    new_prov = {"family": "bch-ext", "q": q, "m": m, "delta": delta}
    return st.from_alternating(dual, delta + 1, mode, new_prov)


def hexacode(mode: str = "exact") -> st.StabilizerCode:
    """``[[6, 0, 4]]_2`` from the hermitian self-dual ``[6, 3, 4]_4`` hexacode."""
    F = _field(4)
    w, w2 = 2, 3
    rows = [[1, 0, 0, 1, w, w], [0, 1, 0, w, 1, w], [0, 0, 1, w, w, 1]]
    code = AdditiveCode.linear(F, "qsquare", 6, rows)
    return st.from_alternating(code, 4, mode, {"family": "hexacode", "q": 2})


# ---------------------------------------------------------------------------
# character codes over Z_2^m
# ---------------------------------------------------------------------------
def character_code_dimension(m: int, r: int) -> int:
    return sum(math.comb(m, j) for j in range(r + 1))


def character_code(q: int, m: int, r: int) -> AdditiveCode:
    """``[2^m, sum_{j<=r} C(m,j), 2^{m-r}]_q`` code spanned by the characters
    ``y -> (-1)^{x.y}`` of Z_2^m for ``wt(x) <= r`` (q odd)."""
    F = _field(q)
    if q % 2 == 0:
        raise BadParameters("character codes need odd q")
    if not 0 <= r <= m:
        raise BadParameters("need 0 <= r <= m")
    n = 1 << m
    minus_one = F.p - 1
    rows = []
    for x in range(n):
        if bin(x).count("1") <= r:
            rows.append([minus_one if bin(x & y).count("1") % 2 else 1 for y in range(n)])
    return AdditiveCode.linear(F, "classical", n, rows)


def quantum_character(q: int, m: int, r1: int, r2: int, mode: str = "exact") -> st.StabilizerCode:
    """``[[2^m, k(r2)-k(r1), >= min(2^{m-r2}, 2^{r1+1})]]_q``."""
    if not 0 <= r1 < r2 < m:
        raise BadParameters("need 0 <= r1 < r2 < m")
    small = character_code(q, m, r1)
    big = character_code(q, m, r2)
    d = min(2 ** (m - r2), 2 ** (r1 + 1))
    prov = {"family": "character", "q": q, "m": m, "r1": r1, "r2": r2}
    return st.css(big, small.dual(), d, mode, prov)


# ---------------------------------------------------------------------------
# generalized Reed-Muller codes (punctured at the origin)
# ---------------------------------------------------------------------------
def grm_dimension(q: int, nu: int, m: int) -> int:
    total = 0
    for j in range(m + 1):
        top = nu - j * q
        if top < 0:
            break
        total += (-1) ** j * math.comb(m, j) * math.comb(m + top, top)
    return total


def grm_distance(q: int, nu: int, m: int) -> int:
    """``(R+1) q^Q - 1`` where ``m(q-1) - nu = (q-1) Q + R``, ``0 <= R < q-1``."""
    Q, R = divmod(m * (q - 1) - nu, q - 1)
    return (R + 1) * q**Q - 1


def grm_params(q: int, nu: int, m: int) -> tuple[int, int]:
    if not 0 <= nu < m * (q - 1):
        raise OrderOutOfRange(f"order must lie in [0, {m * (q - 1) - 1}]")
    return grm_dimension(q, nu, m), grm_distance(q, nu, m)


def grm_exponents(q: int, nu: int, m: int) -> list[tuple[int, ...]]:
    return [e for e in itertools.product(range(q), repeat=m) if sum(e) <= nu]


def grm_points(q: int, m: int, order: str = "cyclic") -> list[tuple[int, ...]]:
    """Nonzero points of F_q^m as coordinate tuples.

    ``lex`` lists them lexicographically.  ``cyclic`` lists ``beta^0, beta^1,
    ...`` for the primitive root used by :func:`bch_code`, written in the
    coordinates ``x_j(P) = tr(beta^j P)``, so the code lines up with the
    cyclic BCH coordinates.
    """
    F = _field(q)
    if order == "lex":
        return [t for t in itertools.product(range(q), repeat=m) if any(t)]
    if order != "cyclic":
        raise ValueError(f"unknown point order {order!r}")
    n = q**m - 1
    ext, beta = nth_root_of_unity(F, n)
    emb = embedding(F, ext)
    pts = []
    for i in range(n):
        P = ext.pow(beta, i)
        pts.append(tuple(emb.back(ext.trace(ext.mul(ext.pow(beta, j), P), F.m)) for j in range(m)))
    return pts


def evaluate_monomial(F: Field, e: Sequence[int], point: Sequence[int]) -> int:
    v = 1
    for x, k in zip(point, e):
        v = F.mul(v, F.pow(x, k))
    return v


def grm_code(q: int, nu: int, m: int, order: str = "cyclic") -> AdditiveCode:
    """Evaluation code of all polynomials of degree at most ``nu`` on the
    nonzero points of F_q^m."""
    grm_params(q, nu, m)
    F = _field(q)
    pts = grm_points(q, m, order)
    rows = [[evaluate_monomial(F, e, P) for P in pts] for e in grm_exponents(q, nu, m)]
    return AdditiveCode.linear(F, "classical", len(pts), rows)


def grm_largest_in_bch(q: int, m: int, delta: int) -> int:
    """Largest order ``nu`` with the GRM code inside the BCH code of designed
    distance ``delta``: ``(m-Q)(q-1) - R``."""
    Q, R = bch_qr_split(q, delta)
    return (m - Q) * (q - 1) - R


def bch_qr_split(q: int, delta: int) -> tuple[int, int]:
    """``Q = floor(log_q(delta+1))`` and ``R = ceil((delta+1)/q^Q) - 1``."""
    Q = 0
    while q ** (Q + 1) <= delta + 1:
        Q += 1
    R = -(-(delta + 1) // q**Q) - 1
    return Q, R


FAMILIES = {
    "hamming-h": hamming_hermitian,
    "hamming-e": hamming_euclidean,
    "qr": qr,
    "melas": melas,
    "bch-e": bch_euclidean,
    "bch-h": bch_hermitian,
    "character": quantum_character,
}
