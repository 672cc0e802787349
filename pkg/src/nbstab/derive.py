"""New stabilizer codes from old ones: lengthening, shortening, reducing
the dimension, direct sums, the two doubling constructions and changes of
the alphabet between F_q and F_{q^m}."""

from __future__ import annotations

import itertools

import numpy as np

from . import stabilizer as st
from .additive import AdditiveCode, direct_sum as _direct_sum_codes
from .errors import (
    MixedAmbient,
    MixedFields,
    NoRoom,
    NotABasis,
    NotNested,
    NotPure,
    OddCharacteristic,
    TooShort,
    ZeroDimensional,
)
from .gf import Field, embedding, field_create


def _exact(code: st.StabilizerCode) -> st.StabilizerCode:
    """The code with exact distance and purity filled in when computable."""
    if code.status == st.EXACT:
        return code
    d, pure = st.exact_distance(code)
    if d is None:
        return code
    return code.with_(d=d, pure_to=pure, status=st.EXACT)


def _require_pure(code: st.StabilizerCode, what: str = "code") -> st.StabilizerCode:
    code = _exact(code)
    if code.status != st.EXACT:
        raise NotPure(f"purity of the {what} cannot be established")
    if not code.is_pure:
        raise NotPure(f"the {what} is impure (pure to {code.pure_to}, d = {code.d})")
    return code


def _prov(rule: str, *parents: st.StabilizerCode) -> dict:
    return {"construction": rule, "from": [p.params() for p in parents]}


# ---------------------------------------------------------------------------
# single-code rules
# ---------------------------------------------------------------------------
def lengthen(code: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """``[[n, k, d]]_q -> [[n+1, k, d]]_q`` (impure for ``d > 1``).

    The stabilizer gains every vector ``(0..0 alpha | 0..0 0)``."""
    if code.k_exp == 0:
        raise ZeroDimensional("lengthening needs K > 1")
    c = code.carrier
    F, n = c.field, c.n
    rows = [g[:n] + [0] + g[n:] + [0] for g in c.generators()]
    for i in range(F.m):
        rows.append([0] * n + [F.p**i] + [0] * (n + 1))
    carrier = AdditiveCode(F, "symplectic", n + 1, rows)
    css = None
    if code.css is not None:
        c1, c2 = code.css
        g1 = [g + [0] for g in c1.generators()]
        g2 = [g + [0] for g in c2.generators()] + [[0] * n + [F.p**i] for i in range(F.m)]
        css = (AdditiveCode(F, "classical", n + 1, g1), AdditiveCode(F, "classical", n + 1, g2))
    return st.from_symplectic(carrier, code.distance, mode, _prov("lengthen", code), css=css)


def shorten_pure(code: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """Pure ``[[n, k, d]]_q -> `` pure ``[[n-1, k+1, d-1]]_q``.

    The new stabilizer consists of the stabilizer words that vanish on the
    first coordinate, with that coordinate deleted."""
    if code.n < 2:
        raise TooShort("need n >= 2")
    code = _require_pure(code)
    if code.distance < 2:
        raise TooShort("need d >= 2")
    carrier = code.carrier.shorten([0])
    d = code.distance - 1
    return st.from_symplectic(carrier, d, mode, _prov("shorten", code))


def reduce_dim(code: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """``((n, K, d))_q -> ((n, K/p, >= d))_q`` by adding one dual vector to the stabilizer.

    Dropping to ``K = 1`` keeps the distance only for pure codes.
    """
    if code.k_exp == 0:
        raise ZeroDimensional("K = 1 already")
    if code.k_exp == 1:
        try:
            code = _require_pure(code)
        except NotPure as exc:
            raise NoRoom(f"cannot reach K = 1 without purity: {exc}") from None
    c = code.carrier
    dual = c.dual()
    extra = next(r for r in dual.basis if not c.contains_digits(r))
    carrier = AdditiveCode.from_digits(c.field, "symplectic", c.n, np.vstack([c.basis, extra]))
    return st.from_symplectic(carrier, code.distance, mode, _prov("reduce", code))


# ---------------------------------------------------------------------------
# two-code rules
# ---------------------------------------------------------------------------
def direct_sum(a: st.StabilizerCode, b: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """``[[n, k, d]] (+) [[n', k', d']] -> [[n+n', k+k', min(d, d')]]``."""
    if a.field != b.field:
        raise MixedFields("codes over different fields")
    carrier = _direct_sum_codes(a.carrier, b.carrier)
    css = None
    if a.css is not None and b.css is not None:
        css = (_direct_sum_codes(a.css[0], b.css[0]), _direct_sum_codes(a.css[1], b.css[1]))
    d = None if a.distance is None or b.distance is None else min(a.distance, b.distance)
    return st.from_symplectic(carrier, d, mode, _prov("sum", a, b), css=css)


def _pair_rows(first: list[list[int]], second: list[list[int]], n: int) -> list[list[int]]:
    """Symplectic vectors of length 2n from per-half vectors ``(x, y)``."""
    return [x[:n] + y[:n] + x[n:] + y[n:] for x, y in zip(first, second)]


def _check_pair(q1: st.StabilizerCode, q2: st.StabilizerCode) -> None:
    if q1.field != q2.field:
        raise MixedFields("codes over different fields")
    if q1.n != q2.n:
        raise NotNested(f"lengths {q1.n} and {q2.n} differ")


def _check_nested(small: AdditiveCode, big: AdditiveCode) -> None:
    w = small.subcode_witness(big)
    if w is not None:
        raise NotNested("stabilizers are not nested", witness=w)


def nested_combine(q1: st.StabilizerCode, q2: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """Pure ``[[n, k1, d1]] >= [[n, k2, d2]] -> [[2n, k1+k2, >= min(2 d2, d1)]]``.

    The stabilizer of ``q1`` must lie inside that of ``q2``; the new
    stabilizer is ``{(u, u+v) : u in S1, v in S2}``.
    """
    _check_pair(q1, q2)
    q1, q2 = _require_pure(q1, "first code"), _require_pure(q2, "second code")
    s1, s2 = q1.carrier, q2.carrier
    _check_nested(s1, s2)
    n = q1.n
    zero = [0] * (2 * n)
    g1, g2 = s1.generators(), s2.generators()
    rows = _pair_rows(g1, g1, n) + _pair_rows([zero] * len(g2), g2, n)
    carrier = AdditiveCode(q1.field, "symplectic", 2 * n, rows)
    d = min(2 * q2.distance, q1.distance)
    return st.from_symplectic(carrier, d, mode, _prov("combine", q1, q2))


def difference_combine(q1: st.StabilizerCode, q2: st.StabilizerCode, mode: str = "exact") -> st.StabilizerCode:
    """Even q: pure ``[[n, k1, d1]] >= `` pure ``[[n, k2, d2]]`` with ``k1 > k2`` gives
    ``[[2n, k1-k2, >= min(2 d1, d2)]]``.

    The new stabilizer is ``{(u, u+v) : u in dual(S2), v in S1}``.
    """
    if q1.field.p != 2:
        raise OddCharacteristic("the difference construction needs even q")
    _check_pair(q1, q2)
    if q1.k_exp <= q2.k_exp:
        raise NotNested("need k1 > k2")
    q1, q2 = _require_pure(q1, "first code"), _require_pure(q2, "second code")
    s1, s2 = q1.carrier, q2.carrier
    _check_nested(s1, s2)
    n = q1.n
    zero = [0] * (2 * n)
    u = s2.dual().generators()
    v = s1.generators()
    rows = _pair_rows(u, u, n) + _pair_rows([zero] * len(v), v, n)
    carrier = AdditiveCode(q1.field, "symplectic", 2 * n, rows)
    d = min(2 * q1.distance, q2.distance)
    return st.from_symplectic(carrier, d, mode, _prov("difference", q1, q2))


# ---------------------------------------------------------------------------
# alphabet changes
# ---------------------------------------------------------------------------
class FieldBasis:
    """A basis of F_{q^m} over its subfield F_q, with coordinate maps."""

    def __init__(self, big: Field, small: Field, basis: list[int]):
        self.big, self.small, self.basis = big, small, list(basis)
        self.m = big.m // small.m
        if len(self.basis) != self.m:
            raise NotABasis(f"need {self.m} elements")
        emb = embedding(small, big)
        self._emb = emb
        coords: dict[int, tuple[int, ...]] = {}
        for c in itertools.product(range(small.order), repeat=self.m):
            x = 0
            for ci, b in zip(c, self.basis):
                x = big.add(x, big.mul(emb(ci), b))
            coords[x] = c
        if len(coords) != big.order:
            raise NotABasis("elements are linearly dependent")
        self._coords = coords
        self._traces = {x: self.trace_vector(x) for x in range(big.order)}
        self._from_traces = {v: x for x, v in self._traces.items()}

    def coordinates(self, x: int) -> tuple[int, ...]:
        """``e_B(x)``."""
        return self._coords[x]

    def trace_vector(self, x: int) -> tuple[int, ...]:
        """``(tr(x b_j))_j``, which equals ``M e_B(x)`` for the Gram matrix M."""
        big, small = self.big, self.small
        return tuple(self._emb.back(big.trace(big.mul(x, b), small.m)) for b in self.basis)

    def from_coordinates(self, c) -> int:
        x = 0
        for ci, b in zip(c, self.basis):
            x = self.big.add(x, self.big.mul(self._emb(ci), b))
        return x

    def from_trace_vector(self, t) -> int:
        return self._from_traces[tuple(t)]

    def is_self_dual(self) -> bool:
        return all(self.trace_vector(b) == tuple(int(i == j) for j in range(self.m))
                   for i, b in enumerate(self.basis))


def polynomial_basis(big: Field, small: Field) -> FieldBasis:
    m = big.m // small.m
    return FieldBasis(big, small, [big.pow(big.p, i) for i in range(m)])


def self_dual_basis(big: Field, small: Field, budget: int = 200_000) -> FieldBasis | None:
    """Search (depth-first, increasing order) for a trace-orthonormal basis."""
    m = big.m // small.m
    emb = embedding(small, big)
    tr = lambda x: emb.back(big.trace(x, small.m))  # noqa: E731
    units = [x for x in range(1, big.order) if tr(big.mul(x, x)) == 1]
    steps = 0

    def extend(chosen: list[int]) -> list[int] | None:
        nonlocal steps
        if len(chosen) == m:
            return chosen
        start = chosen[-1] if chosen else 0
        for x in units:
            if x <= start:
                continue
            steps += 1
            if steps > budget:
                return None
            if all(tr(big.mul(x, y)) == 0 for y in chosen):
                found = extend(chosen + [x])
                if found:
                    return found
        return None

    found = extend([])
    return FieldBasis(big, small, found) if found else None


def default_basis(big: Field, small: Field) -> FieldBasis:
    """Self-dual basis when one is expected to exist (q even, or q and m both
    odd), else the polynomial basis."""
    m = big.m // small.m
    if small.p == 2 or (small.order % 2 and m % 2):
        b = self_dual_basis(big, small)
        if b is not None:
            return b
    return polynomial_basis(big, small)


def expand_vector(basis: FieldBasis, vec) -> list[int]:
    """``(a|b) -> (e_B(a) | M e_B(b))`` coordinatewise."""
    n = len(vec) // 2
    a = [c for x in vec[:n] for c in basis.coordinates(x)]
    b = [c for x in vec[n:] for c in basis.trace_vector(x)]
    return a + b


def expand_field(code: st.StabilizerCode, sub_degree: int | None = None, basis: FieldBasis | None = None,
                 mode: str = "exact") -> st.StabilizerCode:
    """``((n, K, d))_{q^m} -> ((nm, K, >= d))_q``.

    ``sub_degree`` is the degree of F_q over F_p (default 1, the prime field).
    """
    big = code.field
    small = basis.small if basis is not None else field_create(big.p, sub_degree or 1)
    if big.m % small.m:
        raise NotABasis("not a subfield")
    basis = basis or default_basis(big, small)
    n, m = code.n, basis.m
    rows = [expand_vector(basis, g) for g in code.carrier.generators()]
    carrier = AdditiveCode(small, "symplectic", n * m, rows)
    prov = _prov("expand", code) | {"basis": basis.basis, "self_dual": basis.is_self_dual()}
    return st.from_symplectic(carrier, code.distance, mode, prov)


def contract_field(code: st.StabilizerCode, big: Field, basis: FieldBasis | None = None) -> st.StabilizerCode:
    """``((nm, K, d))_q -> ((n, K, >= floor(d/m)))_{q^m}`` (inverse of expansion).

    The distance is only ever reported as a lower bound."""
    small = code.field
    basis = basis or default_basis(big, small)
    m = basis.m
    if code.n % m:
        raise MixedAmbient(f"length {code.n} is not a multiple of {m}")
    n = code.n // m
    rows = []
    for g in code.carrier.generators():
        a = [basis.from_coordinates(g[k * m:(k + 1) * m]) for k in range(n)]
        bpart = g[code.n:]
        b = [basis.from_trace_vector(bpart[k * m:(k + 1) * m]) for k in range(n)]
        rows.append(a + b)
    carrier = AdditiveCode(big, "symplectic", n, rows)
    d = None if code.distance is None else code.distance // m
    return st.from_symplectic(carrier, d, "bound", _prov("contract", code))
