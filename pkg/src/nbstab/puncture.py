"""Puncture codes and shortening stabilizer codes to any length that
supports a codeword of the puncture code."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import families, kernels
from . import stabilizer as st
from .additive import AdditiveCode
from .errors import (
    DeltaOutOfRange,
    MixedAmbient,
    NotInPunctureCode,
    SearchSpaceTooLarge,
    ZeroWeightWord,
)


@dataclass
class PunctureCode:
    """An F_q-linear code of length n; ``provenance`` records how it was
    obtained so that large instances can still be searched via the GRM
    subcode of a BCH puncture code."""

    code: AdditiveCode
    provenance: dict = field(default_factory=dict)

    def contains(self, vec) -> bool:
        return self.code.contains(vec)


def _products_symplectic(c: AdditiveCode) -> list[list[int]]:
    F, n = c.field, c.n
    gens = c.generators()
    out = []
    for i, u in enumerate(gens):
        for v in gens[i + 1 :]:
            out.append([F.sub(F.mul(u[n + k], v[k]), F.mul(v[n + k], u[k])) for k in range(n)])
    return out


def puncture_code_symplectic(c: AdditiveCode) -> PunctureCode:
    """Euclidean dual of the span of ``(b_k a'_k - b'_k a_k)_k`` over pairs of
    carrier words.  Pairs of F_p-basis vectors suffice by bilinearity."""
    if c.flavor != "symplectic":
        raise MixedAmbient("expected a symplectic code")
    span = AdditiveCode.linear(c.field, "classical", c.n, _products_symplectic(c))
    return PunctureCode(span.dual("euclidean"), {"source": "symplectic"})


def puncture_code_symplectic_allpairs(c: AdditiveCode) -> AdditiveCode:
    """Same code from every pair of codewords (definition; small codes only)."""
    F, n = c.field, c.n
    words = [c.to_vector(w) for chunk in c.words() for w in chunk]
    rows = []
    for u in words:
        for v in words:
            rows.append([F.sub(F.mul(u[n + k], v[k]), F.mul(v[n + k], u[k])) for k in range(n)])
    return AdditiveCode.linear(F, "classical", n, rows).dual("euclidean")


def puncture_code_euclidean(c: AdditiveCode) -> PunctureCode:
    """Dual of the span of componentwise products of words of a classical code."""
    if c.flavor != "classical":
        raise MixedAmbient("expected a classical code")
    F, n = c.field, c.n
    gens = c.generators()
    rows = []
    for i, a in enumerate(gens):
        for b in gens[i:]:
            rows.append([F.mul(x, y) for x, y in zip(a, b)])
    span = AdditiveCode.linear(F, "classical", n, rows)
    return PunctureCode(span.dual("euclidean"), {"source": "euclidean"})


def bch_puncture_code(q: int, m: int, delta: int) -> PunctureCode:
    """Puncture code of the dual of the narrow-sense BCH code B_q^m(delta)."""
    b = families.bch_code(q, m, delta).code()
    pc = puncture_code_euclidean(b.dual())
    pc.provenance.update({"bch": [q, m, delta]})
    return pc


# ---------------------------------------------------------------------------
# BCH menu and GRM words
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class MenuEntry:
    order: int
    length: int
    k_bound: int
    d_bound: int

    def params(self, q: int) -> str:
        return f"[[{self.length},>={self.k_bound},>={self.d_bound}]]_{q}"


def certified_orders(q: int, m: int, delta: int) -> range:
    """GRM orders ``mu`` with R*_q(mu, m) inside the puncture code of the
    dual BCH code."""
    if not 2 <= delta <= families.bch_euclidean_max_delta(q, m):
        raise DeltaOutOfRange("delta outside the range of the euclidean BCH construction")
    nu = families.grm_largest_in_bch(q, m, delta)
    if 2 * nu < m * (q - 1) - 1:
        raise DeltaOutOfRange("delta too large for the GRM subcode argument")
    Q, R = families.bch_qr_split(q, delta)
    top = min(m * (q - 1) - 2 * (R + (q - 1) * Q) + 1, m * (q - 1) - 1)
    return range(0, top + 1)


def bch_puncture_menu(q: int, m: int, delta: int) -> list[MenuEntry]:
    """Lengths reachable by puncturing the euclidean BCH code with
    minimum-weight GRM words, and the guaranteed parameters."""
    loss = 2 * m * math.ceil((delta - 1) * (q - 1) / q)
    out = []
    for mu in certified_orders(q, m, delta):
        length = families.grm_distance(q, mu, m)
        out.append(MenuEntry(mu, length, max(0, length - loss), delta))
    return out


def grm_min_weight_word(q: int, mu: int, m: int) -> list[int]:
    """A word of R*_q(mu, m) (cyclic point order) of weight d*(mu).

    Uses ``prod_{i<a} (1 - x_i^{q-1}) * prod_{j<b} (x_a - c_j)`` with distinct
    nonzero ``c_j``; the polynomial is nonzero at the origin, so dropping that
    point lowers the weight by one.
    """
    F = families._field(q)
    sigma, rho = divmod(m * (q - 1) - mu, q - 1)
    pts = families.grm_points(q, m, "cyclic")
    if mu == 0:
        return [1] * len(pts)
    a = m - sigma - 1
    b = q - 1 - rho
    word = []
    for P in pts:
        v = 1
        for i in range(a):
            v = F.mul(v, F.sub(1, F.pow(P[i], q - 1)))
        for c in range(1, b + 1):
            v = F.mul(v, F.sub(P[a], c))
        word.append(v)
    return word


# ---------------------------------------------------------------------------
# search and puncturing
# ---------------------------------------------------------------------------
def find_weight_word(pc: PunctureCode | AdditiveCode, r: int) -> list[int] | None:
    """Lexicographically smallest word of weight ``r``, or None.

    Exhaustive when the code has at most 2^24 words; otherwise minimum-weight
    words of the certified GRM subcodes are tried (BCH puncture codes only).
    """
    if isinstance(pc, AdditiveCode):
        pc = PunctureCode(pc)
    code = pc.code
    if r == 0:
        return [0] * code.n
    if code.size <= kernels.MAX_ENUMERATION:
        best = None
        F = code.field
        for chunk in code.words():
            hit = chunk[code.word_weights(chunk) == r]
            if len(hit) == 0:
                continue
            vals = F.from_digits_array(hit.reshape(len(hit), code.n, F.m))
            idx = np.lexsort(vals.T[::-1])[0]
            cand = [int(v) for v in vals[idx]]
            if best is None or cand < best:
                best = cand
        return best
    if "bch" in pc.provenance:
        q, m, delta = pc.provenance["bch"]
        for mu in certified_orders(q, m, delta):
            if families.grm_distance(q, mu, m) == r:
                w = grm_min_weight_word(q, mu, m)
                if sum(1 for x in w if x) == r and code.contains(w):
                    return w
        return None
    raise SearchSpaceTooLarge(f"{code.size} words and no structured subcode to search")


def puncture_to(code: st.StabilizerCode, x: list[int], mode: str = "exact") -> st.StabilizerCode:
    """Shorten ``code`` to the support of a puncture-code word ``x``.

    The new stabilizer is ``{(a | b x)}`` restricted to ``supp(x)``; it has
    ``K* >= K / q^{n-r}`` and distance at least that of ``code``.
    """
    c = code.carrier
    F, n = c.field, c.n
    if len(x) != n:
        raise MixedAmbient("word length differs from the code length")
    support = [k for k, v in enumerate(x) if v]
    if not support:
        raise ZeroWeightWord("x has weight zero")
    pc = puncture_code_symplectic(c)
    if not pc.contains(x):
        raise NotInPunctureCode("x is not in the puncture code")
    r = len(support)
    prov = {"construction": "puncture", "length": r, "base": code.provenance}
    d_claim = code.distance
    if code.css is not None:
        a = code.css[0].dual().restrict(support)
        bx = [[F.mul(v, w) for v, w in zip(g, x)] for g in code.css[1].dual().generators()]
        b = AdditiveCode(F, "classical", n, bx).restrict(support)
        out = st.css(a.dual(), b.dual(), d_claim, mode, prov)
    else:
        rows = [g[:n] + [F.mul(v, w) for v, w in zip(g[n:], x)] for g in c.generators()]
        restricted = AdditiveCode(F, "symplectic", n, rows).restrict(support)
        out = st.from_symplectic(restricted, d_claim, mode, prov)
    # K* >= K / q^(n-r)
    assert out.k_exp >= code.k_exp - F.m * (n - r)
    return out
