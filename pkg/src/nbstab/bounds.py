"""Bounds on stabilizer code parameters.

All arithmetic is exact (ints and Fractions).  ``K`` is the code size
``q^k``; it may be any power of the characteristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .additive import AdditiveCode
from .errors import NonIntegerResult, OutOfRange, TooLarge
from .gf import prime_power

LP_MAX_LENGTH = 40


# ---------------------------------------------------------------------------
# Krawtchouk polynomials and MacWilliams
# ---------------------------------------------------------------------------
def krawtchouk(j: int, x: int, n: int, q: int) -> int:
    """``K_j(x) = sum_s (-1)^s (q^2-1)^{j-s} C(x,s) C(n-x,j-s)``."""
    if not (0 <= j <= n and 0 <= x <= n):
        raise OutOfRange("need 0 <= j, x <= n")
    a = q * q - 1
    return sum((-1) ** s * a ** (j - s) * math.comb(x, s) * math.comb(n - x, j - s) for s in range(j + 1))


def krawtchouk_matrix(n: int, q: int) -> list[list[int]]:
    """``M[j][x] = K_j(x)``."""
    return [[krawtchouk(j, x, n, q) for x in range(n + 1)] for j in range(n + 1)]


def macwilliams(weights, size: int, q: int) -> list[int]:
    """Weight enumerator of the dual of a code with enumerator ``weights``.

    ``size`` is the number of codewords.  ``q`` is such that the symbol
    alphabet has ``q^2`` letters (symplectic or F_{q^2} Hamming weights).
    """
    n = len(weights) - 1
    out = []
    for j in range(n + 1):
        total = sum(krawtchouk(j, x, n, q) * int(a) for x, a in enumerate(weights))
        b = Fraction(total, size)
        if b.denominator != 1:
            raise NonIntegerResult(f"B_{j} = {b} is not an integer")
        out.append(int(b))
    return out


def macwilliams_code(code: AdditiveCode) -> list[int]:
    """Dual enumerator predicted from the code's own enumerator."""
    if code.flavor == "classical":
        raise OutOfRange("use the classical MacWilliams identity for F_q^n codes")
    q = code.field.order if code.flavor == "symplectic" else code.p ** (code.field.m // 2)
    return macwilliams(code.weight_enumerator(), code.size, q)


# ---------------------------------------------------------------------------
# closed-form bounds
# ---------------------------------------------------------------------------
@dataclass
class BoundCheck:
    name: str
    holds: bool
    slack: Fraction | None = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "bound": self.name,
            "holds": self.holds,
            "slack": None if self.slack is None else str(self.slack),
            "detail": self.detail,
            **self.extra,
        }


def _check_qk(q: int, K: int) -> int:
    p, _ = prime_power(q)
    x, e = K, 0
    while x % p == 0 and x > 1:
        x //= p
        e += 1
    if x != 1:
        raise OutOfRange(f"K = {K} is not a power of {p}")
    return p


def singleton(n: int, K: int, d: int, q: int) -> BoundCheck:
    """``K <= q^{n-2d+2}`` for codes with ``K > 1``; equality means MDS."""
    _check_qk(q, K)
    if K == 1:
        return BoundCheck("singleton", True, None, "vacuous for K = 1")
    if n - 2 * d + 2 < 0:
        return BoundCheck("singleton", False, Fraction(q) ** (n - 2 * d + 2) - K, "n - 2d + 2 < 0")
    cap = q ** (n - 2 * d + 2)
    return BoundCheck("singleton", K <= cap, Fraction(cap - K), "MDS" if K == cap else "",
                      {"mds": K == cap})


def hamming_d3(n: int, K: int, q: int) -> BoundCheck:
    """Sphere packing for pure single-error-correcting codes:
    ``K <= q^n / (n(q^2-1) + 1)``."""
    _check_qk(q, K)
    cap = Fraction(q**n, n * (q * q - 1) + 1)
    return BoundCheck("hamming", K <= cap, cap - K, "tight" if K == cap else "")


def hamming(n: int, K: int, d: int, q: int) -> BoundCheck:
    """Sphere packing for pure codes: ``K sum_{j<=t} C(n,j)(q^2-1)^j <= q^n``,
    ``t = floor((d-1)/2)``."""
    _check_qk(q, K)
    t = (d - 1) // 2
    ball = sum(math.comb(n, j) * (q * q - 1) ** j for j in range(t + 1))
    cap = Fraction(q**n, ball)
    return BoundCheck("hamming", K <= cap, cap - K, "tight" if K == cap else "")


def gv_exists(n: int, K: int, d: int, q: int) -> BoundCheck:
    """Gilbert-Varshamov existence condition for ``((n, K, d))_q``."""
    p = _check_qk(q, K)
    if n < 1 or K < 2 or d < 1:
        raise OutOfRange("need n, d >= 1 and K > 1")
    s = sum(math.comb(n, j) * (q * q - 1) ** j for j in range(1, d))
    lhs = (Fraction(q**n * K) - Fraction(q**n, K)) * s
    rhs = (q ** (2 * n) - 1) * (p - 1)
    return BoundCheck("gv", lhs < rhs, Fraction(rhs) - lhs)


def gv_linear_exists(n: int, k: int, d: int, q: int) -> BoundCheck:
    """Existence of an F_{q^2}-linear ``[[n, k, d]]_q`` code."""
    if k < 1 or (n - k) % 2:
        raise OutOfRange("need k >= 1 and n = k mod 2")
    s = sum(math.comb(n, j) * (q * q - 1) ** (j - 1) for j in range(1, d))
    lhs = (Fraction(q ** (n + k)) - Fraction(q**n, q**k)) * s
    rhs = q ** (2 * n) - 1
    return BoundCheck("gv-linear", lhs < rhs, Fraction(rhs) - lhs)


def mds_gv_exists(n: int, d: int, q: int) -> BoundCheck:
    """Existence of a linear ``[[n, n-2d+2, d]]_q`` MDS code when
    ``q^2 - 1 >= C(n, d)``."""
    if not 2 <= d <= math.ceil(n / 2):
        raise OutOfRange("need 2 <= d <= ceil(n/2)")
    c = math.comb(n, d)
    return BoundCheck("mds-gv", q * q - 1 >= c, Fraction(q * q - 1 - c))


def carlitz_uchiyama(p: int, m: int, delta: int) -> BoundCheck:
    """Lower bound on the minimum distance of the dual of the binary-style
    primitive BCH code over F_p with designed distance ``delta``.

    Value ``(1-1/p)(p^m - ((delta - 2 - [delta-1 = 0 mod p]) / 2) floor(2 p^{m/2}))``,
    clamped at 0; ``extra["bound"]`` is its ceiling.
    """
    if delta < 2:
        raise OutOfRange("delta must be at least 2")
    bracket = 1 if (delta - 1) % p == 0 else 0
    root = math.isqrt(4 * p**m)  # floor(2 p^{m/2})
    val = Fraction(p - 1, p) * (p**m - Fraction(delta - 2 - bracket, 2) * root)
    trivial = val <= 0
    val = max(val, Fraction(0))
    return BoundCheck("carlitz", not trivial, val, "trivial" if trivial else "",
                      {"bound": math.ceil(val), "value": str(val)})


def mds_length_allowed(n: int, d: int, q: int, conjecture: bool = False) -> BoundCheck:
    """Length restrictions on nontrivial (d >= 3) MDS stabilizer codes
    ``[[n, n-2d+2, d]]_q``."""
    reasons = []
    if d < 3:
        return BoundCheck("mds-length", True, None, "trivial distance")
    if n - 2 * d + 2 < 0:
        reasons.append("negative dimension")
    if not 4 <= n <= q * q + d - 2:
        reasons.append("n outside [4, q^2+d-2]")
    if q * q + d - 2 > 2 * q * q - 2:
        reasons.append("d > q^2")
    if not max(3, n - q * q + 2) <= d <= min(n - 1, q * q):
        reasons.append("d outside [max(3, n-q^2+2), min(n-1, q^2)]")
    if conjecture:
        cap = q * q + 2 if q % 2 == 0 and d in (4, q * q) else q * q + 1
        if n > cap:
            reasons.append(f"n > {cap}")
    return BoundCheck("mds-length", not reasons, None, "; ".join(reasons))


# ---------------------------------------------------------------------------
# linear programming bound
# ---------------------------------------------------------------------------
@dataclass
class LPResult:
    feasible: bool
    witness: list[Fraction] | None = None
    dual_witness: list[Fraction] | None = None
    divisibility_ok: bool | None = None

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "dual_witness": None if self.dual_witness is None else [str(x) for x in self.dual_witness],
            "divisibility_ok": self.divisibility_ok,
        }


def _simplex_phase_one(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Feasibility of ``a x = b, x >= 0`` by phase-one simplex with Bland's rule.

    Returns a basic feasible point or None.
    """
    rows, cols = len(a), len(a[0])
    a = [row[:] for row in a]
    b = b[:]
    for i in range(rows):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]
    # tableau with artificials in columns cols..cols+rows-1
    tab = [a[i] + [Fraction(int(i == j)) for j in range(rows)] + [b[i]] for i in range(rows)]
    basis = [cols + i for i in range(rows)]
    total = cols + rows
    # reduced costs for minimising the sum of artificials
    cost = [Fraction(0)] * (total + 1)
    for i in range(rows):
        for j in range(total + 1):
            if j < cols or j == total:
                cost[j] -= tab[i][j]
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i in range(rows):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen for phase one (bounded below by 0)
            break
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [v - f * w for v, w in zip(cost, tab[leave])]
        basis[leave] = enter
    if cost[total] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = tab[i][total]
    return x


def lp_feasible(n: int, K: int, d: int, q: int) -> LPResult:
    """Feasibility of the linear programming conditions for an
    ``((n, K, d))_q`` stabilizer code.

    Unknowns are the stabilizer weight distribution ``A_1..A_n`` (``A_0 = 1``);
    the dual distribution is ``B = (K/q^n) * Krawtchouk * A``.  Constraints:
    ``sum A = q^n/K``, ``A_j = B_j`` for ``j < d``, ``A_j <= B_j`` for ``j >= d``.
    For ``K = 1`` the stabilizer equals its dual: ``A = B`` and ``A_j = 0`` for
    ``0 < j < d``.
    """
    p = _check_qk(q, K)
    if n > LP_MAX_LENGTH:
        raise TooLarge(f"n = {n} exceeds {LP_MAX_LENGTH}")
    if not 1 <= d <= n:
        raise OutOfRange("need 1 <= d <= n")
    kr = krawtchouk_matrix(n, q)
    scale = Fraction(K, q**n)
    total = Fraction(q**n, K)
    nv = n  # A_1..A_n
    n_slack = n - d + 1 if K > 1 else 0  # for j = d..n
    cols = nv + n_slack
    a: list[list[Fraction]] = []
    b: list[Fraction] = []
    a.append([Fraction(1)] * nv + [Fraction(0)] * n_slack)
    b.append(total - 1)
    for j in range(1, n + 1):
        # A_j - scale * sum_r K_j(r) A_r (+ slack) = scale * K_j(0)
        row = [Fraction(0)] * cols
        for r in range(1, n + 1):
            row[r - 1] -= scale * kr[j][r]
        row[j - 1] += 1
        if j >= d and K > 1:
            row[nv + j - d] = Fraction(1)
        a.append(row)
        b.append(scale * kr[j][0])
        if K == 1 and j < d:
            zero = [Fraction(0)] * cols
            zero[j - 1] = Fraction(1)
            a.append(zero)
            b.append(Fraction(0))
    x = _simplex_phase_one(a, b)
    if x is None:
        return LPResult(False)
    witness = [Fraction(1)] + x[:nv]
    div = None
    if all(v.denominator == 1 for v in witness):
        div = all(int(v) % (p - 1) == 0 for v in witness[1:])
    dual = [scale * sum(kr[j][r] * witness[r] for r in range(n + 1)) for j in range(n + 1)]
    return LPResult(True, witness, dual, div)
