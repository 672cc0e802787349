"""End-to-end acceptance checks, one test per criterion.

Each test is tagged with ``criterion(number, title)``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import json
import time

import numpy as np
import pytest

from nbstab import bounds, derive, families, puncture, regression
from nbstab import stabilizer as st
from nbstab.additive import AdditiveCode, random_code
from nbstab.cli import main
from nbstab.errors import StabError
from nbstab.gf import field_of_order, prime_power

criterion = pytest.mark.criterion


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@criterion(1, "five-qubit code from the hermitian Hamming family")
def test_five_qubit(capsys):
    with Timer() as t:
        assert main(["construct", "--family", "hamming-h", "--q", "2", "--m", "2", "--distance", "exact"]) == 0
        obj = json.loads(capsys.readouterr().out)
        code = st.StabilizerCode.from_json(obj)
        dual = code.dual()
        assert dual.size == 64
        hist = dual.weight_enumerator()
        d = min(w for w, (a, b) in enumerate(zip(hist, code.carrier.weight_enumerator())) if a != b)
        single = bounds.singleton(code.n, code.K, d, code.q)
        ham = bounds.hamming_d3(code.n, code.K, code.q)
    assert obj["params"] == "[[5,1,3]]_2"
    assert (obj["d"], obj["pure_to"], obj["status"]) == (3, 3, "exact")
    assert d == 3 and min(i for i, a in enumerate(hist) if i and a) == 3
    assert single.holds and single.slack == 0
    assert ham.holds and ham.slack == 0
    assert t.seconds < 1


HEXACODE = [[1, 0, 0, 1, 2, 2], [0, 1, 0, 2, 1, 2], [0, 0, 1, 2, 2, 1]]


@criterion(2, "hexacode through the trace-alternating route")
def test_hexacode():
    with Timer() as t:
        F4 = field_of_order(4)
        hexa = AdditiveCode.linear(F4, "qsquare", 6, HEXACODE)
        assert hexa.dim == 6  # [6,3]_4 as an F_2-space
        assert hexa.min_weight() == 4
        code = st.from_alternating(hexa)
    assert code.params() == "[[6,0,4]]_2"
    assert code.status == st.EXACT and code.d == 4
    assert t.seconds < 1


@criterion(3, "euclidean and hermitian BCH agree; extension reaches [[16,6,4]]")
def test_bch_agreement():
    with Timer() as t:
        e = families.bch_euclidean(2, 4, 3)
        h = families.bch_hermitian(2, 2, 3)
        ext = families.extend_bch(h)
    for code in (e, h):
        assert code.params() == "[[15,7,3]]_2" and code.status == st.EXACT and code.d == 3
    assert h.dual().size == 2**22
    assert ext.params() == "[[16,6,4]]_2" and ext.status == st.EXACT and ext.d == 4
    assert t.seconds < 60


@criterion(4, "quadratic residue codes over F_3 meet their distance bounds")
def test_qr_codes():
    with Timer() as t:
        q23 = families.qr(3, 23)
        q13 = families.qr(3, 13)
    assert q23.carrier.is_self_orthogonal()
    assert q23.css[0].size == 3**12
    assert q23.status == st.EXACT and q23.d >= 6
    assert q13.status == st.EXACT and q13.d >= 4
    assert t.seconds < 120


@criterion(5, "Melas code verified by enumerating its 4^11-word dual")
def test_melas():
    with Timer() as t:
        code = families.melas(2, 2)
    assert code.n == 15 and code.k == 7
    assert code.dual().size == 4**11
    assert code.status == st.EXACT and code.d >= 3
    assert t.seconds < 60


@criterion(6, "MacWilliams transform is exact on 100 random additive codes")
def test_macwilliams_exact():
    rng = np.random.default_rng(6)
    for i in range(100):
        q = (2, 3, 4)[i % 3]
        F = field_of_order(q)
        n = int(rng.integers(1, 7))
        dim = int(rng.integers(0, 2 * n * F.m + 1))
        code = random_code(F, "symplectic", n, dim, rng)
        assert bounds.macwilliams_code(code) == code.dual().weight_enumerator()


@criterion(7, "corpus codes satisfy Singleton, pure Hamming and LP; [[4,1,3]]_2 is LP-infeasible")
def test_bound_consistency():
    for entry in regression.entries():
        code = entry.load()
        n, K, d, q = code.n, code.K, code.distance, code.q
        assert bounds.singleton(n, K, d, q).holds, entry.name
        if code.is_pure:
            assert bounds.hamming(n, K, d, q).holds, entry.name
        assert bounds.lp_feasible(n, K, d, q).feasible, entry.name
    assert not bounds.lp_feasible(4, 2, 3, 2).feasible
    assert not bounds.singleton(4, 2, 3, 2).holds


def _prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(2, limit):
        try:
            prime_power(q)
        except StabError:
            continue
        out.append(q)
    return out


@criterion(8, "MDS Gilbert-Varshamov thresholds for [[7,1,4]] and [[6,2,3]]")
def test_mds_gv_thresholds():
    qs = _prime_powers(130)
    assert [q for q in qs if bounds.mds_gv_exists(7, 4, q).holds] == [q for q in qs if q >= 7]
    assert not bounds.mds_gv_exists(7, 4, 5).holds
    assert [q for q in qs if bounds.mds_gv_exists(6, 3, q).holds] == [q for q in qs if q >= 5]


@criterion(9, "puncture transport for the (2,4,3) BCH code")
def test_puncture_transport():
    q, m, delta = 2, 4, 3
    pc = puncture.bch_puncture_code(q, m, delta)
    orders = list(puncture.certified_orders(q, m, delta))
    assert 1 in orders
    for mu in orders:
        assert families.grm_code(q, mu, m).is_subcode_of(pc.code)
    assert families.grm_distance(q, 1, m) == 7
    word = puncture.find_weight_word(pc, 7)
    assert word is not None and sum(1 for x in word if x) == 7
    out = puncture.puncture_to(families.bch_euclidean(q, m, delta), word)
    assert out.carrier.is_self_orthogonal()
    assert out.status == st.EXACT and out.d >= 3


@criterion(10, "derivation rules from the pure five-qubit code")
def test_table_closure():
    with Timer() as t:
        five = families.hamming_hermitian(2, 2)
        assert five.is_pure
        longer = derive.lengthen(five)
        shorter = derive.shorten_pure(five)
        summed = derive.direct_sum(five, five)
        reports = [st.verify(c, "exact") for c in (longer, shorter, summed)]
    assert all(r.ok and r.distance_mode == st.EXACT for r in reports)
    assert reports[0].params == "[[6,1,3]]_2" and reports[0].purity == 1
    assert reports[1].params == "[[4,2,2]]_2" and reports[1].purity >= 2
    assert (summed.n, summed.K, reports[2].d) == (10, 4, 3)
    assert t.seconds < 30


@criterion(11, "MDS length gate")
def test_mds_length_gate():
    for n in range(7, 40):
        for d in range(3, n):
            if n - 2 * d + 2 >= 0:
                assert not bounds.mds_length_allowed(n, d, 2).holds
    assert bounds.mds_length_allowed(5, 3, 2).holds
    assert bounds.mds_length_allowed(6, 4, 2, conjecture=True).holds
    for q in (4, 8):
        top = q * q + 2
        allowed = {d for d in range(3, top) if top - 2 * d + 2 >= 0
                   and bounds.mds_length_allowed(top, d, q, conjecture=True).holds}
        assert allowed == {4} | ({q * q} if top - 2 * q * q + 2 >= 0 else set())
        for d in range(3, top):
            if top + 1 - 2 * d + 2 >= 0:
                assert not bounds.mds_length_allowed(top + 1, d, q, conjecture=True).holds
    for q in (3, 5, 7):
        for d in range(3, q * q):
            n = q * q + 2
            if n - 2 * d + 2 >= 0:
                assert not bounds.mds_length_allowed(n, d, q, conjecture=True).holds
