import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import expand, symbols

from nbstab import bounds, families
from nbstab.additive import random_code
from nbstab.errors import NonIntegerResult, OutOfRange, TooLarge
from nbstab.gf import field_of_order

Z = symbols("z")


@pytest.mark.parametrize("n,q", [(3, 2), (5, 2), (4, 3), (6, 4)])
def test_krawtchouk_generating_function(n, q):
    a = q * q - 1
    for x in range(n + 1):
        poly = expand((1 + a * Z) ** (n - x) * (1 - Z) ** x).as_poly(Z)
        coeffs = [int(poly.coeff_monomial(Z**j)) for j in range(n + 1)]
        assert coeffs == [bounds.krawtchouk(j, x, n, q) for j in range(n + 1)]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.sampled_from([2, 3, 4, 5]), st.data())
def test_krawtchouk_recurrence(n, q, data):
    Q = q * q
    x = data.draw(st.integers(0, n))
    j = data.draw(st.integers(1, n - 1))
    k = lambda i: bounds.krawtchouk(i, x, n, q)  # noqa: E731
    lhs = (j + 1) * k(j + 1)
    rhs = ((n - j) * (Q - 1) + j - Q * x) * k(j) - (Q - 1) * (n - j + 1) * k(j - 1)
    assert lhs == rhs


def test_krawtchouk_orthogonality():
    n, q = 5, 2
    m = np.array(bounds.krawtchouk_matrix(n, q), dtype=object)
    assert (m.dot(m) == (q**2) ** n * np.eye(n + 1, dtype=object)).all()


def test_macwilliams_random_codes():
    rng = np.random.default_rng(2024)
    for i in range(100):
        q = (2, 3, 4)[i % 3]
        n = int(rng.integers(1, 7 if q == 2 else 5))
        F = field_of_order(q)
        dim = int(rng.integers(0, 2 * n * F.m + 1))
        c = random_code(F, "symplectic", n, dim, rng)
        assert bounds.macwilliams_code(c) == c.dual().weight_enumerator()


def test_macwilliams_rejects_non_enumerators():
    with pytest.raises(NonIntegerResult):
        bounds.macwilliams([1, 2, 0], 3, 2)


def test_singleton():
    assert bounds.singleton(7, 2, 4, 2).extra["mds"]
    assert not bounds.singleton(6, 2, 4, 2).holds
    s = bounds.singleton(5, 2, 3, 2)
    assert s.holds and s.extra["mds"]
    assert not bounds.singleton(7, 2, 5, 2).holds
    assert bounds.singleton(6, 1, 4, 2).holds
    with pytest.raises(OutOfRange):
        bounds.singleton(5, 3, 3, 2)


def test_hamming_bounds():
    tight = bounds.hamming_d3(5, 2, 2)
    assert tight.holds and tight.slack == 0
    assert not bounds.hamming_d3(5, 4, 2).holds
    assert bounds.hamming(7, 2, 3, 2).holds
    assert bounds.hamming(10, 2, 5, 2).holds
    assert not bounds.hamming(8, 2, 5, 2).holds
    for n, q in [(8, 2), (10, 3), (6, 4)]:
        assert bounds.hamming(n, q, 3, q).holds == bounds.hamming_d3(n, q, q).holds


def test_gv_agrees_with_lp_on_small_grid():
    for n, k, d in itertools.product(range(3, 9), range(1, 4), range(2, 5)):
        if k >= n:
            continue
        if bounds.gv_exists(n, 2**k, d, 2).holds:
            assert bounds.lp_feasible(n, 2**k, d, 2).feasible


def test_gv_needs_nontrivial_code_space():
    assert bounds.gv_exists(5, 2, 1, 2).holds
    with pytest.raises(OutOfRange):
        bounds.gv_exists(5, 1, 3, 2)


def test_gv_linear():
    assert bounds.gv_linear_exists(10, 2, 3, 2).holds
    assert not bounds.gv_linear_exists(5, 1, 3, 2).holds
    with pytest.raises(OutOfRange):
        bounds.gv_linear_exists(5, 2, 3, 2)


def test_mds_gv_thresholds():
    assert [q for q in (2, 3, 4, 5, 7, 8, 9) if bounds.mds_gv_exists(7, 4, q).holds] == [7, 8, 9]
    assert [q for q in (2, 3, 4, 5, 7) if bounds.mds_gv_exists(6, 3, q).holds] == [5, 7]


@pytest.mark.parametrize("p,m", [(2, 4), (2, 5), (2, 6), (3, 3)])
def test_carlitz_uchiyama_against_exhaustive_dual(p, m):
    for delta in range(2, 2 + 2 * p):
        b = families.bch_code(p, m, delta).code()
        dual = b.dual("euclidean")
        if dual.dim == 0 or dual.size > 1 << 20:
            continue
        bound = bounds.carlitz_uchiyama(p, m, delta).extra["bound"]
        assert dual.min_weight() >= bound


def test_carlitz_values():
    assert bounds.carlitz_uchiyama(2, 4, 3).extra["bound"] == 8
    assert bounds.carlitz_uchiyama(2, 4, 5).extra["bound"] == 4


def test_lp_known_cases():
    assert not bounds.lp_feasible(4, 2, 3, 2).feasible
    res = bounds.lp_feasible(5, 2, 3, 2)
    assert res.feasible and res.witness == [1, 0, 0, 0, 15, 0]
    assert res.dual_witness == [1, 0, 0, 30, 15, 18]
    six = bounds.lp_feasible(6, 1, 4, 2)
    assert six.feasible and six.witness == [1, 0, 0, 0, 45, 0, 18]
    assert not bounds.lp_feasible(6, 1, 5, 2).feasible
    with pytest.raises(TooLarge):
        bounds.lp_feasible(bounds.LP_MAX_LENGTH + 1, 2, 3, 2)


def test_lp_witness_satisfies_constraints():
    for n, K, d, q in [(7, 2, 3, 2), (8, 8, 3, 2), (5, 3, 3, 3), (6, 4, 3, 4)]:
        res = bounds.lp_feasible(n, K, d, q)
        assert res.feasible
        a, b = res.witness, res.dual_witness
        assert sum(a) == Fraction(q**n, K)
        assert all(x >= 0 for x in a)
        assert all(a[j] == b[j] for j in range(d))
        assert all(a[j] <= b[j] for j in range(d, n + 1))


def test_lp_monotone_in_distance_and_length():
    for q in (2, 3):
        for n in range(3, 9):
            for K in (q, q * q):
                feas = [bounds.lp_feasible(n, K, d, q).feasible for d in range(1, n + 1)]
                # once infeasible, larger distances stay infeasible
                first_bad = feas.index(False) if False in feas else len(feas)
                assert not any(feas[first_bad:])
                for d in range(1, n + 1):
                    if feas[d - 1] and n < 8:
                        assert bounds.lp_feasible(n + 1, K, d, q).feasible


def test_mds_length_gate():
    for n in range(7, 20):
        for d in range(3, n // 2 + 2):
            if n - 2 * d + 2 >= 0:
                assert not bounds.mds_length_allowed(n, d, 2).holds
                assert not bounds.mds_length_allowed(n, d, 2, conjecture=True).holds
    assert bounds.mds_length_allowed(5, 3, 2).holds
    assert bounds.mds_length_allowed(6, 4, 2, conjecture=True).holds
    # even q: length q^2 + 2 only for d = 4 or d = q^2
    assert bounds.mds_length_allowed(18, 4, 4, conjecture=True).holds
    assert not bounds.mds_length_allowed(18, 5, 4, conjecture=True).holds
    assert bounds.mds_length_allowed(17, 5, 4, conjecture=True).holds
    assert not bounds.mds_length_allowed(11, 3, 3, conjecture=True).holds
    assert bounds.mds_length_allowed(10, 3, 3, conjecture=True).holds
