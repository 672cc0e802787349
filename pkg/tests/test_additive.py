import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from nbstab import kernels
from nbstab.additive import (
    INFINITY,
    AdditiveCode,
    direct_sum,
    hamming_weight,
    hermitian_product,
    phi,
    phi_inverse,
    random_code,
    symplectic_form,
    symplectic_weight,
    trace_alternating,
)
from nbstab.errors import CodeTooLarge, MixedAmbient, NotASubcode, NotLinear
from nbstab.gf import field_of_order, normal_pair

SMALL_AMBIENTS = [(2, 3), (2, 4), (3, 2), (4, 2), (5, 1)]


def _words(code):
    return {tuple(code.to_vector(w)) for chunk in code.words() for w in chunk}


@pytest.mark.parametrize("q,n", SMALL_AMBIENTS)
def test_symplectic_dual_matches_brute_force(q, n):
    F = field_of_order(q)
    rng = np.random.default_rng(q * 100 + n)
    for dim in (1, 2, n * F.m):
        c = random_code(F, "symplectic", n, dim, rng)
        gens = c.generators()
        assert _words(c.dual()) == oracles.symplectic_dual(F, n, gens)
        assert c.dual().dual() == c
        assert c.dim + c.dual().dim == 2 * n * F.m


@pytest.mark.parametrize("q,n", SMALL_AMBIENTS)
def test_span_and_histogram_match_brute_force(q, n):
    F = field_of_order(q)
    rng = np.random.default_rng(7 + q + n)
    c = random_code(F, "symplectic", n, 3, rng)
    assert _words(c) == oracles.span(F, c.generators())
    assert c.weight_enumerator() == oracles.swt_histogram(_words(c), n)


def test_symplectic_form_matches_oracle():
    F = field_of_order(4)
    rng = np.random.default_rng(1)
    for _ in range(50):
        u = [int(x) for x in rng.integers(0, 4, 6)]
        v = [int(x) for x in rng.integers(0, 4, 6)]
        assert symplectic_form(F, u, v) == oracles.symplectic_form(F, u, v)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_isometry_preserves_weight_and_form(q, data):
    small = field_of_order(q)
    big = field_of_order(q * q)
    beta = normal_pair(big)
    n = 3
    vec = st.lists(st.integers(0, q - 1), min_size=2 * n, max_size=2 * n)
    u, v = data.draw(vec), data.draw(vec)
    pu, pv = phi(small, big, beta, u), phi(small, big, beta, v)
    assert hamming_weight(pu) == symplectic_weight(u)
    assert phi_inverse(small, big, beta, pu) == u
    assert trace_alternating(big, beta, pu, pv) == symplectic_form(small, u, v)


def test_qsquare_round_trip_keeps_duality():
    F = field_of_order(3)
    rng = np.random.default_rng(5)
    c = random_code(F, "symplectic", 3, 3, rng)
    img = c.to_qsquare()
    assert img.to_symplectic() == c
    assert img.dual("alternating").to_symplectic() == c.dual()


def test_hermitian_dual_of_linear_code():
    F = field_of_order(4)
    gens = [[1, 2, 3, 0], [0, 1, 1, 1]]
    c = AdditiveCode.linear(F, "qsquare", 4, gens)
    d = c.dual("hermitian")
    brute = {v for v in oracles.all_vectors(4, 4) if all(hermitian_product(F, g, v) == 0 for g in gens)}
    assert _words(d) == brute


def test_euclidean_dual_of_linear_code():
    F = field_of_order(3)
    gens = [[1, 1, 1, 0], [0, 1, 2, 1]]
    c = AdditiveCode.linear(F, "classical", 4, gens)
    brute = {v for v in oracles.all_vectors(3, 4)
             if all(sum(a * b for a, b in zip(g, v)) % 3 == 0 for g in gens)}
    assert _words(c.dual("euclidean")) == brute


def test_nonlinear_code_rejects_hermitian_dual():
    F = field_of_order(4)
    c = AdditiveCode(F, "qsquare", 2, [[1, 0]])
    assert not c.is_linear()
    with pytest.raises(NotLinear):
        c.dual("hermitian")


def test_min_weight_in_difference():
    F = field_of_order(2)
    big = AdditiveCode(F, "symplectic", 3, [[1, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0]])
    small = AdditiveCode(F, "symplectic", 3, [[1, 1, 0, 0, 0, 0]])
    assert big.min_weight_in_difference(small) == 1
    assert small.min_weight_in_difference(small) is INFINITY
    with pytest.raises(NotASubcode):
        small.min_weight_in_difference(big)


def test_shorten_and_restrict():
    F = field_of_order(2)
    c = AdditiveCode(F, "symplectic", 3, [[1, 1, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 0, 1]])
    s = c.shorten([0])
    assert s.n == 2
    assert _words(s) == {(0, 0, 0, 0), (1, 1, 0, 0)}
    r = c.restrict([2])
    assert _words(r) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_direct_sum_weights_convolve():
    F = field_of_order(3)
    rng = np.random.default_rng(3)
    a = random_code(F, "symplectic", 2, 2, rng)
    b = random_code(F, "symplectic", 2, 3, rng)
    s = direct_sum(a, b)
    conv = np.convolve(a.weight_histogram(), b.weight_histogram())
    assert list(s.weight_histogram()) == list(conv)


def test_guards_and_ambient_checks():
    F = field_of_order(2)
    big = AdditiveCode.from_digits(F, "symplectic", 13, np.eye(26, dtype=np.int64))
    with pytest.raises(CodeTooLarge):
        big.weight_histogram()
    with pytest.raises(MixedAmbient):
        AdditiveCode(F, "symplectic", 2, [[1, 0, 0]])


def test_json_round_trip():
    F = field_of_order(9)
    c = AdditiveCode.linear(F, "qsquare", 3, [[1, 2, 5]])
    assert AdditiveCode.from_json(c.to_json()) == c


@pytest.mark.parametrize("q,n,dim", [(2, 6, 7), (3, 4, 5), (4, 4, 9), (5, 3, 4)])
def test_backends_agree(q, n, dim):
    F = field_of_order(q)
    c = random_code(F, "symplectic", n, dim, np.random.default_rng(q + n))
    args = (c.basis, c.p, c.symbol_map, c.n)
    ref = kernels.span_histogram(*args, backend="python")
    assert list(kernels.span_histogram(*args, backend=kernels.BACKEND)) == list(ref)
    assert list(kernels.span_histogram(*args, n_workers=3)) == list(ref)
    assert ref.sum() == c.size
