import numpy as np
import pytest

from nbstab import families, puncture
from nbstab import stabilizer as st
from nbstab.additive import AdditiveCode, random_code
from nbstab.errors import DeltaOutOfRange, MixedAmbient, NotInPunctureCode, ZeroWeightWord
from nbstab.gf import field_of_order


@pytest.mark.parametrize("q,n,dim,seed", [(2, 3, 2, 0), (2, 4, 3, 1), (3, 3, 2, 2), (4, 2, 2, 3), (2, 3, 4, 4)])
def test_basis_pairs_give_the_all_pairs_puncture_code(q, n, dim, seed):
    F = field_of_order(q)
    rng = np.random.default_rng(seed)
    for c in (random_code(F, "symplectic", n, dim, rng), st.random_self_orthogonal(F, n, min(dim, n), rng)):
        assert puncture.puncture_code_symplectic(c).code == puncture.puncture_code_symplectic_allpairs(c)


def test_symplectic_puncture_code_of_css_matches_euclidean():
    code = families.bch_euclidean(2, 4, 3)
    b_perp = families.bch_code(2, 4, 3).code().dual()
    assert puncture.puncture_code_symplectic(code.carrier).code == puncture.puncture_code_euclidean(b_perp).code


@pytest.mark.parametrize("q,m,delta", [(2, 4, 3), (3, 2, 2), (3, 3, 2), (3, 3, 3), (4, 2, 2)])
def test_grm_subcode_in_cyclic_order(q, m, delta):
    pc = puncture.bch_puncture_code(q, m, delta).code
    for mu in puncture.certified_orders(q, m, delta):
        assert families.grm_code(q, mu, m).is_subcode_of(pc)


def test_lex_order_breaks_containment():
    pc = puncture.bch_puncture_code(2, 4, 3).code
    orders = puncture.certified_orders(2, 4, 3)
    assert not all(families.grm_code(2, mu, 4, order="lex").is_subcode_of(pc) for mu in orders)


def test_menus():
    assert [e.length for e in puncture.bch_puncture_menu(2, 4, 3)] == [15, 7]
    menu = puncture.bch_puncture_menu(3, 4, 2)
    assert [e.order for e in menu] == list(range(6))
    assert [e.length for e in menu] == [80, 53, 26, 17, 8, 5]
    assert menu[0].params(3) == "[[80,>=72,>=2]]_3"
    with pytest.raises(DeltaOutOfRange):
        puncture.bch_puncture_menu(2, 4, 5)


@pytest.mark.parametrize("q,mu,m", [(2, 1, 4), (2, 2, 4), (3, 1, 3), (3, 3, 2), (4, 2, 2), (2, 0, 3)])
def test_grm_min_weight_word(q, mu, m):
    w = puncture.grm_min_weight_word(q, mu, m)
    assert families.grm_code(q, mu, m).contains(w)
    assert sum(1 for x in w if x) == families.grm_distance(q, mu, m)


def test_find_weight_word_exhaustive():
    pc = puncture.bch_puncture_code(2, 4, 3)
    w = puncture.find_weight_word(pc, 7)
    assert w == [0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1]
    assert pc.contains(w)
    assert puncture.find_weight_word(pc, 0) == [0] * 15


def test_find_weight_word_through_grm_subcode():
    pc = puncture.bch_puncture_code(2, 6, 3)
    assert pc.code.size > 1 << 24
    for length in (31, 15, 7):
        w = puncture.find_weight_word(pc, length)
        assert w is not None and sum(1 for x in w if x) == length and pc.contains(w)


def test_puncturing_every_weight_of_a_small_code():
    code = families.hamming_euclidean(2, 3)
    pc = puncture.puncture_code_symplectic(code.carrier)
    lengths = sorted({int(x) for chunk in pc.code.words() for x in pc.code.word_weights(chunk)} - {0})
    assert lengths
    for r in lengths:
        w = puncture.find_weight_word(pc, r)
        out = puncture.puncture_to(code, w)
        assert out.n == r
        assert out.k_exp >= code.k_exp - (code.n - r)
        assert out.carrier.is_self_orthogonal()
        if out.k_exp > 0:
            assert out.d >= code.d


def test_puncture_errors():
    code = families.bch_euclidean(2, 4, 3)
    with pytest.raises(ZeroWeightWord):
        puncture.puncture_to(code, [0] * 15)
    with pytest.raises(MixedAmbient):
        puncture.puncture_to(code, [1] * 14)
    with pytest.raises(NotInPunctureCode):
        puncture.puncture_to(code, [1] + [0] * 14)
    with pytest.raises(MixedAmbient):
        puncture.puncture_code_euclidean(code.carrier)
    with pytest.raises(MixedAmbient):
        puncture.puncture_code_symplectic(AdditiveCode(field_of_order(2), "classical", 2, [[1, 1]]))
