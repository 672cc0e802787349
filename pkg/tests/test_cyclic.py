import random

import pytest

from nbstab.cyclic import (
    build_cyclic,
    coset_of,
    cyclotomic_cosets,
    euclidean_self_orthogonal,
    hermitian_self_orthogonal,
    hermitian_self_orthogonal_alt,
    is_coset_closed,
    union_of_cosets,
)
from nbstab.errors import NotCoprime, NotCosetClosed
from nbstab.gf import Poly, field_of_order


def test_cosets_partition():
    cs = cyclotomic_cosets(15, 2)
    assert cs[:3] == [(0,), (1, 2, 4, 8), (3, 6, 9, 12)]
    assert sorted(x for c in cs for x in c) == list(range(15))
    with pytest.raises(NotCoprime):
        cyclotomic_cosets(15, 3)


def _random_closed(n, mult, rng):
    cs = cyclotomic_cosets(n, mult)
    picks = [c for c in cs if rng.random() < 0.35]
    return tuple(sorted(x for c in picks for x in c))


GRID_H = [(5, 2), (15, 2), (21, 2), (13, 3), (8, 3), (17, 4), (7, 2)]
GRID_E = [(7, 2), (15, 2), (13, 3), (8, 3), (11, 3), (5, 4), (31, 2), (9, 2)]


def test_hermitian_criterion_matches_linear_algebra():
    rng = random.Random(11)
    checked = 0
    for n, q in GRID_H:
        F = field_of_order(q * q)
        for _ in range(12):
            z = _random_closed(n, q * q, rng)
            if len(z) == n:
                continue
            code = build_cyclic(n, F, z).code("qsquare")
            direct = code.dual("hermitian").is_subcode_of(code)
            assert hermitian_self_orthogonal(z, n, q) == direct == hermitian_self_orthogonal_alt(z, n, q)
            checked += 1
    assert checked >= 60


def test_euclidean_criterion_matches_linear_algebra():
    rng = random.Random(12)
    checked = 0
    for n, q in GRID_E:
        F = field_of_order(q)
        for _ in range(12):
            z = _random_closed(n, q, rng)
            if len(z) == n:
                continue
            code = build_cyclic(n, F, z).code()
            direct = code.dual("euclidean").is_subcode_of(code)
            assert euclidean_self_orthogonal(z, n) == direct
            checked += 1
    assert checked >= 60


def test_generator_divides_x_n_minus_one_and_is_cyclic():
    F = field_of_order(3)
    c = build_cyclic(13, F, union_of_cosets([1], 13, 3))
    xn1 = Poly(F, tuple([F.neg(1)] + [0] * 12 + [1]))
    assert (xn1 % c.generator).is_zero()
    code = c.code()
    assert code.dim == c.dimension == 13 - 3
    for g in code.generators():
        assert code.contains(g[-1:] + g[:-1])


@pytest.mark.parametrize("n,q,delta", [(15, 2, 5), (15, 2, 7), (13, 3, 3), (8, 3, 3), (15, 4, 4)])
def test_bch_bound(n, q, delta):
    F = field_of_order(q)
    z = union_of_cosets(range(1, delta), n, q)
    code = build_cyclic(n, F, z).code()
    assert code.min_weight() >= delta


def test_rejects_open_defining_sets():
    with pytest.raises(NotCosetClosed):
        build_cyclic(15, field_of_order(2), [1])
    assert not is_coset_closed([1], 15, 2)
    assert coset_of(1, 15, 4) == (1, 4)
