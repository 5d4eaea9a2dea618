from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from lltswap.poly import Polynomial, is_symmetric, scale_t, substitute_t_inverse
from lltswap.shapes import ShapeTuple, count_triples, desk_corpus, triples
from lltswap.tableaux import coinv, enumerate_ssyt, inversion_llt, is_coinversion, llt_poly

from conftest import filling

TWO_BOXES = ShapeTuple.of((1,), (1,))
SKEW_PAIR = ShapeTuple.of(((2, 2), (1, 0)), (1,))


def _two_boxes_poly():
    x1, x2, t = Polynomial.x(2, 1), Polynomial.x(2, 2), Polynomial.t(2)
    return t * (x1 ** 2 + x2 ** 2) + (Polynomial.one(2) + t) * x1 * x2


def test_two_boxes_by_hand():
    # the 4 fillings (b, c): coinversion iff b <= c
    assert llt_poly(TWO_BOXES, 2) == _two_boxes_poly()


def test_coinversion_examples():
    (tr,) = triples(TWO_BOXES)
    low = filling(TWO_BOXES, {1: {1: [1]}, 2: {1: [2]}})
    high = filling(TWO_BOXES, {1: {1: [2]}, 2: {1: [1]}})
    assert is_coinversion(low, *tr) and coinv(low) == 1
    assert not is_coinversion(high, *tr) and coinv(high) == 0


def test_sample_filling_has_one_coinversion():
    T = filling(SKEW_PAIR, {1: {1: [1], 2: [1, 2]}, 2: {1: [1]}})
    hits = [tr for tr in triples(SKEW_PAIR) if is_coinversion(T, *tr)]
    assert len(hits) == 1
    assert hits[0].v.shape == 1 and hits[0].v.row == 1


@pytest.mark.parametrize("tup,n,count", [
    (ShapeTuple.of((1,)), 3, 3),
    (ShapeTuple.of((2, 1)), 3, 8),
    (TWO_BOXES, 2, 4),
    (SKEW_PAIR, 2, 4),
])
def test_filling_counts(tup, n, count):
    fillings = list(enumerate_ssyt(tup, n))
    assert len(fillings) == count
    assert len({tuple(sorted(T.entries.items())) for T in fillings}) == count


def _slow_llt(tup, n):
    counts = Counter((coinv(T), T.weight(n)) for T in enumerate_ssyt(tup, n))
    return Polynomial(n, {(t, x): c for (t, x), c in counts.items()})


@pytest.mark.parametrize("index", range(0, 3660, 61))
def test_fast_agrees_with_definition(index):
    tup = desk_corpus()[index]
    assert llt_poly(tup, 2) == _slow_llt(tup, 2)


def _schur_product(tup, n):
    out = Polynomial.one(n)
    for shape in tup.shapes:
        out = out * llt_poly(ShapeTuple((shape,)), n)
    return out


@given(st.sampled_from(desk_corpus()), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_t_equal_one_is_product(tup, n):
    assert llt_poly(tup, n).at_t_equals_one() == _schur_product(tup, n)


@given(st.sampled_from(desk_corpus()), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_symmetric_and_inversion(tup, n):
    L = llt_poly(tup, n)
    assert is_symmetric(L)
    assert scale_t(substitute_t_inverse(inversion_llt(tup, n)), count_triples(tup)) == L


def test_alphabet_must_be_positive():
    with pytest.raises(ValueError):
        llt_poly(TWO_BOXES, 0)
