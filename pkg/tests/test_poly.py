import json

import pytest
from hypothesis import given, settings, strategies as st

from lltswap.poly import (
    AlphabetMismatch, Monomial, Polynomial, equivalence_shift, is_symmetric, scale_t,
    substitute_t_inverse,
)

N = 2


def x(i, n=N):
    return Polynomial.x(n, i)


T = Polynomial.t(N)
ONE_ONE = T * (x(1) ** 2 + x(2) ** 2) + (Polynomial.one(N) + T) * x(1) * x(2)

terms = st.lists(
    st.tuples(st.integers(-3, 3), st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-4, 4)),
    max_size=5,
)
polys = terms.map(lambda ts: Polynomial(N, [(Monomial(t, xs), c) for t, xs, c in ts]))


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(N)
    assert p * Polynomial.one(N) == p


@given(polys, st.integers(-10, 10))
def test_shift_recovered(q, k):
    if q.is_zero():
        return
    assert equivalence_shift(scale_t(q, k), q) == k


@given(polys, polys)
@settings(max_examples=50)
def test_symmetric_products(p, q):
    def symmetrize(f):
        swapped = Polynomial(N, [(Monomial(m.t_exp, m.x_exps[::-1]), c) for m, c in f.terms])
        return f + swapped
    a, b = symmetrize(p), symmetrize(q)
    assert is_symmetric(a) and is_symmetric(b)
    assert is_symmetric(a * b)


@given(polys)
def test_json_round_trip(p):
    assert Polynomial.from_json(json.dumps(p.to_json())) == p


@given(polys)
def test_t_inverse_is_involution(p):
    assert substitute_t_inverse(substitute_t_inverse(p)) == p


def test_scale_examples():
    p = x(1) + x(2)
    assert scale_t(p, 0) == p
    assert scale_t(p, 2) == Polynomial.t(N, 2) * p
    assert scale_t(scale_t(p, 3), -3) == p


def test_shift_examples():
    assert equivalence_shift(scale_t(ONE_ONE, 5), ONE_ONE) == 5
    assert equivalence_shift(ONE_ONE, ONE_ONE) == 0
    assert equivalence_shift(x(1), x(2)) is None


def test_symmetry_examples():
    assert is_symmetric(x(1) + x(2))
    assert not is_symmetric(x(1))
    assert is_symmetric(ONE_ONE)


def test_t_inverse_examples():
    assert substitute_t_inverse(T * x(1)) == Polynomial.t(N, -1) * x(1)
    assert substitute_t_inverse(Polynomial.one(N)) == Polynomial.one(N)


def test_canonical_order_and_text():
    p = Polynomial.t(2, 2) * x(1) ** 2 * x(2) + x(1) * x(2) ** 2
    assert p.to_text() == "t^2*x1^2*x2 + x1*x2^2"
    assert ONE_ONE.to_text() == "t*x1^2 + x1*x2 + t*x1*x2 + t*x2^2"
    assert Polynomial.zero(3).to_text() == "0"
    assert (Polynomial.one(1) - Polynomial.t(1, -1) * 2).to_text() == "-2*t^-1 + 1"


def test_zero_keeps_alphabet():
    z = Polynomial.zero(3)
    assert z.to_json() == {"n": 3, "terms": []}
    assert z != Polynomial.zero(2)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        x(1, 1) + x(1, 2)
    with pytest.raises(ValueError):
        Polynomial(1, [(Monomial(0, (-1,)), 1)])
