import pytest
from hypothesis import given, settings, strategies as st

from lltswap.lattice import (
    Boundary, FaceState, InvalidFace, LatticeConfig, boundary_vector, column_range, config_from_ssyt,
    enumerate_configs, face_weight, partition_function,
)
from lltswap.poly import Polynomial, is_symmetric
from lltswap.shapes import ShapeError, ShapeTuple, SkewShape, desk_corpus
from lltswap.tableaux import enumerate_ssyt, llt_poly

from conftest import RUNNING, filling

SKEW_PAIR = ShapeTuple.of(((2, 2), (1, 0)), (1,))
F = frozenset


def test_boundary_vector_examples():
    assert boundary_vector([(1,)], 1) == {1}
    mus = [(8, 7, 6), (4, 3, 2)]
    assert boundary_vector(mus, 8) == {1}
    assert boundary_vector(mus, 4) == {1, 2}  # 6 - 3 + 1 and 4 - 1 + 1
    assert boundary_vector(mus, 5) == set()
    assert boundary_vector([(2, 2)], 1) == {1}
    assert boundary_vector([(2, 2)], 2) == {1}


def test_column_ranges():
    assert column_range(ShapeTuple.of((1,))) == (0, 1)
    assert column_range(SKEW_PAIR) == (-1, 2)
    assert Boundary.of(SKEW_PAIR).ncols == 4
    assert Boundary.of(RUNNING).ncols == 11


def test_column_range_needs_parts():
    with pytest.raises(ShapeError):
        column_range(ShapeTuple((SkewShape((), ()),)))


def test_face_weights():
    empty = FaceState(F(), F(), F(), F())
    assert face_weight(empty, 1) == Polynomial.one(1)
    straight = FaceState(F({1}), F(), F({1}), F())
    assert face_weight(straight, 1) == Polynomial.one(1)
    # blue exits right while red is present
    xt = Polynomial.x(1, 1) * Polynomial.t(1)
    assert face_weight(FaceState(F({2}), F({1}), F({2}), F({1})), 1) == xt
    assert face_weight(FaceState(F({1}), F({2}), F({2}), F({1})), 1) == xt
    # red exiting right costs nothing
    assert face_weight(FaceState(F({1}), F({2}), F({1}), F({2})), 2) == Polynomial.x(2, 2)


def test_invalid_faces():
    with pytest.raises(InvalidFace):
        face_weight(FaceState(F({1}), F({1}), F({1}), F()), 1)
    with pytest.raises(InvalidFace):
        face_weight(FaceState(F({1}), F(), F({2}), F()), 1)


def test_sample_configuration_is_enumerated():
    T = filling(SKEW_PAIR, {1: {1: [1], 2: [1, 2]}, 2: {1: [1]}})
    c = config_from_ssyt(T, 2)
    c.validate()
    assert c in set(enumerate_configs(SKEW_PAIR, 2))
    # the highlighted face: bottom row, column labelled 1
    face = c.face(0, 1 - c.r)
    assert face.L == {1} and face.K == {2}
    assert c.t_exponent == 1


def test_two_boxes_partition_function():
    x1, x2, t = Polynomial.x(2, 1), Polynomial.x(2, 2), Polynomial.t(2)
    assert partition_function(ShapeTuple.of((1,), (1,)), 2) == t * (x1 ** 2 + x2 ** 2) + (Polynomial.one(2) + t) * x1 * x2


def test_straight_up_is_unique():
    tup = ShapeTuple.of(((2, 1), (2, 1)))
    assert len(list(enumerate_configs(tup, 1))) == 1
    assert partition_function(tup, 1) == Polynomial.one(1)


@pytest.mark.parametrize("index", range(0, 3660, 45))
def test_configs_biject_with_fillings(index):
    tup = desk_corpus()[index]
    for n in (1, 2, 3):
        configs = list(enumerate_configs(tup, n))
        images = [config_from_ssyt(T, n) for T in enumerate_ssyt(tup, n)]
        assert len(configs) == len(set(configs)) == len(images)
        assert set(images) == set(configs)
        for c in configs[:20]:
            c.validate()


@given(st.sampled_from(desk_corpus()), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_partition_function_matches_tableaux(tup, n):
    Z = partition_function(tup, n)
    assert Z == llt_poly(tup, n)
    assert is_symmetric(Z)
    assert Z == sum((c.weight() for c in enumerate_configs(tup, n)), Polynomial.zero(n))


def test_json_shape():
    c = next(iter(enumerate_configs(SKEW_PAIR, 2)))
    data = c.to_json()
    assert data["k"] == 2 and data["rows"] == 2
    assert data["columns"] == [-1, 0, 1, 2]
    assert len(data["faces"]) == 2 and all(len(row) == 4 for row in data["faces"])
    assert isinstance(c, LatticeConfig)
