import pytest

from lltswap.lattice import config_from_ssyt
from lltswap.shapes import Cell, ShapeTuple
from lltswap.tableaux import TupleSSYT

RUNNING = ShapeTuple.of((8, 7, 6), ((4, 3, 2), (2, 0, 0)))


def filling(tup, rows):
    """rows[j][r] lists the entries of row r of shape j, left to right."""
    entries = {}
    for j, shape in enumerate(tup.shapes, start=1):
        for r in range(1, shape.num_parts + 1):
            values = rows[j][r]
            assert len(values) == len(shape.row_cells(r))
            for c, v in zip(shape.row_cells(r), values):
                entries[Cell(j, r, c)] = v
    return TupleSSYT(tup, entries)


def config_of(tup, rows, n):
    return config_from_ssyt(filling(tup, rows), n)


@pytest.fixture(scope="session")
def running_config():
    rows = {
        1: {1: [1] * 8, 2: [2, 2, 2, 2, 5, 5, 5], 3: [3, 3, 5, 5, 6, 6]},
        2: {1: [5, 7], 2: [4, 4, 6], 3: [5, 5]},
    }
    return config_of(RUNNING, rows, 7)


@pytest.fixture(scope="session")
def running_swapped_config():
    tup = ShapeTuple.of(((4, 3, 2), (2, 0, 0)), (8, 7, 6))
    rows = {
        1: {1: [2, 6], 2: [3, 4, 5], 3: [5, 5]},
        2: {1: [1] * 8, 2: [2, 2, 2, 5, 5, 5, 5], 3: [3, 4, 5, 6, 6, 7]},
    }
    return config_of(tup, rows, 7)
