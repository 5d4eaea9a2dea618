"""
Tuples of semistandard tableaux and the coinversion LLT polynomial.

Rows weakly increase to the right, columns strictly increase upward (French
notation). A filling of a tuple is one filling per skew shape, so the set of
fillings is a Cartesian product and is generated that way.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Mapping

from .poly import Polynomial, from_counts, scale_t, substitute_t_inverse
from .shapes import Cell, ShapeTuple, SkewShape, cells, count_triples, triples


@dataclass(frozen=True)
class TupleSSYT:
    tuple: ShapeTuple
    entries: Mapping[Cell, int]

    def __getitem__(self, cell: Cell) -> int:
        return self.entries[Cell(*cell[:3])]

    def weight(self, n: int) -> tuple[int, ...]:
        x = [0] * n
        for value in self.entries.values():
            x[value - 1] += 1
        return tuple(x)


def _shape_fillings(shape: SkewShape, n: int) -> list[tuple[int, ...]]:
    """Fillings of one skew shape, as tuples aligned with its (row, col) cell order."""
    order = [(r, c) for r in range(1, shape.num_parts + 1) for c in shape.row_cells(r)]
    index = {rc: i for i, rc in enumerate(order)}
    left = [index.get((r, c - 1)) for r, c in order]
    below = [index.get((r - 1, c)) for r, c in order]
    out: list[tuple[int, ...]] = []
    current = [0] * len(order)

    def fill(pos: int) -> None:
        if pos == len(order):
            out.append(tuple(current))
            return
        lo = 1
        if left[pos] is not None:
            lo = max(lo, current[left[pos]])
        if below[pos] is not None:
            lo = max(lo, current[below[pos]] + 1)
        for value in range(lo, n + 1):
            current[pos] = value
            fill(pos + 1)

    fill(0)
    return out


def enumerate_ssyt(tup: ShapeTuple, n: int) -> Iterator[TupleSSYT]:
    """Every filling with entries in 1..n, in lexicographic order over the cells."""
    if n < 1:
        raise ValueError("alphabet size must be at least 1")
    all_cells = cells(tup)
    per_shape = [_shape_fillings(shape, n) for shape in tup.shapes]
    for combo in itertools.product(*per_shape):
        values = [v for filling in combo for v in filling]
        yield TupleSSYT(tup, dict(zip(all_cells, values)))


def is_coinversion(T: TupleSSYT, u: Cell, v: Cell, w: Cell) -> bool:
    b = T[v]
    low_ok = u.virtual or T[u] <= b
    high_ok = w.virtual or b <= T[w]
    return low_ok and high_ok


def coinv(T: TupleSSYT) -> int:
    return sum(1 for tr in triples(T.tuple) if is_coinversion(T, *tr))


class _CompiledTuple:
    """Index form of a tuple's cells and triples, shared by the fast generating function."""

    def __init__(self, tup: ShapeTuple):
        self.cells = cells(tup)
        pos = {c: i for i, c in enumerate(self.cells)}
        self.triples = [
            (None if u.virtual else pos[u], pos[v], None if w.virtual else pos[w])
            for u, v, w in triples(tup)
        ]

    def coinv(self, values) -> int:
        count = 0
        for ui, vi, wi in self.triples:
            b = values[vi]
            if (ui is None or values[ui] <= b) and (wi is None or b <= values[wi]):
                count += 1
        return count


def llt_poly(tup: ShapeTuple, n: int) -> Polynomial:
    """Sum over fillings T of t^coinv(T) x^T."""
    if n < 1:
        raise ValueError("alphabet size must be at least 1")
    compiled = _CompiledTuple(tup)
    per_shape = []
    for shape in tup.shapes:
        entries = []
        for filling in _shape_fillings(shape, n):
            x = [0] * n
            for value in filling:
                x[value - 1] += 1
            entries.append((filling, x))
        per_shape.append(entries)

    counts: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
    for combo in itertools.product(*per_shape):
        values = [v for filling, _ in combo for v in filling]
        x = tuple(sum(col) for col in zip(*(xs for _, xs in combo))) if combo else (0,) * n
        counts[(compiled.coinv(values), x)] += 1
    return from_counts(n, counts)


def inversion_llt(tup: ShapeTuple, n: int) -> Polynomial:
    """
    The inversion LLT polynomial G, recovered from L(t) = t^m G(1/t).

    With m the number of triples, G(t) = t^m L(1/t).
    """
    m = count_triples(tup)
    return scale_t(substitute_t_inverse(llt_poly(tup, n)), m)
