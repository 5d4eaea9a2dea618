"""
The colored lattice-path model whose partition function is the LLT polynomial.

A configuration lives on an n x (s - r + 1) grid of faces. Paths of k colors
travel up and right, each color non-intersecting with itself. Edge states are
stored as bitmasks (bit j-1 set when color j occupies the edge); the public
`FaceState` view exposes them as frozensets of colors.

Face (i, c) has row i (0-based, row 0 is the bottom row and carries x_1) and
column c (0-based, column label r + c). Its edges are

    I = up[i][c]        bottom
    K = up[i + 1][c]    top
    J = right[i][c]     left
    L = right[i][c + 1] right
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .poly import Polynomial, from_counts
from .shapes import Cell, Partition, ShapeError, ShapeTuple

EdgeState = frozenset


class InvalidFace(ValueError):
    pass


def colors_of(mask: int) -> frozenset[int]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def mask_of(colors) -> int:
    m = 0
    for j in colors:
        m |= 1 << (j - 1)
    return m


class FaceState(NamedTuple):
    I: frozenset
    J: frozenset
    K: frozenset
    L: frozenset

    def check(self) -> None:
        if self.I & self.J:
            raise InvalidFace(f"color(s) {sorted(self.I & self.J)} enter from both bottom and left")
        if self.K & self.L:
            raise InvalidFace(f"color(s) {sorted(self.K & self.L)} exit both top and right")
        if self.I | self.J != self.K | self.L:
            raise InvalidFace("colors entering and exiting the face differ")


def _face_t(present: int, right: int) -> int:
    # for each color exiting right, count larger colors present in the face
    t = 0
    bit = 1
    while right >= bit:
        if right & bit:
            t += bin(present & ~((bit << 1) - 1)).count("1")
        bit <<= 1
    return t


def face_weight(face: FaceState, x: int, n: int | None = None) -> Polynomial:
    """
    Weight x^{|L|} * prod over colors i in L of t^{#(colors > i present)}.

    `x` is the 1-based index of the row variable; `n` defaults to `x`.
    """
    face.check()
    n = x if n is None else n
    present = mask_of(face.I | face.J)
    right = mask_of(face.L)
    exps = [0] * n
    exps[x - 1] = len(face.L)
    return Polynomial.monomial(n, _face_t(present, right), exps)


# boundary data


def _positions(mu: Partition) -> list[int]:
    return [part - m + 1 for m, part in enumerate(mu, start=1)]


def boundary_vector(partitions: Sequence[Partition], i: int) -> frozenset[int]:
    """Colors j for which i == mu^(j)_m - m + 1 for some m."""
    return frozenset(j for j, mu in enumerate(partitions, start=1) if i in _positions(mu))


def boundary_mask(partitions: Sequence[Partition], i: int) -> int:
    return mask_of(boundary_vector(partitions, i))


def column_range(tup: ShapeTuple) -> tuple[int, int]:
    """(r, s): leftmost bottom-boundary label and rightmost top-boundary label."""
    bottoms = [p for g in tup.inners for p in _positions(g)]
    tops = [p for b in tup.outers for p in _positions(b)]
    if not bottoms or not tops:
        raise ShapeError("every shape has zero parts; the lattice has no boundary paths")
    return min(bottoms), max(tops)


@dataclass(frozen=True)
class Boundary:
    k: int
    r: int
    s: int
    bottom: tuple[int, ...]
    top: tuple[int, ...]

    @classmethod
    def of(cls, tup: ShapeTuple) -> Boundary:
        r, s = column_range(tup)
        bottom = tuple(boundary_mask(tup.inners, r + c) for c in range(s - r + 1))
        top = tuple(boundary_mask(tup.outers, r + c) for c in range(s - r + 1))
        return cls(tup.k, r, s, bottom, top)

    @property
    def ncols(self) -> int:
        return self.s - self.r + 1

    def label(self, c: int) -> int:
        return self.r + c


# configurations


@dataclass(frozen=True)
class LatticeConfig:
    k: int
    r: int
    up: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.right)

    @property
    def ncols(self) -> int:
        return len(self.up[0])

    @property
    def top(self) -> tuple[int, ...]:
        return self.up[-1]

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.up[0]

    def face_masks(self, i: int, c: int) -> tuple[int, int, int, int]:
        return self.up[i][c], self.right[i][c], self.up[i + 1][c], self.right[i][c + 1]

    def face(self, i: int, c: int) -> FaceState:
        return FaceState(*(colors_of(m) for m in self.face_masks(i, c)))

    @property
    def faces(self) -> list[list[FaceState]]:
        return [[self.face(i, c) for c in range(self.ncols)] for i in range(self.n)]

    def validate(self) -> None:
        for i in range(self.n):
            if self.right[i][0] or self.right[i][-1]:
                raise InvalidFace(f"row {i} has a path on the left or right boundary")
            for c in range(self.ncols):
                self.face(i, c).check()

    @cached_property
    def t_exponent(self) -> int:
        t = 0
        for i in range(self.n):
            for c in range(self.ncols):
                I, J, _, L = self.face_masks(i, c)
                if L:
                    t += _face_t(I | J, L)
        return t

    @cached_property
    def x_exponents(self) -> tuple[int, ...]:
        return tuple(sum(bin(m).count("1") for m in row[1:]) for row in self.right)

    def weight(self) -> Polynomial:
        return Polynomial.monomial(self.n, self.t_exponent, self.x_exponents)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "rows": self.n,
            "columns": [self.r + c for c in range(self.ncols)],
            "faces": [
                [[sorted(s) for s in self.face(i, c)] for c in range(self.ncols)]
                for i in range(self.n)
            ],
        }


def _row_transitions(below: tuple[int, ...], k: int, floor: list[list[int]] | None):
    """
    Every way to route the paths entering one row from below.

    Yields (right_edges, above, t_exp, x_count). `floor[c]` lists, per color,
    the minimum number of that color's paths the new state must hold in
    columns 0..c; paths only move right, so falling below it is fatal.
    """
    ncols = len(below)
    right = [0] * (ncols + 1)
    above = [0] * ncols
    prefix = [0] * k

    def sweep(c: int, carry: int, t: int, xc: int):
        if c == ncols:
            if carry == 0:
                yield tuple(right), tuple(above), t, xc
            return
        I = below[c]
        if I & carry:
            return
        present = I | carry
        # enumerate subsets L of present; K is the complement
        sub = present
        while True:
            L = sub
            K = present & ~L
            ok = True
            if floor is not None:
                for j in range(k):
                    if (K >> j) & 1:
                        prefix[j] += 1
                for j in range(k):
                    if prefix[j] < floor[c][j]:
                        ok = False
                        break
            if ok:
                right[c + 1] = L
                above[c] = K
                yield from sweep(c + 1, L, t + (_face_t(present, L) if L else 0),
                                 xc + bin(L).count("1"))
            if floor is not None:
                for j in range(k):
                    if (K >> j) & 1:
                        prefix[j] -= 1
            if sub == 0:
                break
            sub = (sub - 1) & present

    yield from sweep(0, 0, 0, 0)


def _prefix_floor(top: tuple[int, ...], k: int) -> list[list[int]]:
    floor = []
    running = [0] * k
    for m in top:
        for j in range(k):
            running[j] += (m >> j) & 1
        floor.append(list(running))
    return floor


def enumerate_configs(tup: ShapeTuple, n: int) -> Iterator[LatticeConfig]:
    """Every configuration on the lattice of `tup` with n rows, each exactly once."""
    if n < 1:
        raise ValueError("the lattice needs at least one row")
    bd = Boundary.of(tup)
    floor = _prefix_floor(bd.top, bd.k)
    states = [bd.bottom]
    rights: list[tuple[int, ...]] = []

    def rows(i: int):
        if i == n:
            if states[-1] == bd.top:
                yield LatticeConfig(bd.k, bd.r, tuple(states), tuple(rights))
            return
        for right, above, _, _ in _row_transitions(states[-1], bd.k, floor):
            states.append(above)
            rights.append(right)
            yield from rows(i + 1)
            states.pop()
            rights.pop()

    yield from rows(0)


def partition_function(tup: ShapeTuple, n: int) -> Polynomial:
    """
    Sum of configuration weights, computed by transfer over row states.

    Equivalent to summing `c.weight()` over `enumerate_configs(tup, n)`.
    """
    if n < 1:
        raise ValueError("the lattice needs at least one row")
    bd = Boundary.of(tup)
    floor = _prefix_floor(bd.top, bd.k)
    zero = (0,) * n
    layer: dict[tuple[int, ...], dict[tuple[int, tuple[int, ...]], int]] = {
        bd.bottom: {(0, zero): 1}
    }
    for i in range(n):
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for state, acc in layer.items():
            for _, above, t, xc in _row_transitions(state, bd.k, floor):
                dest = nxt[above]
                for (t0, x0), coeff in acc.items():
                    x = x0[:i] + (xc,) + x0[i + 1:]
                    dest[(t0 + t, x)] += coeff
        layer = nxt
    return from_counts(n, layer.get(bd.top, {}))


def config_from_ssyt(T, n: int) -> LatticeConfig:
    """
    The configuration matching a tuple of tableaux.

    Row r of shape j becomes a path of color j; a cell (r, c) holding h is a
    step to the right out of the face in row h, column label c - r.
    """
    tup: ShapeTuple = T.tuple
    bd = Boundary.of(tup)
    ncols = bd.ncols
    up = [[0] * ncols for _ in range(n + 1)]
    right = [[0] * (ncols + 1) for _ in range(n)]
    for j, shape in enumerate(tup.shapes, start=1):
        bit = 1 << (j - 1)
        for row in range(1, shape.num_parts + 1):
            col = shape.inner[row - 1] - row + 1 - bd.r
            up[0][col] |= bit
            height = 0  # 0-based face row where the path currently is
            for c in shape.row_cells(row):
                h = T.entries[Cell(j, row, c)] - 1
                if h < height:
                    raise ValueError("entries along a row must weakly increase")
                for hh in range(height + 1, h + 1):
                    up[hh][col] |= bit
                right[h][col + 1] |= bit
                col += 1
                height = h
            for hh in range(height + 1, n + 1):
                up[hh][col] |= bit
    return LatticeConfig(bd.k, bd.r, tuple(map(tuple, up)), tuple(map(tuple, right)))
