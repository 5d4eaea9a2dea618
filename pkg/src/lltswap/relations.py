"""
Linear relations among LLT polynomials obtained by grouping configurations by matching.

Every configuration of a two-shape lattice induces a non-crossing matching of
its beads. Summing configuration weights within one matching gives a
polynomial g; tuples that share a bead geometry share these g's up to powers
of t, so their LLT polynomials are t-monomial combinations of the same g's.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantError, PreconditionError
from .lattice import enumerate_configs
from .poly import Monomial, Polynomial, equivalence_shift, scale_t
from .shapes import Partition, ShapeTuple, SkewShape
from .swap import BLUE, RED, BeadSequence, Matching, bead_sequence, induced_matching
from .tableaux import llt_poly

Arcs = frozenset  # frozenset of (i, j) position pairs, i < j


@dataclass(frozen=True)
class MatchingClass:
    matching: Matching
    arcs: Arcs
    g: Polynomial


def group_by_matching(tup: ShapeTuple, n: int) -> list[MatchingClass]:
    """Split the configurations of `tup` by induced matching; the g's sum to L."""
    beads = bead_sequence(tup)
    acc: dict = {}
    terms: dict = defaultdict(list)
    for config in enumerate_configs(tup, n):
        m = induced_matching(config)
        acc.setdefault(m, m.positions(beads))
        terms[m].append((Monomial(config.t_exponent, config.x_exponents), 1))
    out = [MatchingClass(m, acc[m], Polynomial(n, terms[m])) for m in acc]
    out.sort(key=lambda mc: sorted(mc.arcs))
    return out


# canonical order and coloring for a single row of 2n beads


def canonical_matchings(num_beads: int) -> list[Arcs]:
    """
    Non-crossing matchings of positions 0..num_beads-1 in the recursive order.

    A matching is coded by (a, b, c): the rightmost bead is matched to position
    2a, b indexes the matching of the 2a beads to its left and c the matching
    strictly inside the arc. Codes are compared lexicographically.
    """
    if num_beads % 2 or num_beads < 0:
        raise PreconditionError("a perfect matching needs an even number of beads")
    return [frozenset(m) for m in _canonical(num_beads // 2)]


_CANON: dict[int, list[list[tuple[int, int]]]] = {0: [[]]}


def _canonical(n: int) -> list[list[tuple[int, int]]]:
    if n not in _CANON:
        out = []
        last = 2 * n - 1
        for a in range(n):
            for left in _canonical(a):
                for inside in _canonical(n - a - 1):
                    shifted = [(i + 2 * a + 1, j + 2 * a + 1) for i, j in inside]
                    out.append(sorted(left + [(2 * a, last)] + shifted))
        _CANON[n] = out
    return _CANON[n]


def canonical_coloring(matching: Arcs) -> str:
    """Left end of every arc red, right end blue, as a string like "RRBB"."""
    size = 2 * len(matching)
    colors = [""] * size
    for i, j in matching:
        colors[i], colors[j] = "R", "B"
    return "".join(colors)


# transfer matrices


@dataclass(frozen=True)
class TransferMatrix:
    tuples: tuple[ShapeTuple, ...]
    order: tuple[Arcs, ...]
    entries: tuple[tuple[int | None, ...], ...]  # entries[i][j]: exponent of t, None if unrealized
    g: tuple[Polynomial, ...]

    def entry(self, i: int, j: int) -> int | None:
        return self.entries[i][j]

    def rows_text(self) -> list[list[str]]:
        def fmt(e):
            if e is None:
                return "0"
            return "1" if e == 0 else "t" if e == 1 else f"t^{e}"
        return [[fmt(e) for e in row] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "order": [sorted(list(p) for p in m) for m in self.order],
            "rows": [[None if e is None else {"exp": e} for e in row] for row in self.entries],
            "g": [p.to_json() for p in self.g],
        }


def _geometry(beads: BeadSequence) -> tuple:
    return tuple((b.boundary, b.column) for b in beads.cyclic)


def transfer_matrix(family: Sequence[ShapeTuple], n: int,
                    order: Sequence[Arcs] | None = None) -> TransferMatrix:
    """
    Express each family member over the g's of a common bead geometry.

    g_j is the class of matching j in the first member that realizes it with
    the canonical coloring (every arc red on the left). Without an explicit
    `order`, single-row geometries use the canonical order.
    """
    if not family:
        raise PreconditionError("empty family")
    seqs = [bead_sequence(t) for t in family]
    geom = _geometry(seqs[0])
    for t, s in zip(family, seqs):
        if _geometry(s) != geom:
            raise PreconditionError(f"{t} does not share the bead geometry of {family[0]}")
    if order is None:
        if seqs[0].bottom and seqs[0].top:
            raise PreconditionError("an explicit matching order is needed for two-row geometries")
        order = canonical_matchings(len(seqs[0]))
    order = tuple(frozenset(m) for m in order)
    index = {m: j for j, m in enumerate(order)}

    classes = []
    for t in family:
        by_arcs = {}
        for mc in group_by_matching(t, n):
            if mc.arcs not in index:
                raise InvariantError(f"{t} realizes a matching outside the given order")
            by_arcs[mc.arcs] = mc.g
        classes.append(by_arcs)

    g: list[Polynomial | None] = [None] * len(order)
    for t, s, by_arcs in zip(family, seqs, classes):
        colors = "".join("R" if b.color == RED else "B" for b in s.cyclic)
        for m, j in index.items():
            if g[j] is None and colors == canonical_coloring(m) and m in by_arcs:
                g[j] = by_arcs[m]
    missing = [j + 1 for j, p in enumerate(g) if p is None]
    if missing:
        raise PreconditionError(f"no family member defines g for matchings {missing}")

    entries = []
    for t, by_arcs in zip(family, classes):
        row: list[int | None] = []
        for j, m in enumerate(order):
            if m not in by_arcs:
                row.append(None)
                continue
            k = equivalence_shift(by_arcs[m], g[j])
            if k is None:
                raise InvariantError(f"{t}: class of matching {j + 1} is not a t-shift of g_{j + 1}")
            row.append(k)
        entries.append(tuple(row))
    return TransferMatrix(tuple(family), order, tuple(entries), tuple(g))


def is_unit_lower_triangular(entries: Sequence[Sequence[int | None]]) -> bool:
    return all(
        (row[j] == 0 if i == j else row[j] is None) if j >= i else True
        for i, row in enumerate(entries) for j in range(len(row))
    )


def _t_poly(exp: int | None) -> Polynomial:
    return Polynomial(0) if exp is None else Polynomial.t(0, exp)


def _lift(p: Polynomial, n: int) -> Polynomial:
    """A polynomial in t alone, viewed in the alphabet x_1..x_n."""
    return Polynomial(n, [(Monomial(m.t_exp, (0,) * n), c) for m, c in p.terms])


def inverse_matrix(matrix: TransferMatrix) -> list[list[Polynomial]]:
    """Inverse of a square unit lower-triangular matrix, entries as polynomials in t (n = 0)."""
    entries = matrix.entries
    size = len(entries)
    if any(len(r) != size for r in entries) or not is_unit_lower_triangular(entries):
        raise PreconditionError("only square unit lower-triangular matrices are inverted")
    inv = [[Polynomial(0) for _ in range(size)] for _ in range(size)]
    for i in range(size):
        inv[i][i] = Polynomial.one(0)
        for j in range(i - 1, -1, -1):
            acc = Polynomial(0)
            for k in range(j + 1, i + 1):
                acc = acc + inv[i][k] * _t_poly(entries[k][j])
            inv[i][j] = -acc
    return inv


def solve_g(matrix: TransferMatrix, llts: Sequence[Polynomial]) -> list[Polynomial]:
    """Forward substitution for L_i = sum_j t^{w_ij} g_j on a unit lower-triangular system."""
    entries = matrix.entries
    size = len(matrix.order)
    if len(llts) < size or len(entries) < size:
        raise PreconditionError("need one LLT polynomial per matching")
    if not is_unit_lower_triangular([row[:size] for row in entries[:size]]):
        raise PreconditionError("matrix is singular or not unit lower-triangular in this order")
    g: list[Polynomial] = []
    for i in range(size):
        acc = llts[i]
        for j in range(i):
            if entries[i][j] is not None:
                acc = acc - scale_t(g[j], entries[i][j])
        g.append(acc)
    return g


def reconstruct(matrix: TransferMatrix, i: int) -> Polynomial:
    """sum_j t^{w_ij} g_j for row i."""
    n = matrix.g[0].n
    out = Polynomial(n)
    for j, e in enumerate(matrix.entries[i]):
        if e is not None:
            out = out + scale_t(matrix.g[j], e)
    return out


# specific identities


def _row(beta: int, gamma: int) -> SkewShape:
    return SkewShape((beta,), (gamma,))


def lemma317_check(beta1: int, gamma1: int, beta2: int, gamma2: int, n: int) -> bool:
    """L(b1/g1, b2/g2) == L(b2/g2, b1/g1) + (t^-1 - 1) L(b2/g1, b1/g2) for one-row shapes."""
    if not (gamma1 < gamma2 <= beta1 < beta2):
        raise PreconditionError("need gamma1 < gamma2 <= beta1 < beta2")
    lhs = llt_poly(ShapeTuple((_row(beta1, gamma1), _row(beta2, gamma2))), n)
    swapped = llt_poly(ShapeTuple((_row(beta2, gamma2), _row(beta1, gamma1))), n)
    crossed = llt_poly(ShapeTuple((_row(beta2, gamma1), _row(beta1, gamma2))), n)
    return lhs == swapped + scale_t(crossed, -1) - crossed


SMALL_FAMILY = (
    ShapeTuple.of((3, 3), (1,)),
    ShapeTuple.of((2, 2), (3,)),
    ShapeTuple.of((3, 2), (2,)),
)


def small_relation_check(n: int) -> bool:
    """L3 == t^-1 L1 + t L2, together with L1 == t^2 L((1), (3, 3))."""
    if n < 2:
        raise PreconditionError("the relation is stated for n >= 2")
    l1, l2, l3 = (llt_poly(t, n) for t in SMALL_FAMILY)
    side = llt_poly(ShapeTuple.of((1,), (3, 3)), n)
    return l3 == scale_t(l1, -1) + scale_t(l2, 1) and l1 == scale_t(side, 2)


TEN_FAMILY = tuple(ShapeTuple.of(a, b) for a, b in (
    ((4, 4, 4), (1, 1, 1)),
    ((4, 4, 3), (2, 1, 1)),
    ((4, 4, 2), (2, 2, 1)),
    ((4, 3, 3), (3, 1, 1)),
    ((4, 3, 2), (3, 2, 1)),
    ((4, 4, 1), (2, 2, 2)),
    ((4, 1, 1), (3, 3, 3)),
    ((4, 2, 2), (3, 3, 1)),
    ((4, 2, 1), (3, 3, 2)),
    ((4, 3, 1), (3, 2, 2)),
))


def catalan_family(values: Sequence[int]) -> list[ShapeTuple]:
    """
    All C(2n, n) ways of splitting 2n strictly decreasing values between two shapes.

    A chosen index set i_1 < ... < i_n gives the partition with parts
    values[i_m] - n + m, so the shifted parts of the two shapes are exactly
    the given values.
    """
    values = tuple(int(v) for v in values)
    if len(values) % 2 or not values:
        raise PreconditionError("need an even, positive number of values")
    if any(a <= b for a, b in zip(values, values[1:])) or values[-1] < 0:
        raise PreconditionError("values must be strictly decreasing and nonnegative")
    n = len(values) // 2

    def part(idx) -> Partition:
        p = tuple(values[i] - n + m for m, i in enumerate(idx, start=1))
        if any(x < 0 for x in p):
            raise PreconditionError(f"values {values} give the negative partition {p}")
        return p

    out = []
    for first in itertools.combinations(range(2 * n), n):
        second = tuple(i for i in range(2 * n) if i not in first)
        out.append(ShapeTuple.of(part(first), part(second)))
    return out


def catalan_transfer(values: Sequence[int], n: int) -> TransferMatrix:
    """Transfer matrix for the whole family, canonical members first in canonical order."""
    family = catalan_family(values)
    size = len(values)
    order = canonical_matchings(size)
    by_coloring = {}
    for t in family:
        top, _ = bead_sequence(t).colors()
        by_coloring[top] = t
    canon = [by_coloring[canonical_coloring(m)] for m in order]
    rest = [t for t in family if t not in canon]
    return transfer_matrix(canon + rest, n, order)


def sorted_bead_row(beta1: Sequence[int], beta2: Sequence[int]) -> list[tuple[int, int]]:
    """
    Shift both partitions by (n-1, ..., 0), merge, cancel values present in both,
    and read the rest in increasing order (left to right) as (color, column) pairs.
    """
    if len(beta1) != len(beta2):
        raise PreconditionError("partitions need the same number of parts")
    n = len(beta1)
    s1 = {p + n - m for m, p in enumerate(beta1, start=1)}
    s2 = {p + n - m for m, p in enumerate(beta2, start=1)}
    row = [(BLUE, v) for v in s1 - s2] + [(RED, v) for v in s2 - s1]
    return [(c, v - n + 1) for c, v in sorted(row, key=lambda cv: cv[1])]


def colored_row_text(row: Sequence[tuple[int, int]]) -> str:
    return "".join("B" if c == BLUE else "R" for c, _ in row)
