"""
Partitions with a fixed number of parts, skew shapes and tuples of skew shapes.

Cells use French coordinates (row i counted upward, column j to the right),
so the content of a cell is j - i. A tuple of skew shapes is drawn with the
first shape in the south-west and later shapes further north-east along the
content lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

Partition = tuple[int, ...]


class ShapeError(ValueError):
    pass


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"{parts} is not weakly decreasing")
    return parts


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = check_partition(self.inner)
        if len(outer) != len(inner):
            raise ShapeError(f"{outer}/{inner}: outer and inner need the same number of parts")
        if any(g > b for b, g in zip(outer, inner)):
            raise ShapeError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def straight(cls, parts: Sequence[int]) -> SkewShape:
        return cls(tuple(parts), (0,) * len(parts))

    @property
    def num_parts(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_cells(self, row: int) -> range:
        """Columns of the cells in `row` (1-based)."""
        return range(self.inner[row - 1] + 1, self.outer[row - 1] + 1)

    def __str__(self) -> str:
        if not any(self.inner):
            return str(self.outer)
        return f"{self.outer}/{self.inner}"

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}


class Cell(NamedTuple):
    shape: int
    row: int
    col: int
    virtual: bool = False

    @property
    def content(self) -> int:
        return self.col - self.row


class Triple(NamedTuple):
    u: Cell
    v: Cell
    w: Cell


@dataclass(frozen=True)
class ShapeTuple:
    shapes: tuple[SkewShape, ...]

    def __post_init__(self):
        shapes = tuple(self.shapes)
        if not shapes:
            raise ShapeError("a shape tuple needs at least one shape")
        if not all(isinstance(s, SkewShape) for s in shapes):
            raise ShapeError("shapes must be SkewShape instances")
        object.__setattr__(self, "shapes", shapes)

    @classmethod
    def of(cls, *items) -> ShapeTuple:
        """
        Build a tuple from partitions or (outer, inner) pairs.

        >>> ShapeTuple.of((8, 7, 6), ((4, 3, 2), (2, 0, 0)))
        ShapeTuple(((8, 7, 6), (4, 3, 2)/(2, 0, 0)))
        """
        shapes = []
        for item in items:
            if isinstance(item, SkewShape):
                shapes.append(item)
            elif len(item) == 2 and all(isinstance(x, (tuple, list)) for x in item):
                shapes.append(SkewShape(tuple(item[0]), tuple(item[1])))
            else:
                shapes.append(SkewShape.straight(item))
        return cls(tuple(shapes))

    @property
    def k(self) -> int:
        return len(self.shapes)

    @property
    def outers(self) -> tuple[Partition, ...]:
        return tuple(s.outer for s in self.shapes)

    @property
    def inners(self) -> tuple[Partition, ...]:
        return tuple(s.inner for s in self.shapes)

    def __getitem__(self, i: int) -> SkewShape:
        return self.shapes[i]

    def __len__(self) -> int:
        return len(self.shapes)

    def __repr__(self) -> str:
        return f"ShapeTuple(({', '.join(str(s) for s in self.shapes)}))"

    def to_json(self) -> dict:
        return {"shapes": [s.to_json() for s in self.shapes]}

    @classmethod
    def from_json(cls, data: Mapping | Sequence | str) -> ShapeTuple:
        """Accepts {"shapes": [...]} or a bare list of {"outer", "inner"} objects."""
        if isinstance(data, str):
            data = json.loads(data)
        items = data["shapes"] if isinstance(data, Mapping) else data
        shapes = []
        for item in items:
            if isinstance(item, Mapping):
                outer = tuple(item["outer"])
                inner = tuple(item.get("inner") or (0,) * len(outer))
                shapes.append(SkewShape(outer, inner))
            else:
                shapes.append(SkewShape.straight(item))
        return cls(tuple(shapes))


def cells(tup: ShapeTuple) -> list[Cell]:
    """All cells, ordered by (shape, row, column)."""
    out = []
    for j, shape in enumerate(tup.shapes, start=1):
        for r in range(1, shape.num_parts + 1):
            for c in shape.row_cells(r):
                out.append(Cell(j, r, c))
    return out


def triples(tup: ShapeTuple) -> list[Triple]:
    """
    All triples (u, v, w) of the tuple.

    w sits in row r of a later shape than v with content(w) == content(v), and
    u is the position immediately left of w. Real u, w lie inside the skew row;
    a virtual u sits at the end of the inner row (column inner_r, possibly 0)
    and a virtual w sits just past the end of the outer row (column outer_r + 1).
    """
    by_content: dict[int, list[Cell]] = {}
    for cell in cells(tup):
        by_content.setdefault(cell.content, []).append(cell)

    out = []
    for j, shape in enumerate(tup.shapes, start=1):
        for r in range(1, shape.num_parts + 1):
            lo, hi = shape.inner[r - 1], shape.outer[r - 1]
            for wc in range(lo + 1, hi + 2):
                w = Cell(j, r, wc, virtual=wc == hi + 1)
                u = Cell(j, r, wc - 1, virtual=wc - 1 == lo)
                for v in by_content.get(w.content, ()):
                    if v.shape < j:
                        out.append(Triple(u, v, w))
    out.sort(key=lambda tr: (tr.v[:3], tr.w[:3]))
    return out


def count_triples(tup: ShapeTuple) -> int:
    return len(triples(tup))


def swap_adjacent(tup: ShapeTuple, i: int) -> ShapeTuple:
    """Exchange shapes i and i+1 (1-based)."""
    if not 1 <= i < tup.k:
        raise IndexError(f"cannot swap positions {i} and {i + 1} of a {tup.k}-tuple")
    shapes = list(tup.shapes)
    shapes[i - 1], shapes[i] = shapes[i], shapes[i - 1]
    return ShapeTuple(tuple(shapes))


def skew_shapes(max_parts: int, max_part: int) -> list[SkewShape]:
    """Every skew shape with 1..max_parts parts, each part at most max_part."""
    out = []
    for length in range(1, max_parts + 1):
        for outer in _partitions_in_box(length, max_part):
            for inner in _partitions_in_box(length, max_part):
                if all(g <= b for b, g in zip(outer, inner)):
                    out.append(SkewShape(outer, inner))
    return out


def _partitions_in_box(length: int, max_part: int) -> Iterable[Partition]:
    if length == 0:
        yield ()
        return
    for first in range(max_part, -1, -1):
        for rest in _partitions_in_box(length - 1, first):
            yield (first,) + rest


def desk_corpus(max_k: int = 2, max_parts: int = 2, max_part: int = 3) -> list[ShapeTuple]:
    """All tuples of up to `max_k` skew shapes from `skew_shapes(max_parts, max_part)`."""
    base = skew_shapes(max_parts, max_part)
    out = [ShapeTuple((s,)) for s in base]
    level = [(s,) for s in base]
    for _ in range(max_k - 1):
        level = [prev + (s,) for prev in level for s in base]
        out.extend(ShapeTuple(t) for t in level)
    return out
