"""
The two-color swap: walks, the operator phi, bead sequences and matchings.

Color 1 (blue) is the first shape and color 2 (red) the second. A walk runs
backward along red paths and forward along blue ones, changing color at the
four face patterns below, and flipping the colors of everything it traverses
turns a configuration for (A, B) into one for (B, A).

    A  red entering from above, blue leaving right   -> blue, out right
    B  red entering from the right, blue leaving up  -> blue, out the top
    C  blue entering from the left, red entering below -> red, out the bottom
    D  blue entering from below, red entering left    -> red, out the left
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InvariantError, PreconditionError
from .lattice import Boundary, LatticeConfig
from .poly import scale_t
from .shapes import ShapeTuple, swap_adjacent
from .tableaux import llt_poly

BLUE, RED = 1, 2
TOP, BOTTOM = "top", "bottom"
SWITCHES = ("A", "B", "C", "D")
_FORBIDDEN = {("A", "D", "A"), ("D", "A", "D"), ("C", "B", "C"), ("B", "C", "B")}


class BoundaryBead(NamedTuple):
    boundary: str
    column: int
    color: int
    label: int

    def __str__(self) -> str:
        return f"{'B' if self.color == BLUE else 'R'}{self.label}"

    def to_json(self) -> dict:
        return {"boundary": self.boundary, "column": self.column,
                "color": "blue" if self.color == BLUE else "red", "label": self.label}


@dataclass(frozen=True)
class BeadSequence:
    top: tuple[BoundaryBead, ...]
    bottom: tuple[BoundaryBead, ...]

    @classmethod
    def from_masks(cls, r: int, top: Sequence[int], bottom: Sequence[int]) -> BeadSequence:
        return cls(_beads(TOP, r, top), _beads(BOTTOM, r, bottom))

    @classmethod
    def from_colors(cls, top: str, bottom: str = "") -> BeadSequence:
        """
        Abstract beads from color strings such as "RRB"; labels count beads to the right.

        >>> BeadSequence.from_colors("RB", "B").top
        (BoundaryBead(boundary='top', column=0, color=2, label=1), BoundaryBead(boundary='top', column=1, color=1, label=0))
        """
        def row(which, s):
            colors = [{"B": BLUE, "R": RED}[ch] for ch in s.upper()]
            return tuple(BoundaryBead(which, i, c, len(colors) - 1 - i) for i, c in enumerate(colors))
        return cls(row(TOP, top), row(BOTTOM, bottom))

    def __len__(self) -> int:
        return len(self.top) + len(self.bottom)

    @property
    def cyclic(self) -> tuple[BoundaryBead, ...]:
        """Top row left to right, then bottom row right to left."""
        return self.top + self.bottom[::-1]

    def colors(self) -> tuple[str, str]:
        def s(row):
            return "".join("B" if b.color == BLUE else "R" for b in row)
        return s(self.top), s(self.bottom)

    def __str__(self) -> str:
        return f"top [{' '.join(map(str, self.top))}] bottom [{' '.join(map(str, self.bottom))}]"

    def to_json(self) -> dict:
        return {"top": [b.to_json() for b in self.top], "bottom": [b.to_json() for b in self.bottom]}


def _beads(which: str, r: int, masks: Sequence[int]) -> tuple[BoundaryBead, ...]:
    out = []
    for c, m in enumerate(masks):
        if m in (BLUE, RED):
            label = sum(bin(x).count("1") for x in masks[c + 1:])
            out.append(BoundaryBead(which, r + c, m, label))
    return tuple(out)


def _arc_key(b: BoundaryBead):
    return (b.boundary != TOP, b.column if b.boundary == TOP else -b.column)


@dataclass(frozen=True)
class Matching:
    arcs: frozenset[tuple[BoundaryBead, BoundaryBead]]

    @classmethod
    def of(cls, pairs: Iterable[tuple[BoundaryBead, BoundaryBead]]) -> Matching:
        return cls(frozenset(tuple(sorted(p, key=_arc_key)) for p in pairs))

    def sorted_arcs(self) -> list[tuple[BoundaryBead, BoundaryBead]]:
        return sorted(self.arcs, key=lambda a: (_arc_key(a[0]), _arc_key(a[1])))

    def positions(self, beads: BeadSequence) -> frozenset[tuple[int, int]]:
        """Arcs as pairs of indices into `beads.cyclic`, forgetting colors and labels."""
        index = {b: i for i, b in enumerate(beads.cyclic)}
        return frozenset(tuple(sorted((index[a], index[b]))) for a, b in self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}{a.boundary[0]}-{b}{b.boundary[0]}" for a, b in self.sorted_arcs()) + "}"

    def to_json(self) -> dict:
        return {"arcs": [[a.to_json(), b.to_json()] for a, b in self.sorted_arcs()]}


# walks


class Walk(NamedTuple):
    start: BoundaryBead
    end: BoundaryBead
    steps: tuple[tuple[tuple[str, int, int], int], ...]  # ((kind, row, col), color)
    switches: tuple[str, ...]

    @property
    def segments(self) -> list[tuple[int, tuple[tuple[str, int, int], ...]]]:
        """Maximal same-color runs as (color, edges)."""
        out: list[tuple[int, list]] = []
        for edge, color in self.steps:
            if out and out[-1][0] == color:
                out[-1][1].append(edge)
            else:
                out.append((color, [edge]))
        return [(c, tuple(es)) for c, es in out]

    @property
    def step_counts(self) -> dict[str, int]:
        counts = Counter(self.switches)
        return {s: counts.get(s, 0) for s in SWITCHES}

    @property
    def same_boundary(self) -> bool:
        return self.start.boundary == self.end.boundary

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "end": self.end.to_json(),
            "switches": list(self.switches),
            "segments": [
                {"color": "blue" if c == BLUE else "red", "edges": [list(e) for e in es]}
                for c, es in self.segments
            ],
        }


def _require_two(k: int) -> None:
    if k != 2:
        raise PreconditionError(f"the swap needs exactly two shapes, got {k}")


def singletons(config: LatticeConfig) -> list[BoundaryBead]:
    _require_two(config.k)
    seq = BeadSequence.from_masks(config.r, config.top, config.bottom)
    return list(seq.top) + list(seq.bottom)


def walk_from(config: LatticeConfig, start: BoundaryBead) -> Walk:
    """Follow the walk that starts at a top red or bottom blue singleton."""
    _require_two(config.k)
    n, r = config.n, config.r
    c = start.column - r
    if start.boundary == TOP and start.color == RED and 0 <= c < config.ncols and config.top[c] == RED:
        color, i, entered = RED, n - 1, "K"
        steps = [(("up", n, c), RED)]
    elif start.boundary == BOTTOM and start.color == BLUE and 0 <= c < config.ncols \
            and config.bottom[c] == BLUE:
        color, i, entered = BLUE, 0, "I"
        steps = [(("up", 0, c), BLUE)]
    else:
        raise PreconditionError(f"{start} on the {start.boundary} is not a valid walk start")

    beads = {(b.boundary, b.column): b for b in singletons(config)}
    switches: list[str] = []
    seen = set(steps)
    while True:
        I, J, K, L = config.face_masks(i, c)
        if color == RED:
            if entered == "K" and L & BLUE:
                switches.append("A")
                color, out = BLUE, "L"
            elif entered == "L" and K & BLUE:
                switches.append("B")
                color, out = BLUE, "K"
            else:
                out = "I" if I & RED else "J"
        else:
            if entered == "J" and I & RED:
                switches.append("C")
                color, out = RED, "I"
            elif entered == "I" and J & RED:
                switches.append("D")
                color, out = RED, "J"
            else:
                out = "K" if K & BLUE else "L"

        if out == "K":
            edge = ("up", i + 1, c)
        elif out == "L":
            edge = ("right", i, c + 1)
        elif out == "I":
            edge = ("up", i, c)
        else:
            edge = ("right", i, c)
        step = (edge, color)
        if step in seen:
            raise InvariantError(f"walk from {start} revisits {step}")
        seen.add(step)
        steps.append(step)

        if out == "K":
            if i + 1 == n:
                end = beads.get((TOP, r + c))
                break
            i, entered = i + 1, "I"
        elif out == "L":
            c, entered = c + 1, "J"
        elif out == "I":
            if i == 0:
                end = beads.get((BOTTOM, r + c))
                break
            i, entered = i - 1, "K"
        else:
            c, entered = c - 1, "L"

    if end is None or end.color != color:
        raise InvariantError(f"walk from {start} ends on a column that is not a {color} singleton")
    return Walk(start, end, tuple(steps), tuple(switches))


def walks(config: LatticeConfig) -> list[Walk]:
    """All walks: top red singletons left to right, then bottom blue singletons."""
    beads = singletons(config)
    starts = [b for b in beads if b.boundary == TOP and b.color == RED]
    starts += [b for b in beads if b.boundary == BOTTOM and b.color == BLUE]
    return [walk_from(config, b) for b in starts]


def _flip(mask: int) -> int:
    return ((mask & BLUE) << 1) | ((mask & RED) >> 1)


def phi(config: LatticeConfig) -> LatticeConfig:
    """Flip the colors along every walk; the result lives on the swapped boundary."""
    up = [list(row) for row in config.up]
    right = [list(row) for row in config.right]
    touched = set()
    for walk in walks(config):
        for (kind, a, b), _ in walk.steps:
            if (kind, a, b) in touched:
                raise InvariantError(f"two walks share the edge {(kind, a, b)}")
            touched.add((kind, a, b))
            grid = up if kind == "up" else right
            grid[a][b] = _flip(grid[a][b])
    return LatticeConfig(config.k, config.r, tuple(map(tuple, up)), tuple(map(tuple, right)))


def induced_matching(config: LatticeConfig) -> Matching:
    return Matching.of((w.start, w.end) for w in walks(config))


# arcs and weights


def arc_weight(arc: tuple[BoundaryBead, BoundaryBead]) -> int:
    """t-exponent picked up when the walk along this arc is flipped."""
    a, b = arc
    if a.boundary != b.boundary:
        top, bot = (a, b) if a.boundary == TOP else (b, a)
        if top.color != bot.color:
            raise PreconditionError(f"cross-row arc {top}-{bot} joins different colors")
        num = bot.label - top.label if top.color == BLUE else top.label - bot.label
    else:
        if a.color == b.color:
            raise PreconditionError(f"same-row arc {a}-{b} joins equal colors")
        left, rt = (a, b) if a.column < b.column else (b, a)
        if a.boundary == TOP:
            if left.color == RED:
                num = left.label - rt.label + 1
            else:
                num = rt.label - left.label - 1
        else:
            if left.color == RED:
                num = rt.label - left.label + 1
            else:
                num = left.label - rt.label - 1
    if num % 2:
        raise PreconditionError(f"arc {a}-{b} has a half-integer weight")
    return num // 2


def matching_weight(matching: Matching) -> int:
    return sum(arc_weight(a) for a in matching.arcs)


def weight_change(config: LatticeConfig) -> int:
    """
    Exponent e with weight(config) == t^e * weight(phi(config)), read off the matching.

    `direct_weight_change` recomputes the same number from the two configurations.
    """
    return matching_weight(induced_matching(config))


def direct_weight_change(config: LatticeConfig) -> int:
    return config.t_exponent - phi(config).t_exponent


# beads and matchings from boundary data alone


def bead_sequence(tup: ShapeTuple) -> BeadSequence:
    _require_two(tup.k)
    bd = Boundary.of(tup)
    return BeadSequence.from_masks(bd.r, bd.top, bd.bottom)


def _compatible(a: BoundaryBead, b: BoundaryBead) -> bool:
    return (a.color != b.color) if a.boundary == b.boundary else (a.color == b.color)


def enumerate_noncrossing_matchings(beads: BeadSequence) -> list[Matching]:
    """All perfect matchings whose arcs are pairwise non-crossing chords of the cyclic order."""
    points = beads.cyclic

    def solve(lo: int, hi: int) -> list[list[tuple]]:
        if lo >= hi:
            return [[]]
        out = []
        for m in range(lo + 1, hi, 2):
            if not _compatible(points[lo], points[m]):
                continue
            inner = solve(lo + 1, m)
            if not inner:
                continue
            outer = solve(m + 1, hi)
            for x in inner:
                for y in outer:
                    out.append([(points[lo], points[m])] + x + y)
        return out

    if len(points) % 2:
        return []
    return [Matching.of(arcs) for arcs in solve(0, len(points))]


def has_unique_matching(beads: BeadSequence) -> bool:
    return len(enumerate_noncrossing_matchings(beads)) == 1


def lemma_a1_criterion(beads: BeadSequence) -> bool:
    """A matching exists iff red minus blue agrees between the two rows."""
    def diff(row):
        return sum(1 if b.color == RED else -1 for b in row)
    return diff(beads.top) == diff(beads.bottom)


def _one_row_unique(s: str) -> bool:
    # B^p R^q B^r with p + r = q, or the color swap
    for outer, inner in (("B", "R"), ("R", "B")):
        p = len(s) - len(s.lstrip(outer))
        rest = s[p:]
        q = len(rest) - len(rest.lstrip(inner))
        tail = rest[q:]
        if tail == outer * len(tail) and p + len(tail) == q:
            return True
    return False


def _matches(s: str, pattern: str) -> bool:
    """Whether s is pattern[0]^* pattern[1]^* ... with every run length allowed to be zero."""
    i = 0
    for ch in pattern:
        while i < len(s) and s[i] == ch:
            i += 1
    return i == len(s)


def _two_row_unique(top: str, bottom: str) -> bool:
    swap = str.maketrans("RB", "BR")
    for t, b in ((top, bottom), (bottom, top)):
        for tt, bb in ((t, b), (t.translate(swap), b.translate(swap))):
            if _matches(tt, "RB") and _matches(bb, "BR"):
                return True
            if _matches(tt, "RBR") and _matches(bb, "B"):
                return True
    return False


def classify_unique(beads: BeadSequence) -> bool:
    """Closed-form test for a unique non-crossing matching (at most two rows)."""
    if not lemma_a1_criterion(beads):
        return False
    top, bottom = beads.colors()
    if not top or not bottom:
        return _one_row_unique(top or bottom)
    return _two_row_unique(top, bottom)


# checks


def theorem_swap_check(tup: ShapeTuple, n: int) -> int | None:
    """
    For a unique matching, return its total arc weight e after confirming
    L(tup) == t^e * L(swapped tup) on the tableau side; otherwise None.
    """
    beads = bead_sequence(tup)
    found = enumerate_noncrossing_matchings(beads)
    if len(found) != 1:
        return None
    e = matching_weight(found[0])
    lhs = llt_poly(tup, n)
    rhs = scale_t(llt_poly(swap_adjacent(tup, 1), n), e)
    if lhs != rhs:
        raise InvariantError(f"{tup}: L != t^{e} L_swap at n={n}")
    return e


def walk_statistics(walk: Walk) -> dict[str, bool]:
    """Each signed switch-count identity and the forbidden-pattern rule, evaluated for one walk."""
    s = walk.step_counts
    A, B, C, D = s["A"], s["B"], s["C"], s["D"]
    j, i = walk.start.label, walk.end.label
    same = walk.same_boundary
    if not same:
        corner = 0
    elif walk.start.boundary == TOP:
        corner = 1 if walk.end.column > walk.start.column else -1
    else:
        corner = 1 if walk.end.column < walk.start.column else -1
    seq = walk.switches
    return {
        # backward-to-forward minus forward-to-backward switches; a walk from the
        # bottom starts forward, so returning to the bottom nets -1
        "boundary": A + B - C - D == (0 if not same else 1 if walk.start.boundary == TOP else -1),
        "labels": A - B + C - D == j - i,
        "forbidden": not any(tuple(seq[k:k + 3]) in _FORBIDDEN for k in range(len(seq) - 2)),
        "corner": A - B - C + D == corner,
    }


def walk_statistics_check(walk: Walk) -> bool:
    return all(walk_statistics(walk).values())
