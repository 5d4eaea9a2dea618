"""
Swapping the two shapes of ((8,7,6), (4,3,2)/(2,0,0)).

Builds a seven-row configuration, follows every walk, flips it into a
configuration of the swapped tuple, and reads the t-power off the bead
matching. Then confirms L = t^5 L_swap on the tableau side for n = 3.

    python demos/swap_running_example.py
"""

from lltswap import ShapeTuple, llt_poly, scale_t, swap_adjacent
from lltswap.lattice import config_from_ssyt
from lltswap.render import config_svg
from lltswap.shapes import Cell
from lltswap.swap import (
    arc_weight, bead_sequence, direct_weight_change, induced_matching, phi, walk_statistics, walks,
)
from lltswap.tableaux import TupleSSYT

tup = ShapeTuple.of((8, 7, 6), ((4, 3, 2), (2, 0, 0)))
rows = {
    1: {1: [1] * 8, 2: [2, 2, 2, 2, 5, 5, 5], 3: [3, 3, 5, 5, 6, 6]},
    2: {1: [5, 7], 2: [4, 4, 6], 3: [5, 5]},
}
entries = {}
for j, shape in enumerate(tup.shapes, start=1):
    for r in range(1, shape.num_parts + 1):
        for c, v in zip(shape.row_cells(r), rows[j][r]):
            entries[Cell(j, r, c)] = v
config = config_from_ssyt(TupleSSYT(tup, entries), 7)

print(f"beads: {bead_sequence(tup)}")
for w in walks(config):
    stats = walk_statistics(w)
    print(f"walk {w.start} ({w.start.boundary}) -> {w.end} ({w.end.boundary}): "
          f"{len(w.segments)} segments, switches {''.join(w.switches) or '-'}, "
          f"identities hold: {all(stats.values())}")

matching = induced_matching(config)
print(f"\nmatching {matching}")
for a, b in matching.sorted_arcs():
    print(f"  arc {a}-{b}: t^{arc_weight((a, b))}")

image = phi(config)
print(f"\nflipping all walks: t^{config.t_exponent} -> t^{image.t_exponent}, "
      f"change {direct_weight_change(config)}")
print(f"applying the swap again restores the original: {phi(image) == config}")

swapped = swap_adjacent(tup, 1)
n = 3
lhs, rhs = llt_poly(tup, n), llt_poly(swapped, n)
print(f"\nswapped tuple {swapped!r}")
print(f"L == t^5 L_swap for n={n}: {lhs == scale_t(rhs, 5)}")

with open("walks.svg", "w") as fh:
    fh.write(config_svg(config, walks(config)))
print("wrote walks.svg")
