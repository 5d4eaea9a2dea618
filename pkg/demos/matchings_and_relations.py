"""
Grouping configurations by bead matching.

Lists the non-crossing matchings of ((5,4,4)/(2,2,0), (3,1,1)) and which of
them occur for small n, checks the three-term relation among
((3,3),(1)), ((2,2),(3)) and ((3,2),(2)), and prints the transfer matrix of
the ten-tuple family over the five Catalan classes.

    python demos/matchings_and_relations.py
"""

from lltswap import ShapeTuple, enumerate_configs
from lltswap.relations import TEN_FAMILY, small_relation_check, transfer_matrix
from lltswap.swap import bead_sequence, enumerate_noncrossing_matchings, induced_matching, matching_weight

tup = ShapeTuple.of(((5, 4, 4), (2, 2, 0)), (3, 1, 1))
beads = bead_sequence(tup)
found = enumerate_noncrossing_matchings(beads)
print(f"{beads}: {len(found)} non-crossing matchings")
for n in (3, 4):
    seen = {induced_matching(c) for c in enumerate_configs(tup, n)}
    for k, m in enumerate(found, start=1):
        print(f"  n={n} matching {k} {m} weight t^{matching_weight(m)}: "
              f"{'realized' if m in seen else 'not realized'}")

print(f"\nL((3,2),(2)) == t^-1 L((3,3),(1)) + t L((2,2),(3)) for n=2, 3: "
      f"{small_relation_check(2) and small_relation_check(3)}")

n = 3
m = transfer_matrix(list(TEN_FAMILY), n)
print(f"\ntransfer matrix for n={n} (rows: family members, columns: canonical matchings)")
for t, row in zip(m.tuples, m.rows_text()):
    print(f"  {t!r:<34} " + " ".join(f"{e:>5}" for e in row))
