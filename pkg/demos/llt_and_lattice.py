"""
From tableaux to lattice paths.

Computes the LLT polynomial of ((2,2)/(1,0), (1)) by enumerating fillings,
turns one filling into its colored lattice configuration, and checks that
the vertex-model partition function gives the same polynomial.

    python demos/llt_and_lattice.py
"""

from lltswap import ShapeTuple, enumerate_ssyt, llt_poly, partition_function, triples
from lltswap.lattice import config_from_ssyt
from lltswap.render import config_svg
from lltswap.tableaux import coinv

tup = ShapeTuple.of(((2, 2), (1, 0)), (1,))
n = 2

print(f"tuple {tup!r}, alphabet x1..x{n}")
print(f"{len(triples(tup))} triples:")
for u, v, w in triples(tup):
    print(f"  u={tuple(u[:3])}{' (virtual)' if u.virtual else ''}  v={tuple(v[:3])}  "
          f"w={tuple(w[:3])}{' (virtual)' if w.virtual else ''}")

L = llt_poly(tup, n)
print(f"\nL = {L.to_text()}")

print("\nfillings, their coinversion counts and t-exponents on the lattice:")
for T in enumerate_ssyt(tup, n):
    config = config_from_ssyt(T, n)
    values = {tuple(c[:3]): v for c, v in T.entries.items()}
    print(f"  {values}  coinv={coinv(T)}  lattice t^{config.t_exponent}")

Z = partition_function(tup, n)
print(f"\nZ = {Z.to_text()}")
print(f"Z == L: {Z == L}")

with open("lattice.svg", "w") as fh:
    fh.write(config_svg(config_from_ssyt(next(iter(enumerate_ssyt(tup, n))), n)))
print("wrote lattice.svg")
