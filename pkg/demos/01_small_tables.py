# Small worked decompositions, checked edge by edge.
#
# C_3 x K_4 has 36 edges and splits into nine 4-cycles; C_3 x K_7 has 126
# edges and splits into twenty-one 6-cycles.  Both tables ship as fixtures.
from pathlib import Path

from tensorcycles import c4_table_c3xk4, canonicalize, read_decomposition, verify
from tensorcycles.products import c6_c3xkn

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# %% The nine 4-cycles over C_3 x K_4, vertices written (layer, column)
table = c4_table_c3xk4()
for cycle in table.cycles:
    print(" -> ".join(f"{r}{c}" for r, c in cycle))
print(verify(table).summary())

# %% The shipped fixture holds the same cycle set, up to rotation and direction
fixture = canonicalize(read_decomposition(FIXTURES / "lemma31.json"))
print("fixture matches table:", set(fixture.cycles) == set(table.cycles))

# %% Hexagons over C_3 x K_7: fixture against the general construction
hexes = read_decomposition(FIXTURES / "c3xk7_hexagons.json")
built = c6_c3xkn(7)
print(verify(hexes).summary())
print("construction reproduces fixture:", set(built.cycles) == set(hexes.cycles))
