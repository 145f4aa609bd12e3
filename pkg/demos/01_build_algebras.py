"""Build split simple Lie algebras and inspect their structure.

Each algebra comes with exact rational structure constants in a fixed basis:
Cartan generators first, then root vectors.  Construction is validated here
by checking the Jacobi identity on every basis triple and nondegeneracy of
the Killing form (Cartan's semisimplicity criterion).
"""

from liestab import build, killing_form, rank

for series, rk in [("A", 1), ("A", 2), ("B", 2), ("C", 3), ("D", 4), ("G", 2)]:
    g = build(series, rk)
    g.validate()  # Jacobi identity on all basis triples
    b = killing_form(g)
    print(f"{g.name}: dim {g.dim}, Killing rank {rank(b)}")
    print(f"  basis: {', '.join(g.labels[:8])}{', ...' if g.dim > 8 else ''}")

print()
print("sl(2) in detail (basis H, X, Y):")
sl2 = build("A", 1)
names = sl2.labels
for (i, j), expansion in sorted(sl2.brackets.items()):
    terms = " + ".join(f"{c}*{names[k]}" for k, c in sorted(expansion.items()))
    print(f"  [{names[i]}, {names[j]}] = {terms}")

print()
print("Killing form of sl(2):")
b = killing_form(sl2)
for i, row in enumerate(b.rows):
    print(f"  B({names[i]}, -) = {[str(x) for x in row]}")
