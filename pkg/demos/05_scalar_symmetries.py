"""Scalar symmetries: the centralizer of ad(g) and roots of unity.

Only scalar matrices commute with every ad(x) on a simple algebra (Schur's
lemma, certified here by exact kernel computation).  Consequently the
invertible endomorphisms commuting with ad(g) whose l-th power is the
identity form a cyclic group of order l: the scalar l-th roots of unity.
A scalar c*I moves an l-form to -c*l times itself, which is what ties the
exponent l to the degree of the stabilized form.
"""

from liestab import Matrix, Subspace, build, centralizer_of_ad, commutant_in, scalar_group

for series, rk in [("A", 1), ("B", 2), ("G", 2)]:
    g = build(series, rk)
    cen = centralizer_of_ad(g)
    is_scalar_line = cen.dim == 1 and cen.basis[0] == Matrix.identity(g.dim).flatten()
    print(f"{g.name}: centralizer of ad has dim {cen.dim}; scalar line: {is_scalar_line}")

sl2 = build("A", 1)
print("\ncommuting l-th roots of unity on sl(2):")
for degree in (1, 2, 3, 5):
    rec = scalar_group(sl2, degree)
    print(f"  l = {degree}: cyclic of order {rec.order}, generator {rec.generator_description}")

print("\ninside a stabilizer the commutant of ad(g) collapses to zero:")
from liestab import cartan_three_form, stabilizer_algebra

sl3 = build("A", 2)
stab = stabilizer_algebra(sl3, cartan_three_form(sl3))
print(f"  commutant of ad in full gl:       dim {commutant_in(sl3, Subspace.full(64)).dim}")
print(f"  commutant of ad in the stabilizer: dim {commutant_in(sl3, stab).dim}")
