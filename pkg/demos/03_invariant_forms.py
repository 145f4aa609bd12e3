"""Adjoint-invariant forms degree by degree.

For each algebra the profile lists dim{w in Lambda^l g* : ad(x).w = 0} for
l = 0..dim.  Profiles are palindromic (duality), and the generators multiply:
for sl(3) the wedge of the degree-3 and degree-5 generators spans the
top-degree line.  The degree-3 generator is always the Cartan 3-form
w(x, y, z) = B([x, y], z).
"""

from liestab import (
    build,
    cartan_three_form,
    gl_action,
    invariant_forms,
    invariant_profile,
    wedge,
)

for series, rk in [("A", 1), ("A", 2), ("B", 2)]:
    g = build(series, rk)
    profile = invariant_profile(g)
    print(f"{g.name} (dim {g.dim}): profile {profile}")
    print(f"  palindromic: {profile == profile[::-1]}")

sl3 = build("A", 2)
w3 = invariant_forms(sl3, 3)[0]
w5 = invariant_forms(sl3, 5)[0]
w8 = invariant_forms(sl3, 8)[0]
product = wedge(w3, w5)
lead = sorted(product.terms)[0]
print(f"\nsl(3): (degree-3 gen) ^ (degree-5 gen) = {product.terms[lead]} * (degree-8 gen):",
      product == w8.scale(product.terms[lead] / w8.terms[lead]))

cartan = cartan_three_form(sl3)
print(f"\nCartan 3-form of sl(3): {len(cartan.terms)} terms")
print("annihilated by every ad(e_i):",
      all(gl_action(sl3.ad_basis(i), cartan).is_zero() for i in range(sl3.dim)))
print("proportional to the degree-3 invariant generator:",
      cartan == w3.scale(cartan.terms[sorted(cartan.terms)[0]]))
