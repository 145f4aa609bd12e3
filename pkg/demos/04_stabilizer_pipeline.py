"""The headline computation: stabilizers of invariant forms equal ad(g).

For every adjoint-invariant l-form w with l < dim(g) on a split simple Lie
algebra, the subalgebra of gl(g) annihilating w is exactly the image of ad.
The pipeline certifies this by exact kernel computation: each stabilizer is
compared with ad(g) as canonical echelon subspaces, and the structural side
conditions are recorded (semisimple, zero center, zero commutant with ad,
traceless).
"""

import json

from liestab import ad_subalgebra, build, cartan_three_form, stabilizer_algebra, verify_stabilizer
from liestab.serialize import report_to_json

sl3 = build("A", 2)

stab = stabilizer_algebra(sl3, cartan_three_form(sl3))
print(f"stabilizer of the sl(3) Cartan 3-form: dim {stab.dim}")
print(f"equals the image of ad: {stab == ad_subalgebra(sl3)}")

print("\nfull verification report for sl(3), degree 3:")
report = verify_stabilizer(sl3, 3, seed=0)
print(json.dumps(report_to_json(report), indent=2, sort_keys=True))

print("\ndegree 4 has no invariant forms, so the claim holds vacuously:")
vac = verify_stabilizer(sl3, 4)
print(f"  dim_invariant_forms = {vac.dim_invariant_forms}, "
      f"vacuous = {vac.vacuous}, overall_pass = {vac.overall_pass}")
