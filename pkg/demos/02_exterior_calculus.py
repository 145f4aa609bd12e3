"""Sparse alternating forms: wedge products and the gl action.

The dual action (A . xi)(x) = -xi(A x) extends to l-forms as a derivation.
Two consequences shown below: a scalar matrix c*I acts as -c*l, and for any
nonzero form of degree l < n some traceless single-entry matrix moves it
(so the traceless matrices never stabilize a form below top degree).
"""

from fractions import Fraction

from liestab import AlternatingForm, Matrix, gl_action, traceless_witness, wedge

n = 4
e = lambda *idx: AlternatingForm.monomial(n, idx)

print("wedge products in dimension 4:")
print(f"  e0 ^ e1          = {wedge(e(0), e(1))}")
print(f"  e1 ^ e0          = {wedge(e(1), e(0))}")
print(f"  e0 ^ e0          = {wedge(e(0), e(0))}")
print(f"  (e0^e1) ^ (e2^e3) = {wedge(e(0, 1), e(2, 3))}")

w = e(0, 1) + e(1, 2).scale(Fraction(3, 2))
print(f"\na 2-form: w = {w}")

c = Fraction(5, 7)
scaled = gl_action(Matrix.identity(n).scale(c), w)
print(f"action of (5/7)*I: {scaled}")
print(f"equals -c*l*w:     {scaled == w.scale(-c * 2)}")

a = traceless_witness(w)
print(f"\ntraceless witness for w:\n  rows = {[list(map(str, r)) for r in a.rows]}")
print(f"  action on w: {gl_action(a, w)}")

vol = e(0, 1, 2, 3)
print(f"\nvolume form {vol}: witness = {traceless_witness(vol)}")
print("(top-degree forms are fixed by every traceless matrix)")
