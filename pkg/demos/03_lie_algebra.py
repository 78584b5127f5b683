"""
Brackets and the invariant form in E(q)
=======================================

Elements of E(q) are sparse sums of homogeneous pieces keyed by degree.
"""

from pathlib import Path

from quadlie import ExtendedAffineLieAlgebra, from_json
from quadlie.eala import check_form, check_jacobi

FORMS = Path(__file__).resolve().parent / "forms"

A2 = ExtendedAffineLieAlgebra(from_json(FORMS / "a2.json"))
e1, e2 = A2.e((1, 0)), A2.e((0, 1))
print("[e1, e2] =", A2.bracket(e1, e2))
print("[e1, e-1] =", A2.bracket(e1, A2.e((-1, 0))))
print("(e1, e-1) =", A2.form(e1, A2.e((-1, 0))))

# with a radical, isotropic degrees carry a copy of Q^n / rad q and the
# degree-zero part gains the dual of the radical
L = ExtendedAffineLieAlgebra(from_json(FORMS / "a1tilde.json"))
x = L.pi((1, 1), (1, 0))
y = L.pi((-1, -1), (0, 1))
print("[x, y] =", L.bracket(x, y))
print("[xi1, e(0,1)] =", L.bracket(L.xi(1), L.e((0, 1))))
print(L.bracket(x, y).to_json())

# exact checks of the Lie algebra axioms and of the form
print(check_jacobi(L, height=2, samples=500).summary())
print(check_form(L, height=2).summary())
