"""
Unit forms, radicals and Dynkin types
=====================================

Build a few unit forms, look at their radicals and read off the Dynkin type
of the positive definite quotient.
"""

from pathlib import Path

from quadlie import dynkin_type, from_coefficients, from_json, radical_data
from quadlie.unitform import is_nonnegative, quotient_roots

FORMS = Path(__file__).resolve().parent / "forms"

# the A2 form x1^2 + x2^2 - x1 x2; its matrix has 2 on the diagonal
a2 = from_coefficients(2, [(1, 2, -1)])
print(a2, a2.C)
print("q(1, 1) =", a2((1, 1)))

# (x1 - x2)^2 vanishes on the line x1 = x2, which is its radical
a1t = from_json(FORMS / "a1tilde.json")
rd = radical_data(a1t)
print("radical basis", rd.basis, "complement", rd.complement, "quotient", rd.quotient_gram)

# the Dynkin type is read off from the number of roots of the quotient
for name in ("a2", "a1tilde", "a1_corank2", "d4", "e6"):
    q = from_json(FORMS / f"{name}.json")
    print(f"{name:12s} corank {radical_data(q).corank}  type {dynkin_type(q)}"
          f"  quotient roots {len(quotient_roots(q))}")

# a coefficient of -3 already makes the form indefinite
print("non-negative?", is_nonnegative(from_coefficients(2, [(1, 2, -3)])))
