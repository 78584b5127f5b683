"""
Equivalence of unit forms
=========================

Changing variables by a unimodular matrix gives an equivalent form.  Corank
and Dynkin type are enough to tell equivalence classes apart.
"""

from pathlib import Path

from quadlie import are_equivalent, from_json, invariants
from quadlie.equiv import random_equivalent_form

FORMS = Path(__file__).resolve().parent / "forms"
q = from_json(FORMS / "d4.json")

for seed in range(3):
    T, qT = random_equivalent_form(q, magnitude=2, seed=seed)
    print(T, qT, are_equivalent(q, qT))

print(invariants(q).to_json())
print(are_equivalent(from_json(FORMS / "a2.json"), from_json(FORMS / "a1tilde.json")))
