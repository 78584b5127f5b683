"""
Generators and Serre-type relations
===================================

E(q) is generated by the images of f_{+i}, f_{-i} and h_i.  Words in these
generators can be written as strings and evaluated directly.
"""

from pathlib import Path

from quadlie import ExtendedAffineLieAlgebra, eval_word, from_json
from quadlie.serre import check_generation, check_serre

FORMS = Path(__file__).resolve().parent / "forms"
alg = ExtendedAffineLieAlgebra(from_json(FORMS / "a2.json"))

for word in ["[f1,f-1]", "[h1,f2]", "[f1,f2]", "[f1,[f1,f2]]"]:
    print(f"{word:14s} ->", eval_word(alg, word))

rep = check_serre(alg, max_len=5)
print(rep.summary())
print(check_generation(alg, height=2).summary())
