"""
Truncated root systems and root strings
=======================================

Roots are the integer vectors where q takes the value 0 or 1.  With a
radical there are infinitely many, so we always cut at a max-norm height.
"""

from pathlib import Path

from quadlie import check_ears, decompose, enumerate_roots, from_json, root_string
from quadlie.roots import RootKind

FORMS = Path(__file__).resolve().parent / "forms"
q = from_json(FORMS / "a1tilde.json")

roots = enumerate_roots(q, 2)
for kind in RootKind:
    print(kind.value, [r.vec for r in roots if r.kind is kind])

# strings through isotropic roots always have length 3
print(root_string(q, (1, 0), (1, 1)))
# and for two non-isotropic roots they are fixed by q(alpha, beta)
print(root_string(q, (1, 0), (0, 1)))

# every root is a root of the quotient plus a radical vector
print(decompose(q, (2, 1)))

# the axioms of an extended affine root system on the truncation
print(check_ears(q, 3).summary())
