"""The choices the Lie bracket depends on.

A gauge fixes a bilinear form ``B`` with ``B(x, x) = q(x)`` (hence the sign
``eps(a, b) = (-1)^B(a, b)``) and a projection ``rho`` of ``Q^n`` onto the
rational span of the radical.  The canonical gauge takes ``B`` upper
triangular and ``rho`` the projection along the complement chosen in
:func:`~quadlie.unitform.radical_data`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, InvalidInput
from .report import VerificationReport
from .roots import RootKind, enumerate_roots, kind_of
from .unitform import RadicalData, radical_data, require_connected_nonnegative


@dataclass(frozen=True)
class Gauge:
    B: tuple
    radical: RadicalData

    @property
    def n(self):
        return len(self.B)

    @property
    def corank(self):
        return self.radical.corank

    @cached_property
    def rho(self):
        """``rho`` as an n x n integer matrix (columns are images of c_i)."""
        R = self.radical.basis
        P = self.radical.inverse[: self.corank]
        n = self.n
        return tuple(
            tuple(sum(R[k][i] * P[k][j] for k in range(self.corank)) for j in range(n))
            for i in range(n)
        )

    def to_json(self):
        return {
            "B": [list(r) for r in self.B],
            "radical_basis": [list(b) for b in self.radical.basis],
            "complement": [list(c) for c in self.radical.complement],
        }


@lru_cache(maxsize=256)
def canonical_gauge(q):
    require_connected_nonnegative(q)
    n = q.n
    B = tuple(
        tuple(1 if i == j else (q.C[i][j] if i < j else 0) for j in range(n)) for i in range(n)
    )
    return Gauge(B, radical_data(q))


def make_gauge(q, B):
    """A gauge with a user-supplied ``B``; requires ``B + B^T = C``."""
    n = q.n
    if len(B) != n or any(len(r) != n for r in B):
        raise DimensionMismatch("B must be n x n")
    for i in range(n):
        for j in range(n):
            if B[i][j] + B[j][i] != q.C[i][j]:
                raise InvalidInput("B + B^T must equal the symmetric matrix of q")
    return Gauge(tuple(tuple(int(x) for x in r) for r in B), radical_data(q))


def b_value(g, a, b):
    if len(a) != g.n or len(b) != g.n:
        raise DimensionMismatch(f"expected vectors of length {g.n}")
    return sum(ai * Bij * bj for ai, row in zip(a, g.B) for Bij, bj in zip(row, b))


def epsilon(g, a, b):
    """``(-1)^{a^T B b}``, computed from the parity alone."""
    return -1 if b_value(g, a, b) % 2 else 1


def rho(g, x):
    if len(x) != g.n:
        raise DimensionMismatch(f"expected a vector of length {g.n}")
    return tuple(sum(Fraction(r) * t for r, t in zip(row, x)) for row in g.rho)


def xi_eval(g, k, x):
    """``xi_k(rho(x))``: coordinate ``k`` (1-based) of ``rho(x)`` over the radical basis."""
    if not 1 <= k <= g.corank:
        raise IndexOutOfRange(f"xi index {k} not in 1..{g.corank}")
    if len(x) != g.n:
        raise DimensionMismatch(f"expected a vector of length {g.n}")
    return sum(Fraction(p) * t for p, t in zip(g.radical.inverse[k - 1], x))


def check_sign_lemma(q, g, height=3, samples=1000, seed=0):
    """Sample the sign identities (i)-(v) on roots of max-norm at most ``height``."""
    rng = np.random.default_rng(seed)
    roots = enumerate_roots(q, height)
    N = [r.vec for r in roots if r.kind is RootKind.NONISOTROPIC]
    S = [r.vec for r in roots if r.kind is not RootKind.NONISOTROPIC]

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    sums = [(a, b, kind_of(q, add(a, b))) for a in N for b in N]
    real_sums = [(a, b) for a, b, k in sums if k is RootKind.NONISOTROPIC]
    iso_sums = [(a, b) for a, b, k in sums if k in (RootKind.ZERO, RootKind.ISOTROPIC)]

    def pick(pool):
        return pool[int(rng.integers(len(pool)))]

    eps = lambda a, b: epsilon(g, a, b)
    props = {
        "i": (lambda: (pick(N), pick(S)),
              lambda a, s: eps(a, a) == -1 and eps(s, s) == 1),
        "ii": (lambda: (pick(S), pick(N), pick(S)),
               lambda s, b, t: eps(s, b) == eps(b, s) and eps(s, t) == eps(t, s)),
        "iii": (lambda: (pick(N), pick(N), pick(S), pick(S)),
                lambda a, b, s, t: eps(add(a, s), add(b, t))
                == eps(a, b) * eps(a, t) * eps(s, b) * eps(s, t)),
        "iv": (lambda: pick(real_sums), lambda a, b: eps(a, b) == -eps(b, a)),
        "v": (lambda: pick(iso_sums), lambda a, b: eps(a, b) == eps(b, a)),
    }
    domains = {"i": N, "ii": N, "iii": N, "iv": real_sums, "v": iso_sums}
    report = VerificationReport(
        "signs", q, params={"height": height, "samples": samples, "seed": seed}, gauge=g
    )
    for name, (draw, holds) in props.items():
        if not domains[name] or not S:
            report.add(f"lemma-{name}", True, {"samples": 0, "note": "empty domain"})
            continue
        bad = []
        for _ in range(samples):
            args = draw()
            if not holds(*args):
                bad.append([list(a) for a in args])
        report.add(f"lemma-{name}", not bad, {"samples": samples, "failures": bad[:5]})
    return report
