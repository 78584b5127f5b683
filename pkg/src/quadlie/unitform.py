"""Integral unit forms and their invariants.

A unit form on ``Z^n`` is ``q(x) = sum x_i^2 + sum_{i<j} q_ij x_i x_j``.  Its
symmetric matrix ``C`` has ``2`` on the diagonal and ``q_ij`` off it, so that
``2 q(x) = x^T C x``.  Indices in the public API are 1-based, matching the
JSON input format ``{"n": 3, "coefficients": [[1, 2, -1], [2, 3, -1]]}``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path

import numpy as np
from scipy.sparse.csgraph import connected_components

from . import intlinalg
from .errors import (
    DimensionMismatch,
    DuplicatePair,
    IndexOutOfRange,
    InvalidInput,
    NotConnected,
    NotNonNegative,
    UnrecognizedRootCount,
    ZeroCoefficient,
)


@dataclass(frozen=True)
class UnitForm:
    n: int
    coeffs: tuple  # sorted ((i, j), q_ij) pairs, 1-based, i < j

    @cached_property
    def C(self):
        C = [[2 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for (i, j), v in self.coeffs:
            C[i - 1][j - 1] = C[j - 1][i - 1] = v
        return tuple(tuple(row) for row in C)

    def coefficient(self, i, j):
        if i > j:
            i, j = j, i
        return dict(self.coeffs).get((i, j), 0)

    def __call__(self, x):
        return evaluate(self, x)

    def to_json(self):
        return {"n": self.n, "coefficients": [[i, j, v] for (i, j), v in self.coeffs]}

    def __repr__(self):
        terms = ", ".join(f"q{i}{j}={v}" for (i, j), v in self.coeffs)
        return f"UnitForm(n={self.n}{', ' if terms else ''}{terms})"


def from_coefficients(n, entries):
    """Build a unit form from ``(i, j, q_ij)`` triples with ``1 <= i < j <= n``."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"n must be a positive integer, got {n!r}")
    seen = {}
    for entry in entries:
        i, j, v = entry
        if not (1 <= i < j <= n):
            raise IndexOutOfRange(f"pair ({i}, {j}) invalid for n={n}")
        if (i, j) in seen:
            raise DuplicatePair(f"pair ({i}, {j}) given twice")
        if v == 0:
            raise ZeroCoefficient(f"pair ({i}, {j}) has zero coefficient")
        seen[(i, j)] = int(v)
    return UnitForm(n, tuple(sorted(seen.items())))


def from_matrix(C):
    """Unit form with symmetric matrix ``C``; the diagonal must be all 2."""
    n = len(C)
    for i in range(n):
        if C[i][i] != 2:
            raise InvalidInput(f"diagonal entry {i + 1} is {C[i][i]}, not 2")
        for j in range(n):
            if C[i][j] != C[j][i]:
                raise InvalidInput("matrix is not symmetric")
    entries = [(i + 1, j + 1, int(C[i][j])) for i in range(n) for j in range(i + 1, n) if C[i][j]]
    return from_coefficients(n, entries)


def from_json(doc):
    if isinstance(doc, (str, Path)):
        doc = json.loads(Path(doc).read_text())
    try:
        n = doc["n"]
        entries = [tuple(e) for e in doc.get("coefficients", [])]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed form document: {exc}") from exc
    if any(len(e) != 3 or not all(isinstance(t, int) for t in e) for e in entries):
        raise InvalidInput("each coefficient must be an [i, j, value] integer triple")
    return from_coefficients(n, entries)


def _check_len(q, x):
    if len(x) != q.n:
        raise DimensionMismatch(f"expected a vector of length {q.n}, got {len(x)}")


def evaluate(q, x):
    _check_len(q, x)
    total = sum(xi * xi for xi in x)
    for (i, j), v in q.coeffs:
        total += v * x[i - 1] * x[j - 1]
    return total


def bilinear(q, x, y):
    """The symmetric form ``q(x, y) = x^T C y``."""
    _check_len(q, x)
    _check_len(q, y)
    return sum(xi * cij * yj for xi, row in zip(x, q.C) for cij, yj in zip(row, y))


@dataclass(frozen=True)
class RadicalData:
    basis: tuple
    complement: tuple
    quotient_gram: tuple

    @property
    def corank(self):
        return len(self.basis)

    @cached_property
    def change_of_basis(self):
        """Columns: radical basis then complement.  Unimodular."""
        return intlinalg.transpose(list(self.basis) + list(self.complement))

    @cached_property
    def inverse(self):
        """Integer matrix taking ``x`` to its coordinates over basis + complement."""
        M = self.change_of_basis
        return tuple(tuple(row) for row in intlinalg.inverse_unimodular(M)) if M else ()

    def to_json(self):
        return {
            "basis": [list(b) for b in self.basis],
            "complement": [list(c) for c in self.complement],
            "quotient_gram": [list(r) for r in self.quotient_gram],
        }


@lru_cache(maxsize=256)
def radical_data(q):
    """Z-basis of ``rad q``, a unimodular completion, and the induced Gram matrix."""
    C = [list(r) for r in q.C]
    basis = intlinalg.integer_kernel(C, q.n)
    complement = intlinalg.complete_basis(basis, q.n)
    KC = intlinalg.matmul(complement, C) if complement else []
    gram = intlinalg.matmul(KC, intlinalg.transpose(complement)) if complement else []
    return RadicalData(
        basis=tuple(tuple(b) for b in basis),
        complement=tuple(tuple(c) for c in complement),
        quotient_gram=tuple(tuple(r) for r in gram),
    )


def is_connected(q):
    if q.n == 1:
        return True
    adj = np.zeros((q.n, q.n), dtype=bool)
    for (i, j), _ in q.coeffs:
        adj[i - 1, j - 1] = True
    ncomp, _ = connected_components(adj, directed=False)
    return ncomp == 1


def is_nonnegative(q):
    return intlinalg.ldl_psd(q.C)[0]


def is_positive(q):
    ok, pivots = intlinalg.ldl_psd(q.C)
    return ok and len(pivots) == q.n


def require_connected_nonnegative(q):
    if not is_connected(q):
        raise NotConnected(f"{q!r} is not connected")
    if not is_nonnegative(q):
        raise NotNonNegative(f"{q!r} is not non-negative")


def short_vectors(gram, bound):
    """All integer ``v`` with ``0 < v^T G v / 2 <= bound`` for positive definite ``G``.

    Fincke-Pohst style enumeration done in exact rationals: write
    ``v^T G v / 2 = sum_i d_i (v_i + sum_{j>i} u_ij v_j)^2`` and fix
    coordinates from the last one down, pruning by the remaining budget.
    """
    r = len(gram)
    A = [[Fraction(gram[i][j], 2) for j in range(r)] for i in range(r)]
    # A = U^T D U with U unit upper triangular
    d = [Fraction(0)] * r
    U = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for i in range(r):
        d[i] = A[i][i] - sum(d[k] * U[k][i] ** 2 for k in range(i))
        if d[i] <= 0:
            raise NotNonNegative("Gram matrix is not positive definite")
        for j in range(i + 1, r):
            U[i][j] = (A[i][j] - sum(d[k] * U[k][i] * U[k][j] for k in range(i))) / d[i]
    bound = Fraction(bound)
    out = []
    v = [0] * r

    def rec(i, budget):
        if i < 0:
            if any(v):
                out.append(tuple(v))
            return
        center = -sum(U[i][j] * v[j] for j in range(i + 1, r))
        radius2 = budget / d[i]
        s = math.isqrt(math.floor(radius2)) + 1
        lo, hi = math.floor(center) - s, math.ceil(center) + s
        for x in range(lo, hi + 1):
            t = d[i] * (x - center) ** 2
            if t <= budget:
                v[i] = x
                rec(i - 1, budget - t)
        v[i] = 0

    rec(r - 1, bound)
    return sorted(out)


_EXCEPTIONAL = {72: ("E", 6), 126: ("E", 7), 240: ("E", 8)}


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise InvalidInput(f"no Dynkin diagram {self.family}{self.rank}")

    @property
    def root_count(self):
        r = self.rank
        if self.family == "A":
            return r * (r + 1)
        if self.family == "D":
            return 2 * r * (r - 1)
        return {6: 72, 7: 126, 8: 240}[r]

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text):
        return cls(text[0], int(text[1:]))


def type_from_root_count(rank, count):
    candidates = [DynkinType("A", rank)]
    if rank >= 4:
        candidates.append(DynkinType("D", rank))
    if rank in (6, 7, 8):
        candidates.append(DynkinType("E", rank))
    for t in candidates:
        if t.root_count == count:
            return t
    raise UnrecognizedRootCount(f"{count} roots in rank {rank} match no ADE type")


@lru_cache(maxsize=256)
def quotient_roots(q):
    """Vectors of value 1 for the positive definite form induced on ``Z^n / rad q``."""
    rd = radical_data(q)
    if not rd.quotient_gram:
        return []
    return short_vectors(rd.quotient_gram, 1)


def dynkin_type(q):
    require_connected_nonnegative(q)
    rd = radical_data(q)
    rank = q.n - rd.corank
    roots = [v for v in quotient_roots(q) if _quad(rd.quotient_gram, v) == 2]
    return type_from_root_count(rank, len(roots))


def _quad(G, v):
    return sum(v[i] * G[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


def corank(q):
    return radical_data(q).corank


def compose(q, T):
    """The form ``x -> q(T x)``; raises InvalidInput if it is not a unit form."""
    T = [list(map(int, row)) for row in T]
    if len(T) != q.n or any(len(row) != q.n for row in T):
        raise DimensionMismatch("T must be n x n")
    Cp = intlinalg.matmul(intlinalg.matmul(intlinalg.transpose(T), [list(r) for r in q.C]), T)
    return from_matrix(Cp)
