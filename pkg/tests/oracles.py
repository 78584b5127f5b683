"""Brute-force reference computations, written independently of the package.

Nothing here imports quadlie: forms are plain ``(n, {(i, j): q_ij})`` pairs
with 1-based indices, and every answer comes from direct enumeration or
elementary Gaussian elimination.
"""

import itertools
from fractions import Fraction

import numpy as np


def qvalue(n, coeffs, x):
    return sum(t * t for t in x) + sum(v * x[i - 1] * x[j - 1] for (i, j), v in coeffs.items())


def box_values(n, coeffs, bound):
    """q evaluated on the whole box ``|x_i| <= bound`` (numpy, one axis per variable)."""
    side = np.arange(-bound, bound + 1, dtype=np.int64)
    axes = np.meshgrid(*([side] * n), indexing="ij")
    total = sum(a * a for a in axes)
    for (i, j), v in coeffs.items():
        total = total + v * axes[i - 1] * axes[j - 1]
    return axes, total


def count_value(n, coeffs, bound, value):
    _, total = box_values(n, coeffs, bound)
    return int(np.count_nonzero(total == value))


def roots_in_box(n, coeffs, bound):
    """Sorted integer vectors with max-norm <= bound and q in {0, 1}."""
    out = []
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if qvalue(n, coeffs, x) in (0, 1):
            out.append(x)
    return out


def rational_rank(rows):
    M = [[Fraction(t) for t in row] for row in rows]
    rank, ncols = 0, len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def gram(n, coeffs):
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j), v in coeffs.items():
        C[i - 1][j - 1] = C[j - 1][i - 1] = v
    return C


def radical_vectors(n, coeffs, bound):
    """Integer vectors in the box annihilated by the Gram matrix."""
    C = gram(n, coeffs)
    return [x for x in itertools.product(range(-bound, bound + 1), repeat=n)
            if all(sum(c * t for c, t in zip(row, x)) == 0 for row in C)]


def in_integer_span(vectors, x):
    """Is ``x`` an integer combination of the (linearly independent) ``vectors``?

    Solves over Q and checks the coefficients are integral.
    """
    k = len(vectors)
    if k == 0:
        return not any(x)
    A = [[Fraction(v[i]) for v in vectors] + [Fraction(x[i])] for i in range(len(x))]
    rows, r = len(A), 0
    pivcols = []
    for c in range(k):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        A[r] = [a / A[r][c] for a in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivcols.append(c)
        r += 1
    if any(A[i][k] for i in range(r, rows)):
        return False
    return all(A[i][k].denominator == 1 for i in range(r))


def scan_string(n, coeffs, alpha, beta, span=6):
    """(d, u) of the alpha-string through beta by membership tests."""
    def is_root(x):
        return qvalue(n, coeffs, x) in (0, 1)

    u = 0
    while u < span and is_root([b + (u + 1) * a for a, b in zip(alpha, beta)]):
        u += 1
    d = 0
    while d < span and is_root([b - (d + 1) * a for a, b in zip(alpha, beta)]):
        d += 1
    return d, u


# standard forms used across the tests, as (n, coefficient dict)
A2 = (2, {(1, 2): -1})
A1_TILDE = (2, {(1, 2): -2})
CORANK2 = (3, {(1, 2): -2, (1, 3): -2, (2, 3): 2})


def path(r):
    return r, {(i, i + 1): -1 for i in range(1, r)}
