"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows of Python ints (or Fractions where noted).
Nothing here touches floating point.
"""

from fractions import Fraction

import sympy


def _egcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        t = a // b
        a, b = b, a - t * b
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def hermite_reduce(A):
    """Row-reduce an integer matrix by unimodular row operations.

    Returns ``(V, H, pivots)`` where ``V`` is unimodular, ``H = V A`` is in
    Hermite normal form (positive pivots, entries above each pivot reduced
    into ``[0, pivot)``), and ``pivots`` lists the pivot column of each
    nonzero row of ``H``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    V = identity(m)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        for s in range(r + 1, m):
            if H[s][c] == 0:
                continue
            a, b = H[r][c], H[s][c]
            g, x, y = _egcd(a, b)
            p, t = -b // g, a // g
            H[r], H[s] = (
                [x * u + y * v for u, v in zip(H[r], H[s])],
                [p * u + t * v for u, v in zip(H[r], H[s])],
            )
            V[r], V[s] = (
                [x * u + y * v for u, v in zip(V[r], V[s])],
                [p * u + t * v for u, v in zip(V[r], V[s])],
            )
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-u for u in H[r]]
            V[r] = [-u for u in V[r]]
        piv = H[r][c]
        for s in range(r):
            k = H[s][c] // piv
            if k:
                H[s] = [u - k * v for u, v in zip(H[s], H[r])]
                V[s] = [u - k * v for u, v in zip(V[s], V[r])]
        pivots.append(c)
        r += 1
    return V, H, pivots


def integer_kernel(A, ncols=None):
    """Z-basis of ``{x in Z^n : A x = 0}``, as rows in Hermite normal form."""
    n = ncols if ncols is not None else len(A[0])
    if not A:
        return identity(n)
    V, H, pivots = hermite_reduce(transpose(A))
    rank = len(pivots)
    basis = V[rank:]
    if not basis:
        return []
    _, Hb, _ = hermite_reduce(basis)
    return [row for row in Hb if any(row)]


def is_primitive_system(vectors, n):
    """True iff the vectors extend to a Z-basis of Z^n."""
    if not vectors:
        return True
    _, H, pivots = hermite_reduce(transpose(vectors))
    k = len(vectors)
    if len(pivots) < k:
        return False
    d = 1
    for i in range(k):
        d *= H[i][i]
    return abs(d) == 1


def complete_basis(vectors, n):
    """Extend a primitive system of integer vectors to a basis of Z^n.

    Standard basis vectors are tried greedily first, so that the
    completion is as simple as possible; a Hermite-based completion is used
    for whatever remains.
    """
    chosen = [list(v) for v in vectors]
    extra = []
    for i in range(n):
        if len(chosen) + len(extra) == n:
            break
        e = [int(j == i) for j in range(n)]
        if is_primitive_system(chosen + extra + [e], n):
            extra.append(e)
    if len(chosen) + len(extra) < n:
        current = chosen + extra
        V, _, _ = hermite_reduce(transpose(current))
        W = inverse_unimodular(V)
        extra += [list(col) for col in transpose(W)[len(current):]]
    return extra


def inverse_unimodular(M):
    inv = sympy.Matrix(M).inv()
    return [[int(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def _sym(M):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in row] for row in M])


def det(M):
    """Exact determinant, returned as a Fraction."""
    if not M:
        return Fraction(1)
    d = sympy.Rational(_sym(M).det(method="bareiss"))
    return Fraction(int(d.p), int(d.q))


def rank(M):
    if not M or not M[0]:
        return 0
    return int(_sym(M).rank())


def ldl_psd(A):
    """Decide positive semidefiniteness of a rational symmetric matrix.

    Symmetric elimination with diagonal pivoting: a negative pivot, or a
    zero diagonal entry whose row is not entirely zero, certifies that the
    matrix is not PSD.  Returns ``(is_psd, pivots)``.
    """
    M = [[Fraction(x) for x in row] for row in A]
    active = list(range(len(M)))
    pivots = []
    while active:
        diag = [(M[i][i], i) for i in active]
        if any(d < 0 for d, _ in diag):
            return False, pivots
        d, p = max(diag)
        if d == 0:
            ok = all(M[i][j] == 0 for i in active for j in active)
            return ok, pivots
        pivots.append(d)
        active.remove(p)
        for i in active:
            f = M[i][p] / d
            if f:
                for j in active:
                    M[i][j] -= f * M[p][j]
    return True, pivots
