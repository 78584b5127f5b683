"""The root system ``R(q) = q^{-1}(0) | q^{-1}(1)`` and its axioms.

``R(q)`` is infinite as soon as ``q`` has a radical, so enumeration is
always truncated by a max-norm ``height`` on coordinates.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from . import intlinalg
from .errors import NotARoot, NotNonIsotropic, QuadlieError
from .report import VerificationReport
from .unitform import bilinear, evaluate, radical_data


class RootKind(enum.Enum):
    ZERO = "zero"
    ISOTROPIC = "isotropic"
    NONISOTROPIC = "nonisotropic"


@dataclass(frozen=True, order=True)
class Root:
    vec: tuple
    kind: RootKind

    def to_json(self):
        return {"vec": list(self.vec), "kind": self.kind.value}


@dataclass(frozen=True)
class RootString:
    d: int
    u: int


@dataclass(frozen=True)
class RootDecomposition:
    representative: tuple
    radical_part: tuple


def kind_of(q, x):
    """RootKind of ``x``, or None when ``q(x)`` is neither 0 nor 1."""
    v = evaluate(q, x)
    if v == 1:
        return RootKind.NONISOTROPIC
    if v == 0:
        return RootKind.ZERO if not any(x) else RootKind.ISOTROPIC
    return None


def classify(q, x):
    """Tag ``x`` as a Root, or return None if it is not one."""
    x = tuple(int(t) for t in x)
    kind = kind_of(q, x)
    return None if kind is None else Root(x, kind)


def _as_root(q, r):
    if isinstance(r, Root):
        return r
    root = classify(q, r)
    if root is None:
        raise NotARoot(f"{tuple(r)} is not a root: q = {evaluate(q, r)}")
    return root


def _box_values(q, height):
    """All integer vectors in the box ``|x_i| <= height`` together with q(x)."""
    side = np.arange(-height, height + 1, dtype=np.int64)
    X = np.array(list(itertools.product(side, repeat=q.n)), dtype=np.int64).reshape(-1, q.n)
    C = np.array(q.C, dtype=np.int64)
    vals = np.einsum("ij,jk,ik->i", X, C, X) // 2
    return X, vals


def enumerate_roots(q, height):
    """Roots with max-norm at most ``height``, sorted lexicographically."""
    if height < 0:
        raise QuadlieError("height must be nonnegative")
    if (2 * height + 1) ** q.n > 20_000_000:
        raise QuadlieError(f"box of height {height} in dimension {q.n} is too large")
    X, vals = _box_values(q, height)
    keep = (vals == 0) | (vals == 1)
    out = []
    for row, v in zip(X[keep].tolist(), vals[keep].tolist()):
        if v == 1:
            kind = RootKind.NONISOTROPIC
        else:
            kind = RootKind.ZERO if not any(row) else RootKind.ISOTROPIC
        out.append(Root(tuple(row), kind))
    out.sort(key=lambda r: r.vec)
    return out


def root_string(q, alpha, beta):
    """Closed-form ``(d, u)`` for the ``alpha``-string through ``beta``.

    For ``q(beta) = 0`` the string is ``beta - alpha, beta, beta + alpha``.
    For ``q(beta) = 1`` with ``k = q(alpha, beta)``, ``q(beta + n alpha) =
    1 + n k + n^2`` hits ``{0, 1}`` exactly for ``n`` between ``0`` and ``-k``,
    so the string is ``(k, 0)`` for ``k >= 0`` and ``(0, -k)`` otherwise.
    """
    alpha = _as_root(q, alpha)
    beta = _as_root(q, beta)
    if alpha.kind is not RootKind.NONISOTROPIC:
        raise NotNonIsotropic(f"{alpha.vec} is isotropic")
    if beta.kind is not RootKind.NONISOTROPIC:
        return RootString(1, 1)
    k = bilinear(q, alpha.vec, beta.vec)
    if abs(k) > 2:
        raise QuadlieError(f"q(alpha, beta) = {k}; the form is not non-negative")
    return RootString(k, 0) if k >= 0 else RootString(0, -k)


def scan_root_string(q, alpha, beta, span=4):
    """Brute-force the string through membership tests for ``n`` in ``[-span, span]``.

    Returns ``(d, u)`` or None if the hits are not a contiguous run that
    stays away from the ends of the scan window.
    """
    hits = [
        n
        for n in range(-span, span + 1)
        if classify(q, [b + n * a for a, b in zip(alpha, beta)]) is not None
    ]
    if not hits or hits != list(range(hits[0], hits[-1] + 1)):
        return None
    if hits[0] == -span or hits[-1] == span:
        return None
    return -hits[0], hits[-1]


def decompose(q, r):
    """Split a root into complement part plus radical coordinates."""
    r = _as_root(q, r)
    rd = radical_data(q)
    coords = intlinalg.matvec(rd.inverse, r.vec) if rd.inverse else []
    nu = rd.corank
    rad_part = tuple(coords[:nu])
    comp = coords[nu:]
    rep = tuple(sum(c * k[i] for c, k in zip(comp, rd.complement)) for i in range(q.n))
    return RootDecomposition(rep, rad_part)


def nonisotropic_graph_components(q, vectors):
    """Number of connected components of the graph on ``vectors`` with
    edges where ``q(a, b) != 0``."""
    if not vectors:
        return 0
    X = np.array(vectors, dtype=np.int64)
    gram = X @ np.array(q.C, dtype=np.int64) @ X.T
    ncomp, _ = connected_components(gram != 0, directed=False)
    return int(ncomp)


def check_ears(q, height):
    """Check axioms (R1)-(R8) on the roots of max-norm at most ``height``."""
    roots = enumerate_roots(q, height)
    vecs = {r.vec for r in roots}
    noniso = [r.vec for r in roots if r.kind is RootKind.NONISOTROPIC]
    iso = [r.vec for r in roots if r.kind is not RootKind.NONISOTROPIC]
    report = VerificationReport("ears", q, params={"height": height})

    zero = (0,) * q.n
    report.add("R1", zero in vecs, {"zero_in_R": zero in vecs})

    missing = [v for v in vecs if tuple(-t for t in v) not in vecs]
    report.add("R2", not missing, {"not_closed": [list(v) for v in sorted(missing)[:5]]})

    rk = intlinalg.rank([list(v) for v in sorted(vecs)])
    report.add("R3", rk == q.n, {"rank": rk, "n": q.n})

    doubled = [a for a in noniso if classify(q, [2 * t for t in a]) is not None]
    report.add("R4", not doubled, {"checked": len(noniso), "failures": [list(a) for a in doubled[:5]]})

    report.add("R5", True, {"note": "R(q) lies in the lattice Z^n, hence is discrete"})

    bad, pairs = [], 0
    for a in noniso:
        for b in sorted(vecs):
            pairs += 1
            closed = root_string(q, a, b)
            scanned = scan_root_string(q, a, b)
            k = bilinear(q, a, b)
            if scanned != (closed.d, closed.u) or closed.d - closed.u != k:
                bad.append({"alpha": list(a), "beta": list(b), "closed": [closed.d, closed.u],
                            "scanned": scanned})
    report.add("R6", not bad, {"pairs": pairs, "failures": bad[:5]})

    ncomp = nonisotropic_graph_components(q, noniso)
    report.add("R7", ncomp == 1, {"vertices": len(noniso), "components": ncomp})

    c1 = [1] + [0] * (q.n - 1)
    no_partner = [s for s in iso if evaluate(q, [a + b for a, b in zip(c1, s)]) != 1]
    report.add("R8", not no_partner,
               {"isotropic": len(iso), "alpha": c1, "failures": [list(s) for s in no_partner[:5]]})
    return report
