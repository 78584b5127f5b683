"""The extended affine Lie algebra E(q) of a connected non-negative unit form.

Root spaces, with ``r = n - corank``:

* ``E_a = Q e_a`` for ``q(a) = 1``;
* ``E_s = Q^n / rad q`` for isotropic ``s != 0``, stored as coordinates over
  the complement basis (length ``r``), so equal cosets compare equal;
* ``E_0 = Q^n + (rad q)^*``, stored as ``(v_1..v_n, xi_1..xi_corank)``.

Scalars are exact rationals throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import intlinalg
from .errors import FormMismatch, GaugeMismatch, NotARoot, NotNonIsotropic
from .gauge import canonical_gauge
from .report import VerificationReport, jsonable
from .roots import RootKind, enumerate_roots, kind_of, nonisotropic_graph_components, root_string
from .unitform import evaluate, radical_data, require_connected_nonnegative

NONISO, ISO, ZERO = RootKind.NONISOTROPIC, RootKind.ISOTROPIC, RootKind.ZERO
_F0 = Fraction(0)


class GradedElement:
    """A finite sum of homogeneous components, keyed by degree.

    Treat instances as immutable; arithmetic returns new elements.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {d: c for d, c in (terms or {}).items() if any(c)}

    def __add__(self, other):
        self.algebra._check_same(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            if d in terms:
                terms[d] = tuple(a + b for a, b in zip(terms[d], c))
            else:
                terms[d] = c
        return GradedElement(self.algebra, terms)

    def __neg__(self):
        return GradedElement(self.algebra, {d: tuple(-a for a in c) for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return GradedElement(self.algebra, {d: tuple(s * a for a in c) for d, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def degrees(self):
        return sorted(self.terms)

    @property
    def is_homogeneous(self):
        return len(self.terms) <= 1

    @property
    def degree(self):
        if len(self.terms) != 1:
            raise ValueError("element is not homogeneous and nonzero")
        return next(iter(self.terms))

    def component(self, degree):
        return GradedElement(self.algebra, {degree: self.terms[degree]} if degree in self.terms else {})

    def to_json(self):
        """``{"terms": [{"degree", "space", "coords"}]}``, sorted by degree."""
        n = self.algebra.n
        out = []
        for d in sorted(self.terms):
            c = self.terms[d]
            kind = self.algebra.kind(d)
            if kind is ZERO:
                if any(c[:n]):
                    out.append({"degree": list(d), "space": "zerovec", "coords": jsonable(c[:n])})
                if any(c[n:]):
                    out.append({"degree": list(d), "space": "zerodual", "coords": jsonable(c[n:])})
            else:
                space = "noniso" if kind is NONISO else "iso"
                out.append({"degree": list(d), "space": space, "coords": jsonable(c)})
        return {"terms": out}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms):
            parts.append(f"{list(d)}:{[str(x) for x in self.terms[d]]}")
        return "GradedElement(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class BasisElement:
    degree: tuple
    space: str  # noniso | iso | zerovec | zerodual
    index: int
    element: GradedElement

    def label(self):
        return {"degree": list(self.degree), "space": self.space, "index": self.index}


class ExtendedAffineLieAlgebra:
    """E(q) for a connected non-negative unit form ``q``.

    ``gauge`` defaults to :func:`~quadlie.gauge.canonical_gauge`.
    """

    def __init__(self, q, gauge=None):
        require_connected_nonnegative(q)
        self.q = q
        self.gauge = gauge if gauge is not None else canonical_gauge(q)
        rd = radical_data(q)
        self.radical = rd
        self.n = q.n
        self.nu = rd.corank
        self.r = self.n - self.nu
        inv = rd.inverse
        self._P = inv[: self.nu]  # radical coordinates (= xi_k o rho)
        self._Q = inv[self.nu:]  # complement (coset) coordinates
        C = q.C
        self._C = C
        self._B = self.gauge.B
        self._KC = tuple(tuple(sum(k[i] * C[i][j] for i in range(self.n)) for j in range(self.n))
                         for k in rd.complement)
        self._G = rd.quotient_gram
        self._kinds = {}
        self._zero_deg = (0,) * self.n

    def __eq__(self, other):
        return (isinstance(other, ExtendedAffineLieAlgebra)
                and self.q == other.q and self.gauge == other.gauge)

    def __hash__(self):
        return hash((self.q, self.gauge))

    def _check_same(self, other):
        if other.algebra is self:
            return
        if other.algebra.q != self.q:
            raise FormMismatch("elements belong to algebras of different forms")
        if other.algebra.gauge != self.gauge:
            raise GaugeMismatch("elements belong to algebras with different gauges")

    # -- degrees and small linear algebra -------------------------------------

    def kind(self, deg):
        k = self._kinds.get(deg)
        if k is None:
            k = kind_of(self.q, deg)
            if k is None:
                raise NotARoot(f"{list(deg)} is not a root")
            self._kinds[deg] = k
        return k

    def _kind_or_none(self, deg):
        try:
            return self.kind(deg)
        except NotARoot:
            return None

    def dimension(self, deg):
        k = self.kind(tuple(deg))
        return 1 if k is NONISO else (self.r if k is ISO else self.n + self.nu)

    def _eps(self, a, b):
        B = self._B
        s = 0
        for i, ai in enumerate(a):
            if ai:
                row = B[i]
                s += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
        return -1 if s % 2 else 1

    def _qb(self, v, w):
        C = self._C
        return sum(vi * C[i][j] * wj for i, vi in enumerate(v) if vi for j, wj in enumerate(w) if wj)

    def coset(self, v):
        """Coordinates of the class of ``v`` in ``Q^n / rad q``."""
        return tuple(sum(Fraction(p) * t for p, t in zip(row, v)) for row in self._Q)

    def lift(self, b):
        """A representative in ``Q^n`` of the coset with coordinates ``b``."""
        K = self.radical.complement
        return tuple(sum(bj * K[j][i] for j, bj in enumerate(b)) for i in range(self.n))

    def rho_coords(self, v):
        """``(xi_1(rho(v)), ..., xi_nu(rho(v)))``."""
        return tuple(sum(p * t for p, t in zip(row, v)) for row in self._P)

    def _q_coset_vec(self, b, beta):
        return sum(bj * sum(k * t for k, t in zip(row, beta)) for bj, row in zip(b, self._KC) if bj)

    def _gram(self, b, c):
        G = self._G
        return sum(bi * G[i][j] * cj for i, bi in enumerate(b) if bi for j, cj in enumerate(c) if cj)

    # -- constructors ---------------------------------------------------------

    def zero(self):
        return GradedElement(self)

    def e(self, alpha, coeff=1):
        """``coeff * e_alpha`` for a non-isotropic root ``alpha``."""
        alpha = tuple(alpha)
        if self.kind(alpha) is not NONISO:
            raise NotNonIsotropic(f"{list(alpha)} is not a non-isotropic root")
        return GradedElement(self, {alpha: (Fraction(coeff),)})

    def pi(self, sigma, v):
        """``pi_sigma(v)`` for an isotropic root ``sigma`` (possibly 0) and ``v in Q^n``."""
        sigma = tuple(sigma)
        k = self.kind(sigma)
        if k is NONISO:
            raise NotARoot(f"{list(sigma)} is not isotropic")
        v = tuple(Fraction(t) for t in v)
        if k is ZERO:
            return GradedElement(self, {sigma: v + (_F0,) * self.nu})
        return GradedElement(self, {sigma: self.coset(v)})

    def pi_coset(self, sigma, coords):
        """``pi_sigma`` of the coset with the given complement coordinates."""
        sigma = tuple(sigma)
        if self.kind(sigma) is not ISO:
            raise NotARoot(f"{list(sigma)} is not a nonzero isotropic root")
        return GradedElement(self, {sigma: tuple(Fraction(t) for t in coords)})

    def xi(self, k, coeff=1):
        """``coeff * xi_k`` (1-based) in ``(rad q)^*``."""
        from .errors import IndexOutOfRange

        if not 1 <= k <= self.nu:
            raise IndexOutOfRange(f"xi index {k} not in 1..{self.nu}")
        c = [_F0] * (self.n + self.nu)
        c[self.n + k - 1] = Fraction(coeff)
        return GradedElement(self, {self._zero_deg: tuple(c)})

    def homogeneous(self, degree, coords):
        degree = tuple(degree)
        self.kind(degree)
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dimension(degree):
            raise ValueError(f"degree {list(degree)} needs {self.dimension(degree)} coordinates")
        return GradedElement(self, {degree: coords})

    def basis_of_degree(self, degree):
        degree = tuple(degree)
        k = self.kind(degree)
        if k is NONISO:
            return [BasisElement(degree, "noniso", 0, self.e(degree))]
        if k is ISO:
            return [
                BasisElement(degree, "iso", j, self.pi_coset(degree, [int(i == j) for i in range(self.r)]))
                for j in range(self.r)
            ]
        out = [
            BasisElement(degree, "zerovec", i, self.pi(degree, [int(t == i) for t in range(self.n)]))
            for i in range(self.n)
        ]
        out += [BasisElement(degree, "zerodual", k, self.xi(k + 1)) for k in range(self.nu)]
        return out

    def basis(self, height):
        """Basis of the sum of the root spaces of max-norm at most ``height``."""
        out = []
        for root in enumerate_roots(self.q, height):
            out += self.basis_of_degree(root.vec)
        return out

    # -- bracket and form -----------------------------------------------------

    def _bracket_hom(self, a, ca, b, cb):
        """Bracket of homogeneous components; returns ``(degree, coords)`` or None."""
        ka, kb = self.kind(a), self.kind(b)
        n = self.n
        if ka is ZERO:
            if kb is ZERO:
                return None
            v, x = ca[:n], ca[n:]
            weight = sum(xk * rk for xk, rk in zip(x, self.rho_coords(b)))
            if kb is NONISO:
                c = (self._qb(v, b) + weight) * cb[0]
                return (b, (c,)) if c else None
            return (b, tuple(weight * t for t in cb)) if weight else None
        if kb is ZERO:
            res = self._bracket_hom(b, cb, a, ca)
            return None if res is None else (res[0], tuple(-t for t in res[1]))
        s = tuple(x + y for x, y in zip(a, b))
        if ka is NONISO and kb is NONISO:
            ks = self._kind_or_none(s)
            if ks is None:
                return None
            c = self._eps(a, b) * ca[0] * cb[0]
            if ks is NONISO:
                return s, (c,)
            if ks is ZERO:
                return s, tuple(c * t for t in a) + (_F0,) * self.nu
            return s, tuple(c * t for t in self.coset(a))
        if ka is ISO and kb is NONISO:
            c = self._eps(a, b) * self._q_coset_vec(ca, b) * cb[0]
            return (s, (c,)) if c else None
        if ka is NONISO and kb is ISO:
            res = self._bracket_hom(b, cb, a, ca)
            return None if res is None else (res[0], tuple(-t for t in res[1]))
        # both isotropic and nonzero
        if any(s):
            return None
        c = self._gram(ca, cb)
        return (s, tuple(c * t for t in a) + (_F0,) * self.nu) if c else None

    def bracket(self, x, y):
        self._check_same(x)
        self._check_same(y)
        terms = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                res = self._bracket_hom(a, ca, b, cb)
                if res is None:
                    continue
                d, c = res
                if d in terms:
                    terms[d] = tuple(s + t for s, t in zip(terms[d], c))
                else:
                    terms[d] = c
        return GradedElement(self, terms)

    def _form_hom(self, a, ca, b, cb):
        if any(x + y for x, y in zip(a, b)):
            return _F0
        k = self.kind(a)
        if k is NONISO:
            return -ca[0] * cb[0]
        if k is ISO:
            return Fraction(self._gram(ca, cb))
        n = self.n
        v, x = ca[:n], ca[n:]
        w, y = cb[:n], cb[n:]
        val = self._qb(v, w)
        val += sum(xk * rk for xk, rk in zip(x, self.rho_coords(w)))
        val += sum(yk * rk for yk, rk in zip(y, self.rho_coords(v)))
        return Fraction(val)

    def form(self, x, y):
        """The invariant symmetric bilinear form."""
        self._check_same(x)
        self._check_same(y)
        total = _F0
        for a, ca in x.terms.items():
            neg = tuple(-t for t in a)
            if neg in y.terms:
                total += self._form_hom(a, ca, neg, y.terms[neg])
        return total

    def ad_power(self, x, y, k):
        for _ in range(k):
            y = self.bracket(x, y)
            if not y:
                break
        return y

    def __repr__(self):
        return f"E({self.q!r})"


def dimensions(q, degree):
    """Dimension of the root space of ``degree``: 1, ``n - corank`` or ``n + corank``."""
    degree = tuple(degree)
    k = kind_of(q, degree)
    if k is None:
        raise NotARoot(f"{list(degree)} is not a root")
    n, nu = q.n, radical_data(q).corank
    return 1 if k is NONISO else (n - nu if k is ISO else n + nu)


def total_dimension(q, height):
    return sum(dimensions(q, r.vec) for r in enumerate_roots(q, height))


# -- verification suites ------------------------------------------------------


def _random_homogeneous(alg, degrees, rng):
    d = degrees[int(rng.integers(len(degrees)))]
    dim = alg.dimension(d)
    coords = [Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5))) for _ in range(dim)]
    return alg.homogeneous(d, coords)


def _jacobi(alg, x, y, z):
    br = alg.bracket
    return br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))


def check_jacobi(alg, height=3, samples=1000, seed=0, exhaustive_height=2, max_exhaustive=200):
    """Jacobi identity and anticommutativity, exhaustively on a small basis and on random triples."""
    report = VerificationReport(
        "jacobi", alg.q, gauge=alg.gauge,
        params={"height": height, "samples": samples, "seed": seed},
    )
    h0 = min(height, exhaustive_height)
    basis = alg.basis(h0)
    if len(basis) <= max_exhaustive:
        bad = []
        for x, y in itertools.product(basis, repeat=2):
            if alg.bracket(x.element, y.element) != -alg.bracket(y.element, x.element):
                bad.append([x.label(), y.label()])
        report.add("anticommutativity:exhaustive", not bad,
                   {"height": h0, "pairs": len(basis) ** 2, "failures": bad[:5]})
        # with anticommutativity in hand the Jacobiator is alternating, so
        # unordered triples (repetitions allowed) cover every ordered one
        bad, count = [], 0
        for i, j, k in itertools.combinations_with_replacement(range(len(basis)), 3):
            count += 1
            if _jacobi(alg, basis[i].element, basis[j].element, basis[k].element):
                bad.append([basis[i].label(), basis[j].label(), basis[k].label()])
        report.add("jacobi:exhaustive", not bad,
                   {"height": h0, "basis_size": len(basis), "triples": count, "failures": bad[:5]})
    else:
        report.add("jacobi:exhaustive", True,
                   {"skipped": f"basis of size {len(basis)} exceeds {max_exhaustive}"})

    rng = np.random.default_rng(seed)
    degrees = [r.vec for r in enumerate_roots(alg.q, height)]
    bad_j, bad_a = [], []
    for _ in range(samples):
        x, y, z = (_random_homogeneous(alg, degrees, rng) for _ in range(3))
        if _jacobi(alg, x, y, z):
            bad_j.append([repr(x), repr(y), repr(z)])
        if alg.bracket(x, y) != -alg.bracket(y, x):
            bad_a.append([repr(x), repr(y)])
    report.add("jacobi:random", not bad_j, {"samples": samples, "failures": bad_j[:5]})
    report.add("anticommutativity:random", not bad_a, {"samples": samples, "failures": bad_a[:5]})
    return report


def check_grading(alg, height=2):
    """Brackets respect the grading and ``E_0`` acts diagonally by ``q(v, a) + xi(rho(a))``."""
    report = VerificationReport("grading", alg.q, gauge=alg.gauge, params={"height": height})
    basis = alg.basis(height)
    bad = []
    for x, y in itertools.product(basis, repeat=2):
        z = alg.bracket(x.element, y.element)
        s = tuple(a + b for a, b in zip(x.degree, y.degree))
        if z and (z.degrees != [s] or kind_of(alg.q, s) is None):
            bad.append([x.label(), y.label()])
    report.add("grading", not bad, {"pairs": len(basis) ** 2, "failures": bad[:5]})

    bad = []
    zero = alg._zero_deg
    cartan = alg.basis_of_degree(zero)
    for h in cartan:
        for x in basis:
            a = x.degree
            if h.space == "zerovec":
                v = [int(t == h.index) for t in range(alg.n)]
                expected = alg._qb(v, a) if alg.kind(a) is not ZERO else 0
            else:
                expected = alg.rho_coords(a)[h.index]
            if alg.bracket(h.element, x.element) != expected * x.element:
                bad.append([h.label(), x.label()])
    report.add("cartan-diagonal", not bad, {"pairs": len(cartan) * len(basis), "failures": bad[:5]})
    return report


def _pairing_matrix(alg, degree):
    left = alg.basis_of_degree(degree)
    right = alg.basis_of_degree(tuple(-t for t in degree))
    return [[alg.form(x.element, y.element) for y in right] for x in left]


def check_form(alg, height=3):
    """Invariance, symmetry and non-degeneracy of the bilinear form."""
    report = VerificationReport("form", alg.q, gauge=alg.gauge, params={"height": height})
    basis = alg.basis(height)
    by_degree = {}
    for b in basis:
        by_degree.setdefault(b.degree, []).append(b)

    bad_sym, bad_inv, triples = [], [], 0
    for x in basis:
        for y in basis:
            s = tuple(a + b for a, b in zip(x.degree, y.degree))
            if not any(s) and alg.form(x.element, y.element) != alg.form(y.element, x.element):
                bad_sym.append([x.label(), y.label()])
            for z in by_degree.get(tuple(-t for t in s), ()):
                triples += 1
                lhs = alg.form(alg.bracket(x.element, y.element), z.element)
                rhs = alg.form(x.element, alg.bracket(y.element, z.element))
                if lhs != rhs:
                    bad_inv.append({"x": x.label(), "y": y.label(), "z": z.label(),
                                    "lhs": lhs, "rhs": rhs})
    report.add("symmetry", not bad_sym, {"failures": bad_sym[:5]})
    report.add("invariance", not bad_inv, {"triples": triples, "failures": bad_inv[:5]})

    bad_vanish = []
    small = alg.basis(min(height, 2))
    for x, y in itertools.product(small, repeat=2):
        if any(a + b for a, b in zip(x.degree, y.degree)) and alg.form(x.element, y.element) != 0:
            bad_vanish.append([x.label(), y.label()])
    report.add("vanishing", not bad_vanish, {"failures": bad_vanish[:5]})

    singular, blocks = [], 0
    for degree in sorted(by_degree):
        blocks += 1
        M = _pairing_matrix(alg, degree)
        if intlinalg.det(M) == 0:
            singular.append(list(degree))
    gram0 = _pairing_matrix(alg, alg._zero_deg)
    report.add("nondegenerate", not singular,
               {"blocks": blocks, "singular": singular[:5],
                "cartan_gram": gram0, "cartan_det": intlinalg.det(gram0)})
    return report


def check_ad_nilpotent(alg, alpha, height=3):
    """``(ad e_alpha)^(u+1)`` kills every basis element of degree ``beta``,
    where ``u`` ends the alpha-string through ``beta``."""
    alpha = tuple(alpha)
    if alg.kind(alpha) is not NONISO:
        raise NotNonIsotropic(f"{list(alpha)} is not a non-isotropic root")
    report = VerificationReport("nilpotent", alg.q, gauge=alg.gauge,
                                params={"height": height, "alpha": list(alpha)})
    ea = alg.e(alpha)
    bad, count = [], 0
    for x in alg.basis(height):
        u = root_string(alg.q, alpha, x.degree).u
        count += 1
        if alg.ad_power(ea, x.element, u + 1):
            bad.append({"x": x.label(), "u": u})
    report.add(f"ad-nilpotent{list(alpha)}", not bad, {"elements": count, "failures": bad[:5]})
    return report


def check_local_nilpotency(alg, height=3, alpha_height=2):
    report = VerificationReport("nilpotent", alg.q, gauge=alg.gauge,
                                params={"height": height, "alpha_height": alpha_height})
    for root in enumerate_roots(alg.q, min(height, alpha_height)):
        if root.kind is NONISO:
            report.extend(check_ad_nilpotent(alg, root.vec, height))
    return report


def ideal_witness(alg, x):
    """For a homogeneous basis element of nonzero degree, a ``y`` of opposite
    degree with ``[x, y]`` a nonzero element of ``E_0``."""
    a = x.degree
    neg = tuple(-t for t in a)
    if alg.kind(a) is NONISO:
        return alg.e(neg, -1)
    coords = x.terms[a]
    for j in range(alg.r):
        w = [int(i == j) for i in range(alg.r)]
        if alg._gram(coords, w):
            return alg.pi_coset(neg, w)
    return None


def check_ideal_witness(alg, height=3):
    report = VerificationReport("ideal", alg.q, gauge=alg.gauge, params={"height": height})
    witnesses, bad = [], []
    for b in alg.basis(height):
        if not any(b.degree):
            continue
        y = ideal_witness(alg, b.element)
        z = alg.bracket(b.element, y) if y is not None else alg.zero()
        ok = bool(z) and z.degrees == [alg._zero_deg]
        entry = {"x": b.label(), "y": y.to_json() if y is not None else None, "bracket": z.to_json()}
        witnesses.append(entry)
        if not ok:
            bad.append(entry)
    report.add("ideal-witness", not bad,
               {"elements": len(witnesses), "witnesses": witnesses, "failures": bad[:5]})
    return report


def check_irreducible(alg, height=3):
    """The graph on truncated non-isotropic roots, edges where ``q(a, b) != 0``, is connected."""
    report = VerificationReport("irreducible", alg.q, gauge=alg.gauge, params={"height": height})
    noniso = [r.vec for r in enumerate_roots(alg.q, height) if r.kind is NONISO]
    ncomp = nonisotropic_graph_components(alg.q, noniso)
    report.add("irreducible", ncomp == 1, {"vertices": len(noniso), "components": ncomp})
    return report
