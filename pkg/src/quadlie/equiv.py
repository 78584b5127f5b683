"""Equivalence of connected non-negative unit forms.

Two such forms on the same number of variables are equivalent exactly when
their coranks and Dynkin types agree, so equivalence is decided from
invariants rather than by searching for a change of variables.  Forms on
different numbers of variables are never equivalent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intlinalg
from .eala import dimensions
from .errors import InvalidInput, QuadlieError
from .unitform import (
    DynkinType,
    compose,
    dynkin_type,
    quotient_roots,
    radical_data,
    require_connected_nonnegative,
)


@dataclass(frozen=True)
class FormInvariants:
    n: int
    corank: int
    dynkin: DynkinType
    dim_H: int
    dim_iso_space: int | None
    root_count_quotient: int

    def to_json(self):
        return {
            "n": self.n,
            "corank": self.corank,
            "dynkin": str(self.dynkin),
            "dim_H": self.dim_H,
            "dim_iso_space": self.dim_iso_space,
            "root_count_quotient": self.root_count_quotient,
        }


def invariants(q):
    require_connected_nonnegative(q)
    rd = radical_data(q)
    dim_H = dimensions(q, (0,) * q.n)
    dim_iso = dimensions(q, rd.basis[0]) if rd.basis else None
    return FormInvariants(
        n=q.n,
        corank=rd.corank,
        dynkin=dynkin_type(q),
        dim_H=dim_H,
        dim_iso_space=dim_iso,
        root_count_quotient=len(quotient_roots(q)),
    )


def are_equivalent(q1, q2):
    a, b = invariants(q1), invariants(q2)
    return a.n == b.n and a.corank == b.corank and a.dynkin == b.dynkin


def random_unimodular(n, magnitude=1, seed=0, steps=None):
    """A random product of elementary integer matrices (determinant +-1).

    Each step is a row addition with multiplier in ``[-magnitude, magnitude]``,
    a transposition of two rows, or a sign flip.  ``steps=0`` gives the
    identity.
    """
    if magnitude < 1:
        raise InvalidInput("magnitude must be at least 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if steps is None:
        steps = 2 * n
    T = intlinalg.identity(n)
    for _ in range(steps):
        T = _elementary(n, magnitude, rng) @ np.array(T, dtype=object)
        T = T.tolist()
    return [[int(x) for x in row] for row in T]


def _elementary(n, magnitude, rng, weights=None):
    E = np.array(intlinalg.identity(n), dtype=object)
    op = int(rng.choice(3, p=weights)) if n > 1 else 2
    if op == 0:
        i, j = (int(t) for t in rng.choice(n, size=2, replace=False))
        m = int(rng.integers(1, magnitude + 1)) * (1 if rng.integers(2) else -1)
        E[i, j] = m
    elif op == 1:
        i, j = (int(t) for t in rng.choice(n, size=2, replace=False))
        E[[i, j]] = E[[j, i]]
    else:
        i = int(rng.integers(n))
        E[i, i] = -1
    return E


def random_equivalent_form(q, magnitude=1, seed=0, steps=None, max_retries=1000):
    """``(T, q o T)`` for a random unimodular ``T`` such that ``q o T`` is a unit form.

    ``T`` is built one elementary step at a time, favouring row additions; a
    step is redrawn (up to ``max_retries`` times) whenever it would leave the
    unit diagonal.
    """
    rng = np.random.default_rng(seed)
    n = q.n
    if steps is None:
        steps = 3 * n
    T = np.array(intlinalg.identity(n), dtype=object)
    for _ in range(steps):
        for _ in range(max_retries):
            cand = T @ _elementary(n, magnitude, rng, weights=(0.8, 0.1, 0.1))
            try:
                compose(q, cand.tolist())
            except InvalidInput:
                continue
            T = cand
            break
        else:
            raise QuadlieError("could not find a unit-diagonal step within the retry cap")
    T = [[int(x) for x in row] for row in T.tolist()]
    return T, compose(q, T)
