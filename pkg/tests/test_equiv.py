import pytest

from conftest import FOUR, load
from quadlie import intlinalg
from quadlie.equiv import are_equivalent, invariants, random_equivalent_form, random_unimodular
from quadlie.errors import InvalidInput, NotConnected
from quadlie.unitform import DynkinType, compose, from_coefficients


def test_invariants_examples(a2, a1t):
    assert invariants(a2).to_json() == {
        "n": 2, "corank": 0, "dynkin": "A2", "dim_H": 2, "dim_iso_space": None, "root_count_quotient": 6}
    assert invariants(a1t).to_json() == {
        "n": 2, "corank": 1, "dynkin": "A1", "dim_H": 3, "dim_iso_space": 1, "root_count_quotient": 2}
    a1 = load("a1")
    inv = invariants(a1)
    assert (inv.n, inv.corank, inv.dynkin, inv.dim_H, inv.root_count_quotient) == (1, 0, DynkinType("A", 1), 1, 2)


def test_are_equivalent(a2, a1t):
    assert are_equivalent(a2, compose(a2, [[1, 1], [0, 1]]))
    assert are_equivalent(a2, from_coefficients(2, [(1, 2, 1)]))
    assert not are_equivalent(a2, a1t)
    assert are_equivalent(a1t, a1t)
    # different numbers of variables are never equivalent
    assert not are_equivalent(load("a1"), a1t)


def test_equivalence_needs_connected_forms(a2):
    with pytest.raises(NotConnected):
        are_equivalent(a2, from_coefficients(2, []))


def test_random_unimodular():
    for seed in range(10):
        T = random_unimodular(3, magnitude=2, seed=seed)
        assert abs(intlinalg.det(T)) == 1
    assert random_unimodular(4, steps=0) == intlinalg.identity(4)
    assert random_unimodular(2, seed=5) == random_unimodular(2, seed=5)
    with pytest.raises(InvalidInput):
        random_unimodular(2, magnitude=0)


@pytest.mark.parametrize("name", FOUR + ("d4",))
def test_random_equivalent_form(name):
    q = load(name)
    for seed in range(5):
        T, qT = random_equivalent_form(q, magnitude=2, seed=seed)
        assert qT == compose(q, T)
        assert invariants(qT) == invariants(q)


def test_affine_e6_vs_e6_plus_free_variable():
    # same n and Dynkin type but different corank
    e6t = from_coefficients(7, [(1, 2, -1), (2, 3, -1), (1, 4, -1), (4, 5, -1), (1, 6, -1), (6, 7, -1)])
    a7 = from_coefficients(7, [(i, i + 1, -1) for i in range(1, 7)])
    assert invariants(e6t).dynkin == DynkinType("E", 6)
    assert not are_equivalent(e6t, a7)
