import itertools
import json

import pytest

import oracles
from quadlie import intlinalg
from quadlie.errors import (
    DimensionMismatch,
    DuplicatePair,
    IndexOutOfRange,
    InvalidInput,
    NotConnected,
    NotNonNegative,
    UnrecognizedRootCount,
    ZeroCoefficient,
)
from quadlie.unitform import (
    DynkinType,
    bilinear,
    compose,
    corank,
    dynkin_type,
    evaluate,
    from_coefficients,
    from_json,
    from_matrix,
    is_connected,
    is_nonnegative,
    is_positive,
    quotient_roots,
    radical_data,
    require_connected_nonnegative,
    short_vectors,
    type_from_root_count,
)


def test_from_coefficients_builds_C():
    q = from_coefficients(2, [(1, 2, -1)])
    assert q.C == ((2, -1), (-1, 2))
    assert from_coefficients(1, []).C == ((2,),)


@pytest.mark.parametrize("entries, exc", [
    ([(1, 2, -1), (1, 2, -1)], DuplicatePair),
    ([(1, 3, -1)], IndexOutOfRange),
    ([(2, 1, -1)], IndexOutOfRange),
    ([(1, 2, 0)], ZeroCoefficient),
])
def test_from_coefficients_rejects(entries, exc):
    with pytest.raises(exc):
        from_coefficients(2, entries)


def test_json_round_trip(forms_dir):
    for path in sorted(forms_dir.glob("*.json")):
        q = from_json(path)
        assert from_json(q.to_json()) == q
        assert from_json(json.loads(path.read_text())) == q


@pytest.mark.parametrize("doc", [{}, {"n": 2, "coefficients": [[1, 2]]}, {"n": 0}, {"n": 2, "coefficients": [[1, 2, 1.5]]}])
def test_from_json_rejects_malformed(doc):
    with pytest.raises(InvalidInput):
        from_json(doc)


def test_from_matrix():
    assert from_matrix([[2, -1], [-1, 2]]) == from_coefficients(2, [(1, 2, -1)])
    with pytest.raises(InvalidInput):
        from_matrix([[1, 0], [0, 2]])
    with pytest.raises(InvalidInput):
        from_matrix([[2, 1], [0, 2]])


def test_evaluate(a2, a1t):
    assert evaluate(a2, (1, 1)) == 1
    assert evaluate(a2, (0, 0)) == 0
    assert evaluate(a1t, (3, 3)) == 0
    assert a1t((2, 1)) == 1
    with pytest.raises(DimensionMismatch):
        evaluate(a2, (1, 2, 3))


def test_bilinear(a2, a1t):
    assert bilinear(a2, (1, 0), (0, 1)) == -1
    assert bilinear(a2, (1, 0), (1, 0)) == 2
    for y in itertools.product(range(-3, 4), repeat=2):
        assert bilinear(a1t, (1, 1), y) == 0
    with pytest.raises(DimensionMismatch):
        bilinear(a2, (1, 0), (1,))


def test_bilinear_polarizes_evaluate(corank2):
    for x in itertools.product(range(-2, 3), repeat=3):
        for y in itertools.product(range(-1, 2), repeat=3):
            s = [a + b for a, b in zip(x, y)]
            assert bilinear(corank2, x, y) == evaluate(corank2, s) - evaluate(corank2, x) - evaluate(corank2, y)


def test_radical_a2(a2):
    rd = radical_data(a2)
    assert rd.corank == 0 and rd.basis == () and rd.quotient_gram == ((2, -1), (-1, 2))


def test_radical_a1_tilde(a1t):
    rd = radical_data(a1t)
    assert rd.corank == 1
    assert rd.basis == ((1, 1),)
    assert rd.complement == ((1, 0),)
    assert rd.quotient_gram == ((2,),)


def test_radical_a3_chain():
    assert corank(from_coefficients(3, [(1, 2, -1), (2, 3, -1)])) == 0


@pytest.mark.parametrize("name", ["a1tilde", "a1_corank2", "a3", "d4"])
def test_radical_matches_brute_force(name):
    from conftest import load

    q = load(name)
    rd = radical_data(q)
    coeffs = dict(q.coeffs)
    # rank of C from an independent elimination
    assert rd.corank == q.n - oracles.rational_rank(oracles.gram(q.n, coeffs))
    # every basis vector is radical, and every small radical vector is an
    # integer combination of the basis (so the basis spans the lattice)
    for b in rd.basis:
        assert all(bilinear(q, b, e) == 0 for e in itertools.product((0, 1), repeat=q.n))
    for x in oracles.radical_vectors(q.n, coeffs, 3):
        assert oracles.in_integer_span(rd.basis, x)
    # radical + complement is a Z-basis
    M = list(rd.basis) + list(rd.complement)
    assert abs(intlinalg.det(M)) == 1


def test_change_of_basis_inverse(corank2):
    rd = radical_data(corank2)
    M, Minv = rd.change_of_basis, rd.inverse
    assert intlinalg.matmul(Minv, M) == intlinalg.identity(3)


def test_connectivity():
    assert is_connected(from_coefficients(2, [(1, 2, -1)]))
    assert not is_connected(from_coefficients(2, []))
    assert is_connected(from_coefficients(1, []))
    # dotted edges count too
    assert is_connected(from_coefficients(3, [(1, 2, 1), (2, 3, -1)]))


def test_nonnegativity(a2, a1t):
    assert is_nonnegative(a1t) and not is_positive(a1t)
    q = from_coefficients(2, [(1, 2, -3)])
    assert oracles.qvalue(2, {(1, 2): -3}, (1, 1)) == -1
    assert not is_nonnegative(q)
    assert is_nonnegative(a2) and is_positive(a2)


def test_nonnegativity_matches_brute_force():
    # every 3-variable form with coefficients in {-2..2}: non-negative iff no
    # small vector has negative value (small boxes suffice at this size)
    for vals in itertools.product(range(-2, 3), repeat=3):
        entries = [(i, j, v) for (i, j), v in zip([(1, 2), (1, 3), (2, 3)], vals) if v]
        q = from_coefficients(3, entries)
        brute = all(oracles.qvalue(3, dict(q.coeffs), x) >= 0
                    for x in itertools.product(range(-3, 4), repeat=3))
        assert is_nonnegative(q) == brute, q


def test_require_connected_nonnegative():
    with pytest.raises(NotConnected):
        require_connected_nonnegative(from_coefficients(2, []))
    with pytest.raises(NotNonNegative):
        require_connected_nonnegative(from_coefficients(2, [(1, 2, -3)]))


def test_short_vectors_a2():
    got = sorted(short_vectors([[2, -1], [-1, 2]], 2))
    want = sorted(x for x in oracles.roots_in_box(*oracles.A2, 3) if any(x))
    assert [tuple(v) for v in got] == want


@pytest.mark.parametrize("family, rank, count", [
    ("A", 1, 2), ("A", 4, 20), ("D", 4, 24), ("D", 5, 40), ("E", 6, 72), ("E", 7, 126), ("E", 8, 240),
])
def test_dynkin_root_counts(family, rank, count):
    t = DynkinType(family, rank)
    assert t.root_count == count
    assert type_from_root_count(rank, count) == t
    assert DynkinType.parse(str(t)) == t


def test_dynkin_rejects():
    with pytest.raises(UnrecognizedRootCount):
        type_from_root_count(3, 7)
    with pytest.raises(InvalidInput):
        DynkinType("D", 3)


def test_dynkin_type_examples(a2, a1t):
    assert dynkin_type(a2) == DynkinType("A", 2)
    assert len(quotient_roots(a2)) == oracles.count_value(*oracles.A2, 3, 1) == 6
    assert dynkin_type(a1t) == DynkinType("A", 1)


def test_dynkin_affine_e6():
    # extended E6: a star with three arms of length 2
    q = from_coefficients(7, [(1, 2, -1), (2, 3, -1), (1, 4, -1), (4, 5, -1), (1, 6, -1), (6, 7, -1)])
    assert corank(q) == 1
    assert dynkin_type(q) == DynkinType("E", 6)


def test_compose():
    a2 = from_coefficients(2, [(1, 2, -1)])
    assert compose(a2, [[1, 1], [0, 1]]) == from_coefficients(2, [(1, 2, 1)])
    with pytest.raises(InvalidInput):
        compose(a2, [[2, 0], [0, 1]])
