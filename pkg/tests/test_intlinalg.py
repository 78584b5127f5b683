import json
from fractions import Fraction

from quadlie import intlinalg
from quadlie.report import VerificationReport, jsonable
from quadlie.unitform import from_coefficients


def test_det_and_rank_are_plain_numbers():
    d = intlinalg.det([[2, -1], [-1, 2]])
    assert d == 3 and isinstance(d, Fraction)
    assert intlinalg.det([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert intlinalg.det([]) == 1
    r = intlinalg.rank([[1, 2], [2, 4]])
    assert r == 1 and type(r) is int


def test_complete_basis():
    ext = intlinalg.complete_basis([[1, 1, 0]], 3)
    assert abs(intlinalg.det([[1, 1, 0]] + ext)) == 1
    # no standard vector completes (2, 3), so the Hermite fallback kicks in
    ext = intlinalg.complete_basis([[2, 3]], 2)
    assert abs(intlinalg.det([[2, 3]] + ext)) == 1
    assert not intlinalg.is_primitive_system([[2, 0]], 2)


def test_ldl_psd():
    assert intlinalg.ldl_psd([[2, -2], [-2, 2]])[0]
    assert not intlinalg.ldl_psd([[2, -3], [-3, 2]])[0]
    assert not intlinalg.ldl_psd([[0, 1], [1, 0]])[0]
    ok, piv = intlinalg.ldl_psd([[2, -1], [-1, 2]])
    assert ok and piv == [2, Fraction(3, 2)]


def test_jsonable_and_report():
    assert jsonable(Fraction(3, 1)) == 3
    assert jsonable(Fraction(-1, 2)) == "-1/2"
    assert jsonable({"a": (Fraction(1, 3), [1])}) == {"a": ["1/3", [1]]}
    q = from_coefficients(1, [])
    rep = VerificationReport("demo", q)
    rep.add("x", True, {"v": Fraction(1, 2)})
    other = VerificationReport("sub", q)
    other.add("y", False)
    rep.extend(other, prefix="sub")
    assert not rep.passed
    assert [c.check for c in rep.failures()] == ["sub:y"]
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["results"][0]["witness"] == {"v": "1/2"}
    assert "FAIL" in rep.summary()
