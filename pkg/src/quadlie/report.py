"""Structured pass/fail records for the verification suites."""

from dataclasses import dataclass, field
from fractions import Fraction


def jsonable(value):
    """Convert Fractions (and containers of them) into JSON-friendly values.

    Integral rationals become ints; the rest become ``"p/q"`` strings.
    """
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


@dataclass
class CheckResult:
    check: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self):
        return {"check": self.check, "pass": bool(self.passed), "witness": jsonable(self.witness)}


@dataclass
class VerificationReport:
    suite: str
    q: object
    params: dict = field(default_factory=dict)
    gauge: object = None
    results: list = field(default_factory=list)

    def add(self, check, passed, witness=None):
        self.results.append(CheckResult(check, bool(passed), witness or {}))

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def extend(self, other, prefix=None):
        for r in other.results:
            name = f"{prefix}:{r.check}" if prefix else r.check
            self.results.append(CheckResult(name, r.passed, r.witness))
        return self

    def to_json(self):
        return {
            "suite": self.suite,
            "q": self.q.to_json(),
            "gauge": self.gauge.to_json() if self.gauge is not None else None,
            "params": jsonable(self.params),
            "results": [r.to_json() for r in self.results],
        }

    def summary(self):
        lines = [f"{self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  {r.check}: {'pass' if r.passed else 'FAIL'}" for r in self.results]
        return "\n".join(lines)
