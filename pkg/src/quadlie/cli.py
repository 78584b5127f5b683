"""Command line front end: JSON in, JSON out.

    quadlie analyze FORM
    quadlie roots FORM [--height H]
    quadlie bracket FORM EXPR
    quadlie verify FORM [--suite S ...] [--height H] [--samples N] [--seed S] [--max-len L]
    quadlie equiv FORM FORM

Exit status is 0 on success, 1 when a verification check fails and 2 on
invalid input (with ``{"error": code, "detail": ...}`` on stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import eala, serre
from .eala import ExtendedAffineLieAlgebra
from .equiv import are_equivalent, invariants
from .errors import InvalidInput, QuadlieError
from .gauge import check_sign_lemma
from .report import VerificationReport
from .roots import RootKind, check_ears, enumerate_roots
from .unitform import from_json, radical_data, require_connected_nonnegative

SUITES = ("ears", "signs", "jacobi", "form", "nilpotent", "ideal", "irreducible", "serre")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def build_parser():
    p = _Parser(prog="quadlie", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="invariants, radical and gauge of a form")
    a.add_argument("form")

    r = sub.add_parser("roots", help="list roots up to a height")
    r.add_argument("form")
    r.add_argument("--height", type=int, default=3)

    b = sub.add_parser("bracket", help="evaluate a bracket expression")
    b.add_argument("form")
    b.add_argument("expr")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("form")
    v.add_argument("--suite", action="append", choices=SUITES + ("all",))
    v.add_argument("--height", type=int, default=3)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-len", type=int, default=5)

    e = sub.add_parser("equiv", help="decide equivalence of two forms")
    e.add_argument("form1")
    e.add_argument("form2")
    return p


def load_form(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    q = from_json(doc)
    require_connected_nonnegative(q)
    return q


def load_schema(name):
    text = resources.files("quadlie").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def analyze(q):
    alg = ExtendedAffineLieAlgebra(q)
    out = invariants(q).to_json()
    out["radical"] = radical_data(q).to_json()
    out["gauge"] = alg.gauge.to_json()
    return out


def roots(q, height):
    rs = enumerate_roots(q, height)
    counts = {k.value: sum(r.kind is k for r in rs) for k in RootKind}
    return {"height": height, "roots": [r.to_json() for r in rs], "counts": counts}


def bracket(q, expr):
    alg = ExtendedAffineLieAlgebra(q)
    return serre.eval_word(alg, expr).to_json()


def verify(q, suites, height=3, samples=1000, seed=0, max_len=5):
    if not suites or "all" in suites:
        suites = list(SUITES)
    if height < 0 or samples < 0:
        raise InvalidInput("height and samples must be nonnegative")
    alg = ExtendedAffineLieAlgebra(q)
    runs = {
        "ears": lambda: [check_ears(q, height)],
        "signs": lambda: [check_sign_lemma(q, alg.gauge, height, samples, seed)],
        "jacobi": lambda: [eala.check_jacobi(alg, height, samples, seed),
                           eala.check_grading(alg, min(height, 2))],
        "form": lambda: [eala.check_form(alg, height)],
        "nilpotent": lambda: [eala.check_local_nilpotency(alg, height)],
        "ideal": lambda: [eala.check_ideal_witness(alg, height)],
        "irreducible": lambda: [eala.check_irreducible(alg, height)],
        "serre": lambda: [serre.check_serre(alg, max_len), serre.check_generation(alg, min(height, 2))],
    }
    selected = [s for s in SUITES if s in suites]
    report = VerificationReport(
        "+".join(selected), q, gauge=alg.gauge,
        params={"height": height, "samples": samples, "seed": seed, "max_len": max_len},
    )
    for name in selected:
        for sub in runs[name]():
            report.extend(sub, prefix=sub.suite)
    return report


def equiv(q1, q2):
    return {"equivalent": are_equivalent(q1, q2), "invariants": [invariants(q1).to_json(), invariants(q2).to_json()]}


def _emit(obj):
    sys.stdout.write(json.dumps(obj) + "\n")


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.command == "analyze":
            _emit(analyze(load_form(args.form)))
        elif args.command == "roots":
            if args.height < 0:
                raise InvalidInput("height must be nonnegative")
            _emit(roots(load_form(args.form), args.height))
        elif args.command == "bracket":
            _emit(bracket(load_form(args.form), args.expr))
        elif args.command == "verify":
            rep = verify(load_form(args.form), args.suite, args.height, args.samples, args.seed, args.max_len)
            _emit(rep.to_json())
            print(rep.summary(), file=sys.stderr)
            return 0 if rep.passed else 1
        elif args.command == "equiv":
            _emit(equiv(load_form(args.form1), load_form(args.form2)))
    except QuadlieError as exc:
        _emit({"error": exc.code, "detail": str(exc)})
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
