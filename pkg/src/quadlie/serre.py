"""Generators, bracket words and the generalized Serre relations inside E(q).

Bracket words use the grammar::

    expr := atom | "[" expr "," expr "]"
    atom := "f" SIGN INT | "h" INT | "e[" INTLIST "]"
          | "pi[" INTLIST "](" INTLIST ")" | "xi[" INT "]"

e.g. ``[f+1,[f+1,f-2]]`` or ``[pi[1,1](1,0),e[0,1]]``.  The sign of ``f`` may
be omitted and defaults to ``+``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, IndexOutOfRange, MalformedWord, NotARoot
from .report import VerificationReport
from .roots import kind_of


@dataclass(frozen=True)
class Gen:
    """``f_{+i}``, ``f_{-i}`` (sign +1/-1) or ``h_i`` (sign 0); 1-based index."""

    sign: int
    index: int

    def __str__(self):
        if self.sign == 0:
            return f"h{self.index}"
        return f"f{'+' if self.sign > 0 else '-'}{self.index}"


@dataclass(frozen=True)
class E:
    vec: tuple

    def __str__(self):
        return f"e[{','.join(map(str, self.vec))}]"


@dataclass(frozen=True)
class Pi:
    sigma: tuple
    v: tuple

    def __str__(self):
        return f"pi[{','.join(map(str, self.sigma))}]({','.join(map(str, self.v))})"


@dataclass(frozen=True)
class Xi:
    index: int

    def __str__(self):
        return f"xi[{self.index}]"


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object

    def __str__(self):
        return f"[{self.left},{self.right}]"


_TOKEN = re.compile(r"\s*(?:(pi\[|xi\[|e\[|\]\(|[\[\],()fh])|([+-]?\d+)|([+-]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise MalformedWord(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        sym, num, sign = m.groups()
        out.append(("sym", sym) if sym else ("int", int(num)) if num else ("sign", sign))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise MalformedWord(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok[1]

    def intlist(self):
        vals = [self.take("int")]
        while self.peek() == ("sym", ","):
            self.take()
            vals.append(self.take("int"))
        return tuple(vals)

    def expr(self):
        tok = self.peek()
        if tok == ("sym", "["):
            self.take()
            left = self.expr()
            self.take("sym", ",")
            right = self.expr()
            self.take("sym", "]")
            return Bracket(left, right)
        if tok == ("sym", "f"):
            self.take()
            sign = 1
            if self.peek()[0] == "sign":
                sign = 1 if self.take() == "+" else -1
            k = self.take("int")
            if k < 0:
                sign, k = -sign, -k
            return Gen(sign, k)
        if tok == ("sym", "h"):
            self.take()
            return Gen(0, self.take("int"))
        if tok == ("sym", "e["):
            self.take()
            vec = self.intlist()
            self.take("sym", "]")
            return E(vec)
        if tok == ("sym", "pi["):
            self.take()
            sigma = self.intlist()
            self.take("sym", "](")
            v = self.intlist()
            self.take("sym", ")")
            return Pi(sigma, v)
        if tok == ("sym", "xi["):
            self.take()
            k = self.take("int")
            self.take("sym", "]")
            return Xi(k)
        raise MalformedWord(f"unexpected token {tok[1]!r}")


def parse_word(text):
    p = _Parser(text)
    word = p.expr()
    if p.i != len(p.tokens):
        raise MalformedWord(f"trailing input after position {p.i}")
    return word


def word_degree(word, n):
    """Sum of leaf degrees (``h`` and ``xi`` contribute 0)."""
    if isinstance(word, Bracket):
        return tuple(a + b for a, b in zip(word_degree(word.left, n), word_degree(word.right, n)))
    if isinstance(word, Gen):
        return tuple(word.sign * int(i == word.index - 1) for i in range(n))
    if isinstance(word, E):
        return tuple(word.vec)
    if isinstance(word, Pi):
        return tuple(word.sigma)
    return (0,) * n


def generator_image(alg, symbol):
    """``f_{e i} -> e * e_{e c_i}`` and ``h_i -> [e_{c_i}, -e_{-c_i}]``."""
    if isinstance(symbol, str):
        symbol = parse_word(symbol)
    if not isinstance(symbol, Gen):
        raise MalformedWord(f"{symbol} is not a generator symbol")
    if not 1 <= symbol.index <= alg.n:
        raise IndexOutOfRange(f"generator index {symbol.index} not in 1..{alg.n}")
    c = tuple(int(i == symbol.index - 1) for i in range(alg.n))
    if symbol.sign == 0:
        neg = tuple(-t for t in c)
        return alg.bracket(alg.e(c), alg.e(neg, -1))
    s = symbol.sign
    return alg.e(tuple(s * t for t in c), s)


def eval_word(alg, word):
    if isinstance(word, str):
        word = parse_word(word)
    if isinstance(word, Bracket):
        return alg.bracket(eval_word(alg, word.left), eval_word(alg, word.right))
    if isinstance(word, Gen):
        return generator_image(alg, word)
    if isinstance(word, Xi):
        return alg.xi(word.index)
    vec = word.vec if isinstance(word, E) else word.sigma
    if len(vec) != alg.n or (isinstance(word, Pi) and len(word.v) != alg.n):
        raise MalformedWord(f"{word}: vectors must have length {alg.n}")
    if isinstance(word, E):
        return alg.e(vec)
    return alg.pi(word.sigma, word.v)


def check_serre(alg, max_len=5):
    """Relations (G1)-(G3) for all indices and (G-infinity) for left-normed
    words of at most ``max_len`` generators whose degree is not a root."""
    n, q = alg.n, alg.q
    report = VerificationReport("serre", q, gauge=alg.gauge, params={"max_len": max_len})
    h = [generator_image(alg, Gen(0, i)) for i in range(1, n + 1)]
    f = {(s, i): generator_image(alg, Gen(s, i)) for s in (1, -1) for i in range(1, n + 1)}

    bad = [[i + 1, j + 1] for i in range(n) for j in range(n) if alg.bracket(h[i], h[j])]
    report.add("G1", not bad, {"pairs": n * n, "failures": bad})

    bad = []
    for i in range(n):
        for (s, j), fj in f.items():
            if alg.bracket(h[i], fj) != (s * q.C[i][j - 1]) * fj:
                bad.append([i + 1, s, j])
    report.add("G2", not bad, {"cases": 2 * n * n, "failures": bad})

    bad = [i for i in range(1, n + 1) if alg.bracket(f[(1, i)], f[(-1, i)]) != h[i - 1]]
    report.add("G3", not bad, {"cases": n, "failures": bad})

    gens = sorted(f)
    stats = {"evaluated": 0, "out_of_R": 0, "pruned_words": 0}
    bad_inf, bad_deg = [], []

    def walk(word, value, degree, length):
        if length >= 2:
            stats["evaluated"] += 1
            in_R = kind_of(q, degree) is not None
            if not in_R:
                stats["out_of_R"] += 1
                if value:
                    bad_inf.append(word)
            if value and value.degrees != [degree]:
                bad_deg.append(word)
        if length == max_len:
            return
        if not value:
            stats["pruned_words"] += sum(len(gens) ** k for k in range(1, max_len - length + 1))
            return
        for s, i in gens:
            d = tuple(t + s * int(k == i - 1) for k, t in enumerate(degree))
            walk([(s, i)] + word, alg.bracket(f[(s, i)], value), d, length + 1)

    for s, i in gens:
        deg = tuple(s * int(k == i - 1) for k in range(n))
        walk([(s, i)], f[(s, i)], deg, 1)

    def show(word):
        return " ".join(str(Gen(s, i)) for s, i in word)

    report.add("Ginf", not bad_inf, {**stats, "failures": [show(w) for w in bad_inf[:5]]})
    report.add("word-degree", not bad_deg, {"failures": [show(w) for w in bad_deg[:5]]})
    return report


class _Span:
    """Row-reduced spanning set of a subspace of ``Q^d``."""

    def __init__(self):
        self.rows = {}  # pivot -> row with 1 at pivot

    def __len__(self):
        return len(self.rows)

    def add(self, vec):
        v = list(vec)
        for p, row in self.rows.items():
            if v[p]:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            return False
        c = v[piv]
        v = [a / c for a in v]
        for p, row in self.rows.items():
            if row[piv]:
                k = row[piv]
                self.rows[p] = [a - k * b for a, b in zip(row, v)]
        self.rows[piv] = v
        return True


def generated_spans(alg, height, max_depth=None):
    """Per-degree spans of iterated brackets of generator images.

    Left-normed words ``[g_t, [..., g_1]]`` span the subalgebra generated by
    the ``3n`` images; intermediate degrees are confined to max-norm
    ``height + 1``.
    """
    n = alg.n
    if max_depth is None:
        max_depth = 2 * (height + 1) * n
    gens = [generator_image(alg, Gen(s, i)) for s in (1, -1) for i in range(1, n + 1)]
    gens += [generator_image(alg, Gen(0, i)) for i in range(1, n + 1)]
    spans = {}
    frontier = []
    for g in gens:
        for d, c in g.terms.items():
            if spans.setdefault(d, _Span()).add(c):
                frontier.append(alg.homogeneous(d, c))
    depth = 1
    while frontier and depth < max_depth:
        depth += 1
        nxt = []
        for y in frontier:
            for g in gens[: 2 * n]:
                z = alg.bracket(g, y)
                for d, c in z.terms.items():
                    if max(abs(t) for t in d) > height + 1:
                        continue
                    if spans.setdefault(d, _Span()).add(c):
                        nxt.append(alg.homogeneous(d, c))
        frontier = nxt
    return spans, depth


def check_generation(alg, height=2):
    """The generator images span every ``E_a`` (``a != 0``) and the ``Q^n`` part of ``E_0``."""
    from .roots import enumerate_roots

    report = VerificationReport("generation", alg.q, gauge=alg.gauge, params={"height": height})
    spans, depth = generated_spans(alg, height)
    short = []
    for root in enumerate_roots(alg.q, height):
        d = root.vec
        got = len(spans.get(d, ()))
        want = alg.dimension(d) if any(d) else alg.n
        if got != want:
            short.append({"degree": list(d), "span": got, "expected": want})
    zero = spans.get(alg._zero_deg)
    dual_free = zero is not None and all(not any(row[alg.n:]) for row in zero.rows.values())
    report.add("spanning", not short, {"depth": depth, "failures": short[:5]})
    report.add("cartan-part", dual_free, {"note": "xi directions are not generated"})
    return report
