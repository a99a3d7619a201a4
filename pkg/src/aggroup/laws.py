"""Equational laws and quasi-identities over finite groupoids.

Grammar::

    law    := [eq {"," eq} "=>"] term "=" term {"=" term}
    eq     := term "=" term
    term   := factor {"*" factor}          (left associative)
    factor := ident | "e" | "inv" "(" term ")" | "(" term ")"
    ident  := letter {letter | digit}      ("e" and "inv" are reserved)

A law holds when every assignment of its variables that satisfies all
premises makes each adjacent pair of the conclusion chain equal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Sequence, Union

from .core import AGGroup
from .tables import CayleyTable


class LawSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class EvaluationError(ValueError):
    pass


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Ident:
    pass


@dataclass(frozen=True)
class Inv:
    arg: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Var, Ident, Inv, Mul]


def term_vars(t: Term, acc: Optional[set] = None) -> set[str]:
    acc = set() if acc is None else acc
    if isinstance(t, Var):
        acc.add(t.name)
    elif isinstance(t, Inv):
        term_vars(t.arg, acc)
    elif isinstance(t, Mul):
        term_vars(t.left, acc)
        term_vars(t.right, acc)
    return acc


def _uses(t: Term, kind) -> bool:
    if isinstance(t, kind):
        return True
    if isinstance(t, Inv):
        return _uses(t.arg, kind)
    if isinstance(t, Mul):
        return _uses(t.left, kind) or _uses(t.right, kind)
    return False


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Ident):
        return "e"
    if isinstance(t, Inv):
        return f"inv({format_term(t.arg)})"
    left = format_term(t.left)
    right = format_term(t.right)
    if isinstance(t.right, Mul):
        right = f"({right})"
    return f"{left}*{right}"


@dataclass(frozen=True)
class Law:
    premises: tuple[tuple[Term, Term], ...]
    chain: tuple[Term, ...]

    def __post_init__(self):
        if len(self.chain) < 2:
            raise ValueError("a law needs at least two terms in its conclusion")

    @property
    def variables(self) -> tuple[str, ...]:
        """Sorted variable names; assignments enumerate in this order."""
        acc: set[str] = set()
        for lhs, rhs in self.premises:
            term_vars(lhs, acc)
            term_vars(rhs, acc)
        for t in self.chain:
            term_vars(t, acc)
        return tuple(sorted(acc))

    def terms(self):
        for lhs, rhs in self.premises:
            yield lhs
            yield rhs
        yield from self.chain

    def __str__(self) -> str:
        return format_law(self)


def format_law(law: Law) -> str:
    conclusion = " = ".join(format_term(t) for t in law.chain)
    if not law.premises:
        return conclusion
    prem = ", ".join(f"{format_term(a)} = {format_term(b)}" for a, b in law.premises)
    return f"{prem} => {conclusion}"


# -- parser ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(=>)|([A-Za-z][A-Za-z0-9]*)|([*=(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise LawSyntaxError(f"unknown token {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("=>", "=>", start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            toks.append((m.group(3), m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise LawSyntaxError(f"expected {want}, got {got}", tok[2], self.text)
        self.i += 1
        return tok

    def law(self) -> Law:
        premises = []
        while True:
            start = self.peek()[2]
            chain = self.chain()
            kind = self.peek()[0]
            if kind in (",", "=>"):
                if len(chain) != 2:
                    raise LawSyntaxError("a premise must be a single equation", start, self.text)
                premises.append((chain[0], chain[1]))
                self.i += 1
                if kind == "=>":
                    start = self.peek()[2]
                    chain = self.chain()
                    self.take("end")
                    break
            else:
                self.take("end")
                break
        if len(chain) < 2:
            raise LawSyntaxError("a law needs at least one '='", start, self.text)
        return Law(tuple(premises), tuple(chain))

    def chain(self) -> list[Term]:
        terms = [self.term()]
        while self.peek()[0] == "=":
            self.i += 1
            terms.append(self.term())
        return terms

    def term(self) -> Term:
        t = self.factor()
        while self.peek()[0] == "*":
            self.i += 1
            t = Mul(t, self.factor())
        return t

    def factor(self) -> Term:
        kind, val, pos = self.peek()
        if kind == "(":
            self.i += 1
            t = self.term()
            self.take(")")
            return t
        if kind == "name":
            self.i += 1
            if val == "e":
                return Ident()
            if val == "inv":
                self.take("(")
                t = self.term()
                self.take(")")
                return Inv(t)
            return Var(val)
        got = "end of input" if kind == "end" else repr(val)
        raise LawSyntaxError(f"expected a term, got {got}", pos, self.text)


def parse_law(text: str) -> Law:
    return _Parser(text).law()


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.take("end")
    return t


# -- evaluation ----------------------------------------------------------------

@dataclass(frozen=True)
class Model:
    """A table plus whatever of identity/inverse map is available."""

    table: CayleyTable
    identity: Optional[int] = None
    inverse: Optional[tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return self.table.order


def as_model(g) -> Model:
    if isinstance(g, Model):
        return g
    if isinstance(g, AGGroup):
        return Model(g.table, g.identity, g.inverse)
    if isinstance(g, CayleyTable):
        return Model(g)
    raise TypeError(f"cannot evaluate over {type(g).__name__}")


def _require(model: Model, t: Term):
    if model.identity is None and _uses(t, Ident):
        raise EvaluationError("'e' used on a table without an identity")
    if model.inverse is None and _uses(t, Inv):
        raise EvaluationError("inv() used on a table without an inverse map")


def evaluate(term: Term, g, assignment: dict[str, int]) -> int:
    model = as_model(g)
    _require(model, term)
    m = model.table.entries

    def ev(t):
        if isinstance(t, Var):
            try:
                return assignment[t.name]
            except KeyError:
                raise EvaluationError(f"unbound variable {t.name!r}") from None
        if isinstance(t, Ident):
            return model.identity
        if isinstance(t, Inv):
            return model.inverse[ev(t.arg)]
        return m[ev(t.left)][ev(t.right)]

    return ev(term)


def _compile(t: Term, model: Model, slots: dict[str, int]) -> Callable[[Sequence[int]], int]:
    m = model.table.entries
    if isinstance(t, Var):
        k = slots[t.name]
        return lambda v: v[k]
    if isinstance(t, Ident):
        e = model.identity
        return lambda v: e
    if isinstance(t, Inv):
        inv = model.inverse
        f = _compile(t.arg, model, slots)
        return lambda v: inv[f(v)]
    f = _compile(t.left, model, slots)
    g = _compile(t.right, model, slots)
    return lambda v: m[f(v)][g(v)]


def check_law(law: Law, g) -> Optional[dict[str, int]]:
    """``None`` if the law holds, else the least counterexample assignment."""
    model = as_model(g)
    for t in law.terms():
        _require(model, t)
    names = law.variables
    slots = {name: i for i, name in enumerate(names)}
    prem = [(_compile(a, model, slots), _compile(b, model, slots)) for a, b in law.premises]
    chain = [_compile(t, model, slots) for t in law.chain]
    for values in product(range(model.order), repeat=len(names)):
        if any(a(values) != b(values) for a, b in prem):
            continue
        results = [f(values) for f in chain]
        if any(x != y for x, y in zip(results, results[1:])):
            return dict(zip(names, values))
    return None


# -- builtin suite ------------------------------------------------------------

# (name, [(variant label, law text), ...]); fully parenthesised.
_BUILTIN = [
    ("left-invertive", [("", "(a*b)*c = (c*b)*a")]),
    ("medial", [("", "(a*b)*(c*d) = (a*c)*(b*d)")]),
    ("ii", [("", "a*b = c*d => b*a = d*c")]),
    ("iii", [("", "a*(b*c) = b*(a*c)")]),
    ("paramedial", [("", "(a*b)*(c*d) = (d*b)*(c*a)")]),
    ("v", [("", "(a*b)*(c*d) = (d*c)*(b*a)")]),
    ("vi", [("", "a*b = c*d => inv(d)*b = c*inv(a)")]),
    (
        "vii",
        [
            ("designated-e", "a*e = a => e*a = a"),
            # f a right identity: its defining equation x*f = x taken at x = e.
            ("arbitrary-witness", "e*f = e => f*a = a"),
        ],
    ),
    ("viii", [("", "a*b = e => b*a = e")]),
    ("ix", [("", "inv(a*b) = inv(a)*inv(b)")]),
    ("x", [("", "a*(b*(c*d)) = a*(c*(b*d)) = b*(a*(c*d)) = b*(c*(a*d)) = c*(a*(b*d)) = c*(b*(a*d))")]),
    ("xi", [("", "a*((b*c)*d) = c*((b*a)*d)")]),
    ("xii", [("", "(a*(b*c))*d = (a*(d*c))*b")]),
    ("xiii", [("", "((a*b)*c)*d = a*((b*c)*d)")]),
]

# Right identity read element-wise (a*f = a for a single a).  This is NOT a
# law of AG-groups; it is kept so the difference can be demonstrated.
VII_POINTWISE = "a*f = a => f*a = a"

_AXIOMS = [
    ("left-invertive", [("", "(a*b)*c = (c*b)*a")]),
    ("left-identity", [("", "e*a = a")]),
    ("inverse", [("", "inv(a)*a = a*inv(a) = e")]),
]


@dataclass(frozen=True)
class LawForm:
    label: str
    text: str
    law: Law


@dataclass(frozen=True)
class NamedLaw:
    name: str
    forms: tuple[LawForm, ...]

    @classmethod
    def from_text(cls, name: str, text: str) -> "NamedLaw":
        return cls(name, (LawForm("", text, parse_law(text)),))


def _named(entries) -> list[NamedLaw]:
    return [
        NamedLaw(name, tuple(LawForm(label, text, parse_law(text)) for label, text in forms))
        for name, forms in entries
    ]


def builtin_laws() -> list[NamedLaw]:
    return _named(_BUILTIN)


def axiom_laws() -> list[NamedLaw]:
    """The defining axioms as laws; the last two need e and inv."""
    return _named(_AXIOMS)


@dataclass
class LawResult:
    name: str
    label: str
    text: str
    counterexample: Optional[dict[str, int]]

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        d = {"name": self.name, "law": self.text, "status": "pass" if self.holds else "fail"}
        if self.label:
            d["variant"] = self.label
        if not self.holds:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class SuiteReport:
    results: list[LawResult]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.holds]

    def to_dict(self) -> dict:
        return {"status": "pass" if self.ok else "fail", "laws": [r.to_dict() for r in self.results]}


def run_suite(g, suite: Optional[list[NamedLaw]] = None) -> SuiteReport:
    """Check every form of every law; one result per form."""
    suite = builtin_laws() if suite is None else suite
    return SuiteReport(
        [LawResult(nl.name, f.label, f.text, check_law(f.law, g)) for nl in suite for f in nl.forms]
    )
