"""Boolean formulas over predicate names, and corpus search.

Grammar::

    formula := disj
    disj    := conj (("|" | "∨" | "or") conj)*
    conj    := neg (("&" | "∧" | "and") neg)*
    neg     := ("!" | "~" | "¬" | "not") neg | atom
    atom    := "(" formula ")" | name ["(" integer ")"]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .corpus import CorpusSpec, RingEntry, iter_rings
from .errors import ParseError
from .expr import Call
from .predicates import lookup
from .ring import FiniteRing

_TOKEN = re.compile(r"\s*(?:(?P<op>[()&|!~∧∨¬])|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_\-]*))")
_WORDS = {"and": "&", "or": "|", "not": "!"}
_SYMBOLS = {"∧": "&", "∨": "|", "¬": "!", "~": "!"}


@dataclass(frozen=True)
class Atom:
    name: str
    arg: int | None = None

    def __str__(self):
        return self.name if self.arg is None else f"{self.name}({self.arg})"


@dataclass(frozen=True)
class Not:
    body: object

    def __str__(self):
        return f"!{self.body}"


@dataclass(frozen=True)
class And:
    parts: tuple

    def __str__(self):
        return "(" + " & ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Or:
    parts: tuple

    def __str__(self):
        return "(" + " | ".join(map(str, self.parts)) + ")"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r} in formula", line=1, column=col)
        col = m.start(m.lastgroup) + 1
        kind, val = m.lastgroup, m.group(m.lastgroup)
        if kind == "name" and val.lower() in _WORDS:
            kind, val = "op", _WORDS[val.lower()]
        elif kind == "op":
            val = _SYMBOLS.get(val, val)
        out.append((kind, val, col))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _FormulaParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, val=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (val and tok[1] != val):
            want = repr(val) if val else kind
            got = "end of formula" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", line=1, column=tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.disj()
        self.take("end")
        return node

    def disj(self):
        parts = [self.conj()]
        while self.peek()[1] == "|":
            self.take()
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.neg()]
        while self.peek()[1] == "&":
            self.take()
            parts.append(self.neg())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def neg(self):
        if self.peek()[1] == "!":
            self.take()
            return Not(self.neg())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok[1] == "(" and tok[0] == "op":
            self.take()
            node = self.disj()
            self.take("op", ")")
            return node
        _, name, col = self.take("name")
        try:
            spec = lookup(name)
        except KeyError:
            raise ParseError(f"unknown predicate {name!r}", line=1, column=col, code="unknown-name") from None
        arg = None
        if self.peek()[1] == "(":
            self.take()
            arg = int(self.take("int")[1])
            self.take("op", ")")
        if (arg is None) != (spec.param is None):
            need = f"needs the parameter {spec.param}" if spec.param else "takes no parameter"
            raise ParseError(f"predicate {spec.name} {need}", line=1, column=col, code="arity")
        return Atom(spec.name, arg)


def parse_formula(text: str):
    return _FormulaParser(text).parse()


def evaluate(node, R: FiniteRing) -> bool:
    if isinstance(node, Atom):
        return lookup(node.name)(R, node.arg).value
    if isinstance(node, Not):
        return not evaluate(node.body, R)
    if isinstance(node, And):
        return all(evaluate(p, R) for p in node.parts)
    return any(evaluate(p, R) for p in node.parts)


def search_counterexamples(corpus: CorpusSpec | Iterable, formula: str, limit: int | None = None) -> list[Call]:
    """Corpus rings satisfying ``formula``, in corpus order."""
    node = parse_formula(formula)
    hits = []
    for e in iter_rings(corpus if isinstance(corpus, CorpusSpec) else list(corpus)):
        if isinstance(e, RingEntry) and evaluate(node, e.ring):
            hits.append(e.expr)
            if limit is not None and len(hits) >= limit:
                break
    return hits
