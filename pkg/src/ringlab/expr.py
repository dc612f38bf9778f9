"""The ring-expression language: AST, parser, printer and evaluator.

    expr    := name "(" args ")"
    args    := (arg ("," arg)*)?
    arg     := integer | expr | group | "#" integer | "id" | "frob" | "endo" "#" integer
    group   := "C" "(" integer ")" ("x" "C" "(" integer ")")*

Printing an AST gives the canonical text, and parsing that text gives back an
equal AST.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from . import constructors as C
from .errors import ConstructionError, ParseError, RingLabError
from .invariants import jacobson
from .ring import FiniteRing, corner, ideal_generated, quotient

Pos = tuple  # (line, column), both 1-based


@dataclass(frozen=True)
class Num:
    value: int
    pos: Pos = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Elem:
    id: int
    pos: Pos = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return f"#{self.id}"


@dataclass(frozen=True)
class Endo:
    name: str  # "id", "frob" or "endo"
    index: int | None = None
    pos: Pos = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return f"endo#{self.index}" if self.name == "endo" else self.name


@dataclass(frozen=True)
class Group:
    orders: tuple
    pos: Pos = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return "x".join(f"C({n})" for n in self.orders)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: Pos = field(default=(1, 1), compare=False, repr=False)

    def __str__(self):
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


RingExpr = Call

# argument kinds: int, ring, group, elem, endo, scalar (int or elem)
SIGNATURES: dict[str, list[tuple]] = {
    "Zmod": [("int",)],
    "GF": [("int",), ("int", "int")],
    "Prod": [("ring", "...")],
    "Mat": [("int", "ring")],
    "UT": [("int", "ring")],
    "SkewUT": [("int", "ring"), ("int", "ring", "endo")],
    "Triv": [("ring",)],
    "DT": [("ring",)],
    "PolyQ": [("ring", "int"), ("ring", "endo", "int")],
    "GrpRing": [("ring", "group")],
    "FTri": [("ring", "ring"), ("ring", "ring", "int")],
    "Ks": [("ring", "scalar")],
    "Mns": [("int", "ring", "scalar")],
    "TrivMorita": [("ring", "ring"), ("ring", "ring", "int")],
    "Quot": [("ring", "elem...")],
    "Corner": [("ring", "elem")],
}


def _kind(arg) -> str:
    return {Num: "int", Call: "ring", Group: "group", Elem: "elem", Endo: "endo"}[type(arg)]


def _matches(sig: tuple, kinds: list[str]) -> bool:
    """A trailing "kind..." repeats zero or more times; a bare "..." repeats
    the kind before it."""
    if sig[-1].endswith("..."):
        head = sig[:-1]
        rest = sig[-1][:-3] or sig[-2]
        return (len(kinds) >= len(head)
                and all(_fits(s, k) for s, k in zip(head, kinds))
                and all(_fits(rest, k) for k in kinds[len(head):]))
    return len(sig) == len(kinds) and all(_fits(s, k) for s, k in zip(sig, kinds))


def _fits(expected: str, kind: str) -> bool:
    return expected == kind or (expected == "scalar" and kind in ("int", "elem"))


def _describe(sig: tuple) -> str:
    return ", ".join("..." if s == "..." else (s[:-3] + ", ..." if s.endswith("...") else s)
                     for s in sig)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    # -- positions --------------------------------------------------------
    def pos_of(self, i: int) -> Pos:
        line = self.text.count("\n", 0, i) + 1
        col = i - (self.text.rfind("\n", 0, i) + 1) + 1
        return (line, col)

    def error(self, message: str, i: int | None = None, code: str = "syntax") -> ParseError:
        line, col = self.pos_of(self.i if i is None else i)
        return ParseError(message, line=line, column=col, code=code)

    # -- lexing helpers ---------------------------------------------------
    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def describe_here(self) -> str:
        c = self.peek()
        return "end of input" if not c else repr(c)

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r} but found {self.describe_here()}")
        self.i += 1

    def ident(self) -> tuple[str, int]:
        self.skip()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
            if self.i == start and self.text[self.i].isdigit():
                break
            self.i += 1
        if self.i == start:
            raise self.error(f"expected a name but found {self.describe_here()}")
        return self.text[start:self.i], start

    def integer(self) -> tuple[int, int]:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise self.error(f"expected an integer but found {self.describe_here()}")
        return int(self.text[start:self.i]), start

    # -- grammar ----------------------------------------------------------
    def parse(self) -> Call:
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.describe_here()} after the expression")
        return node

    def expr(self) -> Call:
        name, start = self.ident()
        if name not in SIGNATURES:
            raise self.error(f"unknown constructor {name!r}", start, code="unknown-name")
        self.expect("(")
        args = []
        if self.peek() != ")":
            args.append(self.arg())
            while self.peek() == ",":
                self.i += 1
                args.append(self.arg())
        if self.peek() != ")":
            raise self.error(f"expected ',' or ')' but found {self.describe_here()}")
        self.i += 1
        node = Call(name, tuple(args), self.pos_of(start))
        kinds = [_kind(a) for a in args]
        if not any(_matches(sig, kinds) for sig in SIGNATURES[name]):
            wanted = " or ".join(f"{name}({_describe(s)})" for s in SIGNATURES[name])
            got = f"{name}({', '.join(kinds)})"
            raise self.error(f"wrong arguments: got {got}, expected {wanted}", start, code="arity")
        return node

    def arg(self):
        c = self.peek()
        start = self.i
        if c.isdigit():
            v, _ = self.integer()
            return Num(v, self.pos_of(start))
        if c == "#":
            self.i += 1
            v, _ = self.integer()
            return Elem(v, self.pos_of(start))
        if not (c.isalpha() or c == "_"):
            raise self.error(f"expected an argument but found {self.describe_here()}")
        name, start = self.ident()
        if name == "C" and self.peek() == "(":
            self.i = start
            return self.group()
        if name in ("id", "frob"):
            return Endo(name, None, self.pos_of(start))
        if name == "endo":
            self.expect("#")
            v, _ = self.integer()
            return Endo("endo", v, self.pos_of(start))
        self.i = start
        return self.expr()

    def group(self) -> Group:
        self.skip()
        start = self.i
        orders = [self.cyclic()]
        while True:
            save = self.i
            self.skip()
            if self.text.startswith("x", self.i):
                self.i += 1
                if self.peek() == "C":
                    orders.append(self.cyclic())
                    continue
            self.i = save
            break
        return Group(tuple(orders), self.pos_of(start))

    def cyclic(self) -> int:
        name, start = self.ident()
        if name != "C":
            raise self.error(f"expected a cyclic group C(n) but found {name!r}", start)
        self.expect("(")
        n, at = self.integer()
        if n < 1:
            raise self.error("a cyclic group needs order at least 1", at)
        self.expect(")")
        return n


def parse_ring_expr(text: str) -> Call:
    """Parse ring-expression text into an AST, raising ParseError with the
    line and column of the first problem."""
    if not isinstance(text, str):
        raise ParseError("expression must be text")
    return _Parser(text).parse()


def print_expr(node) -> str:
    return str(node)


def expr_size(node) -> int | None:
    """Element count implied by the expression alone, or None when it depends
    on evaluation (quotients, corners)."""
    if not isinstance(node, Call):
        return None
    a = node.args
    sz = [expr_size(x) if isinstance(x, Call) else None for x in a]
    n = node.name
    try:
        if n == "Zmod":
            return a[0].value
        if n == "GF":
            return a[0].value ** (a[1].value if len(a) > 1 else 1)
        if n == "Prod":
            return prod(sz)
        if n == "Mat":
            return sz[1] ** (a[0].value ** 2)
        if n == "UT":
            k = a[0].value
            return sz[1] ** (k * (k + 1) // 2)
        if n == "SkewUT":
            return sz[1] ** a[0].value
        if n == "Triv":
            return sz[0] ** 2
        if n == "DT":
            return sz[0] ** 4
        if n == "PolyQ":
            return sz[0] ** a[-1].value
        if n == "GrpRing":
            return sz[0] ** prod(a[1].orders)
        if n == "FTri":
            r, s = sz[0], sz[1]
            return r * s * (r if _regular_module(node) else 1)
        if n == "Ks":
            return sz[0] ** 4
        if n == "Mns":
            return sz[1] ** (a[0].value ** 2)
        if n == "TrivMorita":
            r, s = sz[0], sz[1]
            return r * s * (r * s if _regular_module(node) else 1)
    except TypeError:
        return None
    return None


def _regular_module(node: Call) -> bool:
    """FTri / TrivMorita use the regular bimodule when both rings are the same
    expression, unless the optional flag says otherwise."""
    same = node.args[0] == node.args[1]
    if len(node.args) == 3:
        flag = node.args[2].value
        if flag not in (0, 1):
            raise ConstructionError(f"{node.name} flag must be 0 (zero module) or 1 (regular module)")
        if flag == 1 and not same:
            raise ConstructionError(f"{node.name} with the regular module needs equal rings")
        return flag == 1
    return same


class _Evaluator:
    def __init__(self):
        self.memo: dict[str, FiniteRing] = {}

    def fail(self, node, message: str, cls=ConstructionError):
        line, col = getattr(node, "pos", (None, None))
        where = f" at line {line}, column {col}" if line is not None else ""
        return cls(message + where, line=line, column=col)

    def ring(self, node: Call) -> FiniteRing:
        key = str(node)
        if key not in self.memo:
            try:
                R = self.build(node)
            except RingLabError as e:
                if "line" in e.details:
                    raise
                line, col = node.pos
                e.details.update(line=line, column=col)
                e.message += f" at line {line}, column {col}"
                e.args = (e.message,)
                raise
            if R.size == 1 and node.name != "Corner":
                raise self.fail(node, f"{key} is the zero ring")
            self.memo[key] = R
        return self.memo[key]

    def elem(self, R: FiniteRing, a) -> int:
        if isinstance(a, Num):
            return R.times(a.value, R.one)
        if not 0 <= a.id < R.size:
            raise self.fail(a, f"element #{a.id} is out of range for {R.name} (size {R.size})")
        return a.id

    def endo(self, R: FiniteRing, e: Endo) -> C.Endomorphism:
        if e.name == "id":
            return C.identity_endomorphism(R)
        if e.name == "frob":
            return C.frobenius(R)
        ends = C.endomorphisms(R)
        if not 0 <= e.index < len(ends):
            raise self.fail(e, f"{R.name} has {len(ends)} endomorphisms; endo#{e.index} does not exist")
        return ends[e.index]

    def build(self, node: Call) -> FiniteRing:
        n, a, key = node.name, node.args, str(node)
        rings = [self.ring(x) if isinstance(x, Call) else None for x in a]
        if n == "Zmod":
            return C.zmod(a[0].value, provenance=node)
        if n == "GF":
            if len(a) == 2:
                return C.gf(a[0].value, a[1].value, provenance=node)
            pk = C.prime_power(a[0].value)
            if pk is None:
                raise self.fail(a[0], f"GF({a[0].value}): order is not a prime power")
            return C.gf(*pk, provenance=node)
        if n == "Prod":
            return C.product(rings, provenance=node)
        if n == "Mat":
            return C.matrix(a[0].value, rings[1], provenance=node)
        if n == "UT":
            return C.upper_triangular(a[0].value, rings[1], provenance=node)
        if n == "SkewUT":
            R = rings[1]
            alpha = self.endo(R, a[2]) if len(a) == 3 else None
            return C.skew_triangular(a[0].value, R, alpha, provenance=node)
        if n == "Triv":
            return C.trivial_extension(rings[0], provenance=node)
        if n == "DT":
            return C.dt(rings[0], provenance=node)
        if n == "PolyQ":
            R = rings[0]
            alpha = self.endo(R, a[1]) if len(a) == 3 else None
            if a[-1].value < 1:
                raise self.fail(a[-1], "PolyQ needs n >= 1")
            return C.poly_quot(R, alpha, a[-1].value, provenance=node)
        if n == "GrpRing":
            G = C.cyclic_group(a[1].orders[0])
            for k in a[1].orders[1:]:
                G = C.direct_product_group(G, C.cyclic_group(k))
            return C.group_ring(rings[0], G, provenance=node)
        if n == "FTri":
            R, S = rings[0], rings[1]
            M = C.regular_bimodule(R) if _regular_module(node) else C.zero_bimodule(R, S)
            return C.formal_triangular(R, S, M, provenance=node)
        if n == "Ks":
            R = rings[0]
            return C.k_s(R, self.elem(R, a[1]), provenance=node)
        if n == "Mns":
            R = rings[1]
            return C.m_n_s(a[0].value, R, self.elem(R, a[2]), provenance=node)
        if n == "TrivMorita":
            A, B = rings[0], rings[1]
            if _regular_module(node):
                M, N = C.regular_bimodule(A), C.regular_bimodule(B)
            else:
                M, N = C.zero_bimodule(A, B), C.zero_bimodule(B, A)
            return C.trivial_morita(A, B, M, N, provenance=node)
        if n == "Quot":
            R = rings[0]
            if len(a) == 1:
                I = jacobson(R)
            else:
                I = ideal_generated(R, [self.elem(R, x) for x in a[1:]])
            return quotient(R, I, provenance=node)[0]
        if n == "Corner":
            R = rings[0]
            return corner(R, self.elem(R, a[1]), provenance=node)
        raise self.fail(node, f"unknown constructor {n!r}")  # pragma: no cover


def eval_expr(expr) -> FiniteRing:
    """Build the ring described by an AST or expression text.  A zero ring is
    rejected as a result."""
    node = parse_ring_expr(expr) if isinstance(expr, str) else expr
    R = _Evaluator().ring(node)
    if R.size == 1:
        raise ConstructionError(f"{node} is the zero ring")
    return R
