"""Declarative ring corpora: a TOML file of constructor templates and
parameter ranges, expanded deterministically into ring expressions."""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ParseError, ResourceCapExceeded, RingLabError
from .expr import Call, _Evaluator, expr_size, parse_ring_expr
from .invariants import jacobson
from .ring import FiniteRing, SAMPLE_SEED


@dataclass
class Family:
    name: str
    template: str
    params: dict = field(default_factory=dict)
    unordered: bool = False
    max_size: int | None = None


@dataclass
class CorpusSpec:
    families: list[Family] = field(default_factory=list)
    size_cap: int = 4096
    n_range: tuple = (1, 8)
    seed: int = SAMPLE_SEED
    quotients_by_jacobson: bool = True
    source: str = "<inline>"

    @property
    def ns(self) -> list[int]:
        lo, hi = self.n_range
        return list(range(lo, hi + 1))

    def to_dict(self) -> dict:
        return {"source": self.source, "size_cap": self.size_cap,
                "n_range": list(self.n_range), "seed": self.seed,
                "quotients_by_jacobson": self.quotients_by_jacobson,
                "families": [f.name for f in self.families]}


def _config_error(msg: str, source: str) -> ParseError:
    return ParseError(f"{source}: {msg}", code="corpus-config")


def parse_corpus(text: str, source: str = "<inline>") -> CorpusSpec:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"{source}: {e}", line=getattr(e, "lineno", None),
                         column=getattr(e, "colno", None), code="corpus-config") from None
    head = data.get("corpus", {})
    unknown = set(data) - {"corpus", "families"}
    if unknown:
        raise _config_error(f"unknown top-level tables {sorted(unknown)}", source)
    spec = CorpusSpec(
        size_cap=int(head.get("size_cap", 4096)),
        n_range=tuple(head.get("n_range", (1, 8))),
        seed=int(head.get("seed", SAMPLE_SEED)),
        quotients_by_jacobson=bool(head.get("quotients_by_jacobson", True)),
        source=source,
    )
    if len(spec.n_range) != 2 or spec.n_range[0] < 1 or spec.n_range[1] < spec.n_range[0]:
        raise _config_error(f"n_range must be [lo, hi] with 1 <= lo <= hi, got {list(spec.n_range)}", source)
    for name, body in data.get("families", {}).items():
        if "template" not in body:
            raise _config_error(f"family {name!r} has no template", source)
        spec.families.append(Family(name, body["template"], dict(body.get("params", {})),
                                    bool(body.get("unordered", False)), body.get("max_size")))
    return spec


def load_corpus(path: str | Path) -> CorpusSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read corpus file {path}: {e.strerror}", code="corpus-config") from None
    return parse_corpus(text, source=str(path))


def default_corpus_spec() -> CorpusSpec:
    text = resources.files("ringlab").joinpath("data/default_corpus.toml").read_text(encoding="utf-8")
    return parse_corpus(text, source="default")


def _param_values(spec: CorpusSpec, fam: Family, pname: str, p, expanded: dict) -> list[str]:
    if isinstance(p, list):
        if len(p) != 2 or not all(isinstance(x, int) for x in p):
            raise _config_error(f"{fam.name}.{pname}: a range must be [lo, hi]", spec.source)
        return [str(v) for v in range(p[0], p[1] + 1)]
    if isinstance(p, dict) and "values" in p:
        return [str(v) for v in p["values"]]
    if isinstance(p, dict) and "family" in p:
        refs = p["family"] if isinstance(p["family"], list) else [p["family"]]
        out = []
        for r in refs:
            if r not in expanded:
                raise _config_error(f"{fam.name}.{pname}: family {r!r} is not defined earlier", spec.source)
            out.extend(expanded[r])
        return out
    raise _config_error(f"{fam.name}.{pname}: unsupported parameter {p!r}", spec.source)


def expand(spec: CorpusSpec) -> list[Call]:
    """Base expressions of the corpus in expansion order, deduplicated by
    their canonical text.  Quotients by J are added while running (see
    :func:`iter_rings`) since they depend on the evaluated ring."""
    expanded: dict[str, list[str]] = {}
    seen: set[str] = set()
    out: list[Call] = []
    for fam in spec.families:
        names = sorted(fam.params)
        lists = [_param_values(spec, fam, n, fam.params[n], expanded) for n in names]
        texts = []
        for idx in itertools.product(*(range(len(v)) for v in lists)):
            if fam.unordered and any(a > b for a, b in zip(idx, idx[1:])):
                continue
            values = {n: lists[k][i] for k, (n, i) in enumerate(zip(names, idx))}
            try:
                node = parse_ring_expr(fam.template.format(**values))
            except KeyError as e:
                raise _config_error(f"{fam.name}: template uses unknown parameter {e}", spec.source) from None
            except ParseError as e:
                raise _config_error(f"{fam.name}: {e.message}", spec.source) from None
            size = expr_size(node)
            cap = min(spec.size_cap, fam.max_size or spec.size_cap)
            if size is not None and size > cap:
                continue
            text = str(node)
            texts.append(text)
            if text not in seen:
                seen.add(text)
                out.append(node)
        expanded[fam.name] = texts
    return out


@dataclass
class RingEntry:
    """One corpus ring with the evaluator that built it, so sub-expressions
    resolve to the very objects used in the construction."""
    expr: Call
    ring: FiniteRing
    evaluator: _Evaluator

    @property
    def text(self) -> str:
        return str(self.expr)

    def sub(self, node: Call) -> FiniteRing:
        return self.evaluator.ring(node)


@dataclass
class SkippedRing:
    text: str
    error: dict


def entries_for(node: Call, quotients: bool = True) -> Iterator[RingEntry | SkippedRing]:
    """The ring for ``node`` and, when J is nonzero, its quotient by J."""
    ev = _Evaluator()
    try:
        R = ev.ring(node)
    except RingLabError as e:
        yield SkippedRing(str(node), e.to_dict())
        return
    yield RingEntry(node, R, ev)
    if quotients and R.has_tables and len(jacobson(R)) > 1:
        q = Call("Quot", (node,))
        yield RingEntry(q, ev.ring(q), ev)


def iter_rings(spec: CorpusSpec | list) -> Iterator[RingEntry | SkippedRing]:
    nodes = expand(spec) if isinstance(spec, CorpusSpec) else [
        parse_ring_expr(x) if isinstance(x, str) else x for x in spec]
    quotients = spec.quotients_by_jacobson if isinstance(spec, CorpusSpec) else False
    for node in nodes:
        yield from entries_for(node, quotients)


def default_corpus() -> list[Call]:
    """Every ring expression of the default corpus, quotients by J included.
    Deciding which quotients are proper evaluates the rings."""
    return [e.expr for e in iter_rings(default_corpus_spec()) if isinstance(e, RingEntry)]
