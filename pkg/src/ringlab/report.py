"""Canonical JSON reports: sorted keys, two-space indent, trailing newline."""

from __future__ import annotations

import json
import time
from pathlib import Path

from . import __version__
from .corpus import CorpusSpec
from .invariants import (
    center,
    delta,
    delta_u_exponent,
    idempotents,
    jacobson,
    nilpotents,
    prime_radical,
    unit_orders,
    units,
)
from .ring import FiniteRing, Subset
from .theorems import run_suite, summarize

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write(obj, path: str | Path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def subset_record(S: Subset) -> dict:
    return {"size": len(S), "ids": [int(i) for i in S.ids], "labels": S.labels()}


INVARIANT_SETS = {
    "units": units,
    "jacobson": jacobson,
    "delta": delta,
    "nil": nilpotents,
    "id": idempotents,
    "center": center,
    "prime-radical": prime_radical,
}


def invariants_report(text: str, R: FiniteRing, which: list[str]) -> dict:
    n_min, valid = delta_u_exponent(R)
    out = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "input": text,
        "ring": {"size": R.size, "characteristic": R.characteristic(),
                 "commutative": bool(R.is_commutative())},
        "invariants": {k: subset_record(INVARIANT_SETS[k](R)) for k in which},
        "delta_u_exponent": n_min,
        "valid_exponents": valid,
        "unit_orders": {R.label(u): o for u, o in sorted(unit_orders(R).items())},
    }
    if len(which) == len(INVARIANT_SETS):
        out["elements"] = [{"id": i, "label": R.label(i)} for i in range(R.size)]
    return out


def theorems_report(spec: CorpusSpec | list, only=None, jobs: int = 1, timing: bool = False,
                    progress=None) -> dict:
    start = time.perf_counter()
    results, skipped, names = run_suite(spec, only=only, jobs=jobs, progress=progress)
    corpus = spec.to_dict() if isinstance(spec, CorpusSpec) else {"source": "<list>"}
    corpus["expanded"] = sorted(names)
    corpus["skipped"] = skipped
    rep = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "corpus": corpus,
        "results": results,
        "summary": summarize(results),
    }
    if timing:
        rep["timing"] = {"seconds": round(time.perf_counter() - start, 3), "jobs": jobs}
    return rep
