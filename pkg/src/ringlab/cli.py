"""ringlab command line.

Exit codes: 0 success, 1 counterexample (or engine disagreement), 2 usage or
parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .corpus import default_corpus_spec, load_corpus
from .errors import ParseError, RingLabError
from .expr import eval_expr, parse_ring_expr
from .predicates import PREDICATES, lookup
from .report import INVARIANT_SETS, invariants_report, theorems_report, write
from .search import search_counterexamples
from .theorems import _resolve_ids


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"ringlab: error [usage]: {message}", file=sys.stderr)
        sys.exit(2)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ringlab", description="Exact computations in finite rings and n-Delta-U checks.")
    p.add_argument("--version", action="version", version=f"ringlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("invariants", help="unit group, radicals, Delta and friends of one ring")
    inv.add_argument("expr")
    inv.add_argument("--set", dest="which", default="all", choices=[*INVARIANT_SETS, "all"])
    inv.add_argument("--json", metavar="FILE")

    chk = sub.add_parser("check", help="evaluate one predicate on one ring")
    chk.add_argument("expr")
    chk.add_argument("--pred", required=True, help=", ".join(sorted(PREDICATES)))
    chk.add_argument("--n", type=int, help="exponent or power parameter")

    th = sub.add_parser("theorems", help="run the check registry over a corpus")
    th.add_argument("--corpus", metavar="FILE")
    th.add_argument("--only", metavar="ID,ID")
    th.add_argument("--jobs", type=int, default=1)
    th.add_argument("--json", metavar="FILE")
    th.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")

    se = sub.add_parser("search", help="list corpus rings satisfying a predicate formula")
    se.add_argument("--corpus", metavar="FILE")
    se.add_argument("--formula", required=True)
    se.add_argument("--limit", type=int)
    se.add_argument("--assert-empty", action="store_true", help="exit 1 when any ring matches")
    return p


def _print_subset(name: str, rec: dict):
    print(f"{name} ({rec['size']}): " + ", ".join(rec["labels"]))


def cmd_invariants(args) -> int:
    R = eval_expr(args.expr)
    which = list(INVARIANT_SETS) if args.which == "all" else [args.which]
    rep = invariants_report(str(parse_ring_expr(args.expr)), R, which)
    print(f"{rep['input']}: {R.size} elements, characteristic {rep['ring']['characteristic']}")
    for k in which:
        _print_subset(k, rep["invariants"][k])
    print(f"delta_u_exponent: {rep['delta_u_exponent']}")
    if "elements" in rep:
        print("elements:")
        for e in rep["elements"]:
            print(f"  #{e['id']}  {e['label']}")
    if args.json:
        write(rep, args.json)
    return 0


def cmd_check(args) -> int:
    try:
        spec = lookup(args.pred)
    except KeyError:
        raise ParseError(f"unknown predicate {args.pred!r}", code="unknown-name") from None
    R = eval_expr(args.expr)
    res = spec(R, args.n)
    line = f"{spec.name}({args.n})" if spec.param else spec.name
    print(f"{line} = {str(res.value).lower()}")
    if res.witness is not None:
        print("witness: " + ", ".join(f"#{i} {lab}" for i, lab in zip(res.witness, res.labels)))
    return 0


def _corpus(path):
    return load_corpus(path) if path else default_corpus_spec()


def cmd_theorems(args) -> int:
    spec = _corpus(args.corpus)
    only = [x for x in args.only.split(",") if x.strip()] if args.only else None
    if only:
        try:
            _resolve_ids(only)
        except KeyError as e:
            raise ParseError(f"unknown check id {e.args[0]!r}", code="unknown-name") from None
    rep = theorems_report(spec, only=only, jobs=max(1, args.jobs), timing=args.timing)
    summ = rep["summary"]
    for cid, counts in summ["by_check"].items():
        print(f"{cid:9s} " + " ".join(f"{k}={v}" for k, v in counts.items()))
    for f in summ["flagged_discrepancies"]:
        print(f"flagged: {f['check_id']} {f['ring']}")
    for f in summ["counterexamples"]:
        print(f"COUNTEREXAMPLE: {f['check_id']} {f['ring']} {f['witness']}")
    if args.json:
        write(rep, args.json)
    return 1 if summ["counterexamples"] else 0


def cmd_search(args) -> int:
    spec = _corpus(args.corpus)
    hits = search_counterexamples(spec, args.formula, limit=args.limit)
    for h in hits:
        print(h)
    print(f"{len(hits)} ring(s) match", file=sys.stderr)
    return 1 if (args.assert_empty and hits) else 0


COMMANDS = {"invariants": cmd_invariants, "check": cmd_check,
            "theorems": cmd_theorems, "search": cmd_search}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except RingLabError as e:
        print(f"ringlab: error [{e.code}]: {e.message}", file=sys.stderr)
        return e.exit_status


if __name__ == "__main__":
    sys.exit(main())
