"""Command line front end.

Subcommands: partition, approx, eval, check, gen, witness. Exit codes:
0 success, 1 load or sort error, 2 query syntax error, 3 law failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dsl, oracle, rough, storage
from .affordance import AffordanceStructure, Sort
from .errors import AffordanceError, QuerySyntaxError, SortMismatch, \
    UnknownSetName
from .oracle import GenConfig, StrictnessClaim

_SORT_CHOICES = ("A", "O", "E")


def _ordered(s: AffordanceStructure, sort, values) -> list:
    """Members in table order; pair sorts order by both tables."""
    if isinstance(sort, Sort):
        position = s.partition(sort).position
        return sorted(values, key=position.__getitem__)
    first_pos = s.partition(sort[0]).position
    second_pos = s.partition(sort[1]).position
    return [list(pair) for pair in
            sorted(values, key=lambda p: (first_pos[p[0]], second_pos[p[1]]))]


def _braced(members) -> str:
    return "{" + ",".join(str(m) for m in members) + "}"


def _braced_pairs(pairs) -> str:
    return "{" + ",".join(f"({a},{b})" for a, b in pairs) + "}"


def cmd_partition(args) -> int:
    s, _ = storage.load_structure(args.manifest)
    sort = Sort(args.sort)
    partition = s.partition(sort)
    if args.format == "json":
        print(json.dumps({"sort": sort.value,
                          "blocks": [list(b) for b in partition.blocks]}))
    else:
        for block in partition.blocks:
            print(_braced(block))
    return 0


def cmd_approx(args) -> int:
    s, sets = storage.load_structure(args.manifest)
    sort = Sort(args.sort)
    if args.set not in sets:
        raise UnknownSetName(args.set, where="approx")
    named = sets[args.set]
    if named.sort is not sort:
        raise SortMismatch(f"set {args.set!r}", sort.value, named.sort.value)
    partition = s.partition(sort)
    result = rough.approximate(partition, named.members)
    statuses = [(z, rough.membership_status(partition, named.members, z).value)
                for z in s.sort_ids(sort)]
    if args.format == "json":
        print(json.dumps({
            "sort": sort.value, "set": named.name,
            "lower": _ordered(s, sort, result.lower),
            "upper": _ordered(s, sort, result.upper),
            "boundary": _ordered(s, sort, result.boundary),
            "statuses": dict(statuses),
        }))
    else:
        print("lower " + _braced(_ordered(s, sort, result.lower)))
        print("upper " + _braced(_ordered(s, sort, result.upper)))
        print("boundary " + _braced(_ordered(s, sort, result.boundary)))
        for z, status in statuses:
            print(f"{z} {status}")
    return 0


def _run_query(s, sets, text: str, fmt: str) -> None:
    expr = dsl.parse(text)
    sort = dsl.check_sorts(expr, {n: ns.sort for n, ns in sets.items()})
    members = dsl.evaluate(expr, s, sets)
    canonical = dsl.print_query(expr)
    ordered = _ordered(s, sort, members)
    if fmt == "json":
        sort_text = sort.value if isinstance(sort, Sort) \
            else f"{sort[0].value}x{sort[1].value}"
        print(json.dumps({"query": canonical, "sort": sort_text,
                          "members": ordered}))
    elif isinstance(sort, Sort):
        print(f"{canonical} -> {_braced(ordered)}")
    else:
        print(f"{canonical} -> {_braced_pairs(ordered)}")


def cmd_eval(args) -> int:
    s, sets = storage.load_structure(args.manifest)
    if args.query is not None:
        _run_query(s, sets, args.query, args.format)
        return 0
    for lineno, text in storage.read_query_file(args.query_file):
        try:
            _run_query(s, sets, text, args.format)
        except QuerySyntaxError as err:
            print(f"{args.query_file}:{lineno}: {err}", file=sys.stderr)
            return 2
    return 0


def _print_witness(witness) -> None:
    print(f"claim {witness.claim.value}")
    print(f"digest {witness.digest}")
    print(f"coordinate {witness.coordinate.value}")
    if witness.mask is not None:
        print("mask " + _braced(sorted(witness.mask)))
    print("X " + _braced(witness.X))
    print("Y " + _braced(witness.Y))
    print("smaller " + _braced(witness.smaller))
    print("larger " + _braced(witness.larger))
    print()
    print(storage.serialize_structure(witness.structure), end="")


def cmd_check(args) -> int:
    cfg = GenConfig(seed=args.seed)
    if args.manifest is not None:
        s, _ = storage.load_structure(args.manifest)
        reports = oracle.check_laws(cfg, trials=1, structures=[s])
    else:
        reports = oracle.check_laws(cfg, trials=args.trials)
    if args.format == "json":
        records = []
        for r in reports:
            record = {"name": r.name,
                      "status": "PASS" if r.passed else "FAIL",
                      "trials": r.structures_checked}
            if r.counterexample is not None:
                record["witness"] = r.counterexample.structure_digest
                record["detail"] = r.counterexample.detail
            records.append(record)
        print(json.dumps({"laws": records}))
    else:
        for r in reports:
            print(oracle.format_report(r))
    if args.witness is not None:
        witness = oracle.find_witness(StrictnessClaim(args.witness), cfg)
        print()
        if witness is None:
            print(f"no {args.witness} witness found")
        else:
            _print_witness(witness)
    return 3 if any(not r.passed for r in reports) else 0


def cmd_gen(args) -> int:
    s = oracle.generate(GenConfig(seed=args.seed))
    if args.out is not None:
        storage.write_bundle(s, Path(args.out))
    else:
        print(storage.serialize_structure(s), end="")
    return 0


def cmd_witness(args) -> int:
    cfg = GenConfig(seed=args.seed)
    witness = oracle.find_witness(StrictnessClaim(args.claim), cfg,
                                  budget=args.budget)
    if witness is None:
        print(f"no {args.claim} witness found within {args.budget} structures",
              file=sys.stderr)
        return 1
    _print_witness(witness)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afford",
        description="Load affordance structures, evaluate operator queries, "
                    "and check the algebraic laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("partition", help="print indiscernibility blocks")
    p.add_argument("--manifest", required=True)
    p.add_argument("sort", choices=_SORT_CHOICES)
    add_format(p)
    p.set_defaults(run=cmd_partition)

    p = sub.add_parser("approx", help="approximate a named set")
    p.add_argument("--manifest", required=True)
    p.add_argument("sort", choices=_SORT_CHOICES)
    p.add_argument("set")
    add_format(p)
    p.set_defaults(run=cmd_approx)

    p = sub.add_parser("eval", help="evaluate queries against a structure")
    p.add_argument("--manifest", required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--query")
    source.add_argument("--query-file")
    add_format(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", help="run the law suite")
    p.add_argument("--manifest")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--witness", choices=("strict-upper", "strict-lower"))
    add_format(p)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("gen", help="generate a seeded random structure")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", help="write a bundle directory instead of stdout")
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("witness", help="search for a strictness witness")
    p.add_argument("claim", choices=("strict-upper", "strict-lower"))
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--budget", type=int, default=1000)
    p.set_defaults(run=cmd_witness)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except QuerySyntaxError as err:
        print(str(err), file=sys.stderr)
        return 2
    except AffordanceError as err:
        print(str(err), file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())
