"""Command-line front end.

Subcommands: classify, decide, table, scores, verify.  Societies come
from JSON files; bitstrings follow the actor-1-leftmost convention.  Exit
codes: 0 success, 2 validation error, 3 axiom failure, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Union

from .axioms import PROPERTY_KEYS, run_axiom_suite, run_negative_control
from .decision import (
    UNANIMITY,
    DecisionRule,
    DecisionVector,
    FractionRule,
    decide,
    propagate,
)
from .errors import InvalidParams, LengthMismatch, OlfmError, TooLarge
from .scores import DEFAULT_CAP, _check_cap, _resolve, sat_all, table_to_json, table_to_tsv
from .society import Society, loads_society, society_to_json

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_AXIOM_FAILURE = 3
EXIT_RESOURCE_CAP = 4


def _rule_override(args) -> Union[DecisionRule, None]:
    if args.rule is None and args.q is None:
        return None
    if args.rule == "unanimity":
        if args.q is not None:
            raise InvalidParams("--q only applies to the fraction rule")
        return UNANIMITY
    if args.q is None:
        raise InvalidParams("--rule fraction needs --q NUM/DEN")
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParams(f"bad --q value {args.q!r}") from exc
    return FractionRule(q)


def _load(args) -> Society:
    with open(args.society, "r", encoding="utf-8") as fp:
        return loads_society(fp.read(), rule_override=_rule_override(args))


def cmd_classify(args) -> int:
    s = _load(args)
    rows = [
        {
            "actor": i,
            "class": s.classes[i - 1].value,
            "layer": s.layers[i - 1],
            "indegree": len(s.preds[i - 1]),
            "outdegree": len(s.succs[i - 1]),
        }
        for i in range(1, s.n + 1)
    ]
    if args.format == "json":
        print(json.dumps({"society": society_to_json(s), "actors": rows}, indent=2))
    else:
        header = ["actor", "class", "layer", "indegree", "outdegree"]
        print("\t".join(header))
        for row in rows:
            print("\t".join(str(row[col]) for col in header))
    return EXIT_OK


def cmd_decide(args) -> int:
    s = _load(args)
    x = DecisionVector.from_string(args.bits)
    if x.n != s.n:
        raise LengthMismatch(f"bitstring has {x.n} bits, society has {s.n} actors")
    c = propagate(s, x)
    value = _resolve(decide(s, x), args.tie_rule)
    if args.format == "json":
        print(json.dumps({"x": str(x), "c": str(c), "C": value}))
    else:
        print(f"c={c} C={value}")
    return EXIT_OK


def cmd_table(args) -> int:
    s = _load(args)
    _check_cap(s.n, args.cap)
    rows = []
    for k in range(1 << s.n):
        x = DecisionVector(s.n, k)
        c = propagate(s, x)
        value = _resolve(decide(s, x), args.tie_rule)
        rows.append((str(x), str(c), value))
    if args.format == "json":
        print(json.dumps([{"x": x, "c": c, "C": v} for x, c, v in rows]))
    else:
        print("x\tc\tC")
        for x, c, v in rows:
            print(f"{x}\t{c}\t{v}")
    return EXIT_OK


def cmd_scores(args) -> int:
    s = _load(args)
    table = sat_all(s, tie_rule=args.tie_rule, cap=args.cap, workers=args.workers)
    if args.format == "json":
        print(json.dumps(table_to_json(s, table), indent=2))
    else:
        sys.stdout.write(table_to_tsv(s, table))
    return EXIT_OK


def _parse_n_range(text: str) -> tuple[int, ...]:
    try:
        low, high = text.split("..")
        low, high = int(low), int(high)
    except ValueError as exc:
        raise InvalidParams(f"bad --n-range {text!r}, expected A..B") from exc
    choices = tuple(n for n in range(low, high + 1) if n % 2 == 1)
    if not choices:
        raise InvalidParams(f"--n-range {text!r} contains no odd sizes")
    return choices


def cmd_verify(args) -> int:
    n_choices = _parse_n_range(args.n_range)
    if args.negative_control:
        outcomes = run_negative_control(seed=args.seed, trials=args.trials, n_choices=n_choices)
        clean = [o for o in outcomes if not o["violated"]]
        if args.format == "json":
            print(json.dumps({"trials": len(outcomes), "outcomes": outcomes}, indent=2))
        else:
            print(
                f"negative control: {len(outcomes) - len(clean)}/{len(outcomes)} "
                "trials violated at least one axiom"
            )
            for o in clean:
                print(f"UNDETECTED: {o['context']}")
        return EXIT_OK if not clean else EXIT_AXIOM_FAILURE

    properties = args.properties.split(",") if args.properties else None
    suite = run_axiom_suite(
        seed=args.seed,
        trials=args.trials,
        properties=properties,
        n_choices=n_choices,
        influencers=args.influencers,
    )
    if args.format == "json":
        print(json.dumps(suite.to_json(), indent=2))
    else:
        for key, reports in suite.results.items():
            print(f"{key}: {suite.passed(key)}/{len(reports)} hold")
        for failure in suite.failures():
            print(f"FAIL {failure.axiom}: {failure.context} witnesses={failure.witnesses}")
    return EXIT_OK if suite.ok else EXIT_AXIOM_FAILURE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="olfm",
        description="Collective decisions, satisfaction scores and axiom checks "
        "for layered opinion leader-follower-mediator societies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def society_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("society", help="society JSON file")
        p.add_argument("--rule", choices=["unanimity", "fraction"], default=None,
                       help="override the rule stored in the file")
        p.add_argument("--q", default=None, metavar="NUM/DEN",
                       help="fraction value, e.g. 3/5 or 0.6 (implies --rule fraction)")

    def output_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    def tie_option(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tie-rule", choices=["reject", "ones-win", "zeros-win"],
                       default="reject", dest="tie_rule")

    def cap_option(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"largest actor count to enumerate (default {DEFAULT_CAP})")

    p = sub.add_parser("classify", help="per-actor class, layer and degrees")
    society_options(p)
    output_options(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decide", help="collective decision for one bitstring")
    society_options(p)
    p.add_argument("bits", help="initial decision vector, leftmost bit = actor 1")
    tie_option(p)
    output_options(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("table", help="all 2^n rows (x, c(x), C(x))")
    society_options(p)
    tie_option(p)
    cap_option(p)
    output_options(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scores", help="satisfaction and Banzhaf score table")
    society_options(p)
    tie_option(p)
    cap_option(p)
    p.add_argument("--workers", type=int, default=1,
                   help="processes for the enumeration (default 1)")
    output_options(p)
    p.set_defaults(func=cmd_scores)

    p = sub.add_parser("verify", help="randomized axiom suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-range", default="3..9", dest="n_range", metavar="A..B",
                   help="odd society sizes to draw from (default 3..9)")
    p.add_argument("--properties", default=None,
                   help="comma-separated subset of: " + ", ".join(PROPERTY_KEYS))
    p.add_argument("--influencers", choices=["any", "sources"], default="any",
                   help="scope of the actor gaining a successor in the 4b/5b/6b "
                        "suites; 'any' covers the full preconditions (on which the "
                        "two-branch properties are known to fail for some "
                        "instances), 'sources' is the provably safe restriction")
    p.add_argument("--negative-control", action="store_true", dest="negative_control",
                   help="check that a perturbed score violates some axiom")
    output_options(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except OlfmError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
