"""Command-line front end: element queries, neighborhoods, graph export, verify.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.
Output is deterministic; set DCN_COLOR=1 for ANSI color in human output
(JSON and DOT are always color-free).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dihedral import (
    CoefficientRangeError,
    ParseError,
    explicit_length,
    format_degree,
    format_element,
    format_element_set,
    format_word,
    mul,
    parse_degree,
    parse_element,
    phi,
    reduced_word,
    sort_elements,
)
from .moment_graph import enumerate_chains, format_chain, graph_slice, to_dot
from .neighborhood import ad_set, curve_neighborhood
from .oracle import curve_neighborhood_oracle, differential_check, format_report

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_RESET = "\x1b[0m"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _color_enabled() -> bool:
    return os.environ.get("DCN_COLOR", "0") == "1"


def _tint(text: str, color: str) -> str:
    return f"{color}{text}{_RESET}" if _color_enabled() else text


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def _degree_json(d) -> dict:
    return {"a": d.a, "b": d.b}


def _elements_json(elements) -> list[str]:
    return [format_element(g) for g in sort_elements(elements)]


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_length(args) -> int:
    g = parse_element(args.element)
    value = explicit_length(g)
    if args.json:
        _print_json({"input": {"command": "length", "g": format_element(g)}, "result": value})
    else:
        print(value)
    return 0


def _cmd_word(args) -> int:
    g = parse_element(args.element)
    word = reduced_word(g)
    if args.json:
        _print_json(
            {
                "input": {"command": "word", "g": format_element(g)},
                "result": [f"s{int(i)}" for i in word],
            }
        )
    else:
        print(format_word(word))
    return 0


def _cmd_phi(args) -> int:
    g = parse_element(args.element)
    counts = phi(g)
    if args.json:
        _print_json(
            {"input": {"command": "phi", "g": format_element(g)}, "result": _degree_json(counts)}
        )
    else:
        print(format_degree(counts))
    return 0


def _cmd_mul(args) -> int:
    g = parse_element(args.left)
    h = parse_element(args.right)
    product = mul(g, h)
    if args.json:
        _print_json(
            {
                "input": {"command": "mul", "g": format_element(g), "h": format_element(h)},
                "result": format_element(product),
            }
        )
    else:
        print(format_element(product))
    return 0


def _cmd_ad(args) -> int:
    u = parse_element(args.u)
    d = parse_degree(args.d)
    result = ad_set(u, d)
    if args.json:
        _print_json(
            {
                "input": {"command": "ad", "u": format_element(u), "d": _degree_json(d)},
                "result": _elements_json(result),
            }
        )
    else:
        print(format_element_set(result))
    return 0


def _cmd_gamma(args) -> int:
    u = parse_element(args.u)
    d = parse_degree(args.d)
    payload: dict = {
        "input": {
            "command": "gamma",
            "u": format_element(u),
            "d": _degree_json(d),
            "method": args.method,
        }
    }
    if args.method == "closed":
        result = curve_neighborhood(u, d)
    elif args.method == "oracle":
        result = curve_neighborhood_oracle(u, d)
    else:
        closed = curve_neighborhood(u, d)
        brute = curve_neighborhood_oracle(u, d)
        agree = closed == brute
        if args.json:
            payload["result"] = _elements_json(closed)
            payload["oracle"] = _elements_json(brute)
            payload["agree"] = agree
            _print_json(payload)
        else:
            print(f"closed: {format_element_set(closed)}")
            print(f"oracle: {format_element_set(brute)}")
            if not agree:
                print(_tint("MISMATCH", _RED))
        return 0 if agree else 2
    if args.json:
        payload["result"] = _elements_json(result)
        _print_json(payload)
    else:
        print(format_element_set(result))
    return 0


def _cmd_chains(args) -> int:
    u = parse_element(args.u)
    d = parse_degree(args.d)
    chains = enumerate_chains(u, d)
    if args.json:
        _print_json(
            {
                "input": {"command": "chains", "u": format_element(u), "d": _degree_json(d)},
                "result": [
                    {
                        "start": format_element(c.start),
                        "steps": [
                            {
                                "root": {"a": step.root.a, "b": step.root.b},
                                "target": format_element(step.target),
                            }
                            for step in c.steps
                        ],
                        "degree": _degree_json(c.degree()),
                    }
                    for c in chains
                ],
            }
        )
    else:
        for chain in chains:
            print(format_chain(chain))
    return 0


def _cmd_graph(args) -> int:
    if args.format == "dot":
        sys.stdout.write(to_dot(args.max_length))
        return 0
    vertices, edges = graph_slice(args.max_length)
    _print_json(
        {
            "input": {"command": "graph", "max_length": args.max_length},
            "result": {
                "vertices": [format_element(v) for v in vertices],
                "edges": [
                    {
                        "source": format_element(u),
                        "target": format_element(v),
                        "root": {"a": alpha.a, "b": alpha.b},
                    }
                    for u, alpha, v in edges
                ],
            },
        }
    )
    return 0


def _cmd_verify(args) -> int:
    max_d = parse_degree(args.max_d)
    report = differential_check(args.max_u_length, max_d, jobs=args.jobs)
    if args.json:
        _print_json(
            {
                "input": {
                    "command": "verify",
                    "max_u_length": args.max_u_length,
                    "max_d": _degree_json(max_d),
                    "jobs": args.jobs,
                },
                "result": {
                    "cases_total": report.cases_total,
                    "cases_passed": report.cases_passed,
                },
                "mismatches": [
                    {
                        "u": format_element(m.u),
                        "d": _degree_json(m.d),
                        "closed": _elements_json(m.closed),
                        "oracle": _elements_json(m.oracle),
                    }
                    for m in report.mismatches
                ],
            }
        )
    else:
        summary, *details = format_report(report).split("\n")
        print(_tint(summary, _GREEN if report.ok else _RED))
        for line in details:
            print(line)
    return 0 if report.ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dcn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str, func):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(func=func)
        return p

    p = add("length", "Coxeter length of an element", _cmd_length)
    p.add_argument("element", help="element, e.g. sr(-3), r(2), 1, s0, s1")

    p = add("word", "reduced word of an element", _cmd_word)
    p.add_argument("element")

    p = add("phi", "letter counts (#s0,#s1) of an element", _cmd_phi)
    p.add_argument("element")

    p = add("mul", "product of two elements", _cmd_mul)
    p.add_argument("left")
    p.add_argument("right")

    p = add("ad", "elements that lengthen u additively within degree d", _cmd_ad)
    p.add_argument("--u", required=True, help="base element")
    p.add_argument("--d", required=True, help="degree bound a,b")

    p = add("gamma", "curve neighborhood of u at degree d", _cmd_gamma)
    p.add_argument("--u", required=True, help="base element")
    p.add_argument("--d", required=True, help="degree bound a,b")
    p.add_argument(
        "--method",
        choices=("closed", "oracle", "both"),
        default="closed",
        help="closed form, chain-search oracle, or both (exit 2 on disagreement)",
    )

    p = add("chains", "all increasing chains from u of degree at most d", _cmd_chains)
    p.add_argument("--u", required=True, help="start element")
    p.add_argument("--d", required=True, help="degree budget a,b")

    p = sub.add_parser("graph", help="moment-graph slice on lengths <= N")
    p.add_argument("--max-length", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=_cmd_graph)

    p = add("verify", "differential check of closed form against the oracle", _cmd_verify)
    p.add_argument("--max-u-length", type=_nonneg_int, required=True)
    p.add_argument("--max-d", required=True, help="degree grid corner a,b")
    p.add_argument("--jobs", type=_positive_int, default=1, help="parallelism hint")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(_tint(f"error: {exc}", _RED), file=sys.stderr)
        return 1
    except (ParseError, CoefficientRangeError) as exc:
        print(_tint(f"error: {exc}", _RED), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
