"""Command-line front end.

Exit codes: 0 success, 2 validation error (including malformed spec files
and flags), 3 truncation/prefix error, 4 element not a member.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import betti as betti_mod
from . import invariants as inv_mod
from .errors import (
    DomainError,
    NotAMember,
    PrefixTooSmall,
    TruncatedInput,
    TruncationTooSmall,
    ValidationError,
)
from .factorizations import (
    enumerate_atomized,
    enumerate_fg,
    enumerate_geometric,
    canonical_decomposition,
)
from .presentations import (
    Atomized,
    FinitelyGenerated,
    Geometric,
    atom,
    construct_geometric,
    construct_grams,
    construct_prop44,
    construct_reciprocal,
    load_spec,
    save_spec,
    validate,
)
from .rationals import format_rational, parse_rational
from .verify import suite_cor43, suite_lemma41, suite_prop21, suite_thm42

DEFAULT_TRUNCATION = 8


def _load(args) -> object:
    spec = load_spec(args.monoid)
    validate(spec, prefix=getattr(args, "truncate", DEFAULT_TRUNCATION))
    return spec


def _enumerate(spec, element: Fraction, T: int):
    if isinstance(spec, FinitelyGenerated):
        return enumerate_fg(spec, element)
    if isinstance(spec, Atomized):
        return enumerate_atomized(spec, element, T)
    return enumerate_geometric(spec, element, T)


def _zset_json(zset, spec) -> dict:
    out = {
        "element": format_rational(zset.element),
        "complete": "exact" if zset.is_exact else "truncated",
        "factorizations": [
            {"atoms": {format_rational(atom(spec, i)): c for i, c in z.items}}
            for z in zset.factorizations
        ],
    }
    if not zset.is_exact:
        out["truncation"] = zset.truncation
    return out


def cmd_factorizations(args) -> int:
    spec = _load(args)
    zset = _enumerate(spec, parse_rational(args.element), args.truncate)
    if args.json:
        print(json.dumps(_zset_json(zset, spec)))
        return 0
    flag = "exact" if zset.is_exact else f"truncated at T={zset.truncation}"
    print(f"Z({format_rational(zset.element)}): "
          f"{len(zset.factorizations)} factorization(s), {flag}")
    for z in zset.factorizations:
        print(z.render(spec))
    return 0


def cmd_betti_graph(args) -> int:
    spec = _load(args)
    zset = _enumerate(spec, parse_rational(args.element), args.truncate)
    graph = betti_mod.betti_graph(zset)
    if args.format == "dot":
        print(betti_mod.graph_to_dot(graph, spec))
    else:
        print(json.dumps(betti_mod.graph_to_json_dict(graph, spec)))
    return 0


def cmd_betti_set(args) -> int:
    spec = _load(args)
    if isinstance(spec, FinitelyGenerated):
        print(" ".join(format_rational(q) for q in betti_mod.betti_set_fg(spec)))
        return 0
    bound = parse_rational(args.bound) if args.bound else Fraction(1)
    if isinstance(spec, Geometric):
        values = betti_mod.betti_set_geometric(spec, bound)
        print(" ".join(format_rational(q) for q in values))
        return 0
    report = betti_mod.betti_scan_atomized(spec, bound, args.truncate)
    print(f"scan report (bound {format_rational(bound)}, T={args.truncate})")
    print("Betti: " + " ".join(format_rational(q) for q in report.betti_values()))
    print("NotBetti: " + " ".join(format_rational(q) for q, _ in report.not_betti))
    print("Unknown: " + " ".join(format_rational(q) for q, _ in report.unknown))
    return 0


def cmd_scan(args) -> int:
    return cmd_betti_set(args)


def cmd_classify(args) -> int:
    spec = _load(args)
    if not isinstance(spec, Atomized):
        raise ValidationError("classify expects an atomized monoid spec")
    verdict = betti_mod.classify_atomized(
        spec, parse_rational(args.element), args.truncate
    )
    if args.json:
        print(json.dumps(betti_mod.verdict_to_json_dict(verdict, spec)))
    else:
        print(betti_mod.verdict_to_text(verdict, spec))
    return 0


def cmd_canon(args) -> int:
    spec = _load(args)
    if not isinstance(spec, Atomized):
        raise ValidationError("canon expects an atomized monoid spec")
    q = parse_rational(args.element)
    cd = canonical_decomposition(spec, q)
    if cd is None:
        raise NotAMember(f"{args.element} is not in the monoid")
    parts = " ".join(
        f"c[{format_rational(atom(spec, n))}]={c}" for n, c in cd.fractional
    )
    line = f"n_q={format_rational(cd.n_q)}"
    print(f"{line}; {parts}" if parts else line)
    return 0


def cmd_invariants(args) -> int:
    spec = _load(args)
    zset = _enumerate(spec, parse_rational(args.element), args.truncate)
    lengths = inv_mod.length_set(zset)
    delta = sorted(inv_mod.delta_set(lengths))
    catenary = inv_mod.catenary_degree_element(zset)
    print(json.dumps({
        "element": format_rational(zset.element),
        "lengths": list(lengths.lengths),
        "delta": delta,
        "catenary": catenary,
    }))
    return 0


def cmd_verify(args) -> int:
    spec = _load(args)
    bound = parse_rational(args.bound) if args.bound else Fraction(1)
    if args.suite == "prop21":
        if not isinstance(spec, FinitelyGenerated):
            raise ValidationError("prop21 suite expects a finitely generated spec")
        ok, lines = suite_prop21(spec)
    else:
        if not isinstance(spec, Atomized):
            raise ValidationError(f"{args.suite} suite expects an atomized spec")
        if args.suite == "thm42":
            ok, lines = suite_thm42(spec, T=args.truncate)
        elif args.suite == "cor43":
            ok, lines = suite_cor43(spec, bound=bound, T=args.truncate)
        else:
            ok, lines = suite_lemma41(spec, T=args.truncate, bound=bound)
    for line in lines:
        print(line)
    return 0 if ok else 1


def cmd_construct(args) -> int:
    if args.family == "prop44":
        if args.b is None:
            raise ValidationError("--b is required for the prop44 family")
        spec = construct_prop44(args.b)
    elif args.family == "grams":
        spec = construct_grams()
    elif args.family == "reciprocal":
        spec = construct_reciprocal()
    else:
        if args.q is None:
            raise ValidationError("--q is required for the geometric family")
        spec = construct_geometric(parse_rational(args.q))
    save_spec(spec, args.output)
    print(f"wrote {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="puiseux",
        description="Factorization sets, Betti graphs, and Betti elements "
        "of Puiseux monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, element=True):
        p.add_argument("--monoid", required=True, help="monoid spec JSON file")
        if element:
            p.add_argument("--element", required=True, help='rational "a/b"')
        p.add_argument("--truncate", type=int, default=DEFAULT_TRUNCATION,
                       help="atom window for infinitely generated monoids")

    p = sub.add_parser("factorizations", help="enumerate Z(q)")
    add_common(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factorizations)

    p = sub.add_parser("betti-graph", help="export the Betti graph of q")
    add_common(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_betti_graph)

    for name in ("betti-set", "scan"):
        p = sub.add_parser(name, help="Betti set / scan report")
        add_common(p, element=False)
        p.add_argument("--bound", help="value bound for scans")
        p.set_defaults(func=cmd_betti_set)

    p = sub.add_parser("classify", help="Betti verdict with certificate")
    add_common(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canon", help="canonical decomposition of q")
    add_common(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("invariants", help="lengths / delta / catenary of q")
    add_common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run a property suite")
    add_common(p, element=False)
    p.add_argument("--suite", required=True,
                   choices=("thm42", "cor43", "prop21", "lemma41"))
    p.add_argument("--bound", help="value bound for scan-style suites")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="write a spec file for a known family")
    p.add_argument("--family", required=True,
                   choices=("prop44", "grams", "reciprocal", "geometric"))
    p.add_argument("--b", type=int)
    p.add_argument("--q")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, DomainError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TruncationTooSmall, PrefixTooSmall, TruncatedInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotAMember as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
