"""Command-line frontend.

Exit codes: 0 = success / verified, 1 = mathematically negative result or a
failed validation check, 2 = input, parse, or usage error.  Human-readable
output goes to stdout, diagnostics to stderr, machine-readable artifacts
only to files (or to stdout with --json where offered).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import serialize
from .complexes import (
    Graph,
    SimplicialComplex,
    brute_force_iso,
    reconstruct_facet_complex,
    reconstruct_sr_complex,
)
from .errors import ExtractionFailure, InternalContradictionError, RingIsoError
from .extraction import extract_isomorphism
from .fields import QQ, PrimeField
from .instances import generate_bundle, ideal_for_kind
from .ringmaps import (
    check_inverse_pair,
    check_well_defined,
    constant_free_check,
    lemma1_check,
    lemma2_check,
)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _write_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize.dumps(data))


def _parse_field(text: str):
    if text == "rational":
        return QQ
    return PrimeField(int(text))


def _complex_for_kind(obj, kind: str):
    """Normalize a loaded complex or graph to what the kind expects."""
    if kind == "edge":
        if isinstance(obj, Graph):
            return obj
        if all(len(f) == 2 for f in obj.facets):
            return Graph(obj.names, frozenset(obj.facets))
        raise RingIsoError("edge kind needs a graph (or a complex with 2-element facets)")
    if isinstance(obj, Graph):
        isolated = obj.isolated_vertices()
        if isolated:
            raise RingIsoError(
                "graph has isolated vertices "
                f"{[obj.names[v] for v in isolated]}; they lie in no facet, so the "
                f"'{kind}' kind cannot represent them"
            )
        return SimplicialComplex(obj.names, frozenset(obj.edges))
    return obj


def cmd_ideal(args) -> int:
    obj = serialize.load_complex_or_graph(_load_json(args.input))
    if args.kind == "edge" and isinstance(obj, Graph):
        isolated = obj.isolated_vertices()
        if isolated:
            print(
                "warning: isolated vertices "
                f"{[obj.names[v] for v in isolated]} produce no generators; "
                "edge-ring isomorphism cannot see them",
                file=sys.stderr,
            )
    shaped = _complex_for_kind(obj, args.kind)
    ideal = ideal_for_kind(shaped, args.kind)
    _write_json(args.output, serialize.ideal_to_json(ideal, shaped.names))
    print(f"{len(ideal.generators)} generators")
    return 0


def cmd_reconstruct(args) -> int:
    ideal, names = serialize.ideal_from_json(_load_json(args.input))
    if args.kind == "sr":
        complex_ = reconstruct_sr_complex(ideal, names)
    else:
        complex_ = reconstruct_facet_complex(ideal, names)
    _write_json(args.output, serialize.complex_to_json(complex_))
    print(f"{len(complex_.facets)} facets")
    return 0


def cmd_check_map(args) -> int:
    pair = serialize.map_from_json(_load_json(args.input))
    reports = [
        check_well_defined(pair.forward),
        check_well_defined(pair.backward),
        lemma1_check(pair),
        constant_free_check(pair),
        lemma2_check(pair),
        check_inverse_pair(pair),
    ]
    labels = ["well-defined (forward)", "well-defined (backward)"] + [
        r.stage for r in reports[2:]
    ]
    ok = all(r.passed for r in reports)
    if args.json:
        print(
            serialize.dumps(
                {
                    "passed": ok,
                    "checks": [
                        {
                            "stage": label,
                            "passed": report.passed,
                            "violations": [
                                {"where": v.where, "message": v.message}
                                for v in report.violations
                            ],
                        }
                        for label, report in zip(labels, reports)
                    ],
                }
            ),
            end="",
        )
    else:
        for label, report in zip(labels, reports):
            status = "pass" if report.passed else "FAIL"
            print(f"{label}: {status}")
            for v in report.violations:
                print(f"  {v.where}: {v.message}")
    return 0 if ok else 1


def cmd_extract(args) -> int:
    pair = serialize.map_from_json(_load_json(args.input))
    try:
        result = extract_isomorphism(pair, args.kind)
    except ExtractionFailure as exc:
        print(f"extract: failed at {exc}", file=sys.stderr)
        return 1
    data = serialize.result_to_json(result)
    if args.output:
        _write_json(args.output, data)
    if args.json:
        print(serialize.dumps(data), end="")
    else:
        for src, dst in sorted(data["bijection"].items()):
            print(f"{src} -> {dst}")
        print("verified" if result.verified else "NOT VERIFIED")
    if not result.verified:
        for line in result.diagnostics:
            print(f"extract: {line}", file=sys.stderr)
        return 1
    return 0


def cmd_gen(args) -> int:
    bundle = generate_bundle(
        n=args.n,
        kind=args.kind,
        num_ops=args.ops,
        seed=args.seed,
        density=args.density,
        field=_parse_field(args.field),
    )
    _write_json(args.output, serialize.bundle_to_json(bundle))
    print(
        f"bundle: kind={bundle.kind} n={args.n} ops={len(bundle.ops)} seed={args.seed}"
    )
    return 0


def cmd_oracle(args) -> int:
    left = serialize.load_complex_or_graph(_load_json(args.left))
    right = serialize.load_complex_or_graph(_load_json(args.right))
    found = brute_force_iso(left, right)
    if found is None:
        print("none")
        return 1
    for i, j in enumerate(found.forward):
        print(f"{left.names[i]} -> {right.names[j]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringiso",
        description=(
            "Monomial-ideal presentations of simplicial complexes and graphs, "
            "and extraction of vertex bijections from quotient-ring isomorphisms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", help="complex/graph file -> ideal file")
    p.add_argument("input")
    p.add_argument("--kind", choices=["sr", "facet", "edge"], required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("reconstruct", help="ideal file -> complex file")
    p.add_argument("input")
    p.add_argument("--kind", choices=["sr", "facet"], required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("check-map", help="validate an isomorphism-pair file")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_map)

    p = sub.add_parser("extract", help="map file -> vertex bijection")
    p.add_argument("input")
    p.add_argument("--kind", choices=["sr", "facet", "edge"], required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("gen", help="generate a seeded instance bundle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["sr", "facet", "edge"], required=True)
    p.add_argument("--ops", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--field", default="rational", help="'rational' or a prime p")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force isomorphism search on two files")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalContradictionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (RingIsoError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
