"""Command line surface and JSON report emission.

The CLI is a thin shell over the library: ``eval`` normalizes an
expression, ``mul`` multiplies, ``apply`` evaluates an embedding,
``member`` decides invariant-subgroup membership and ``check`` runs a
verification suite.  Exit code 0 means success or a passing suite, 1 a
failing suite, 2 a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import nearring_maps as nr
from . import verify_suites as vs
from .grammar import parse_element, render
from .word_core import EngineError, Variant
from .verify_suites import Report, SampleConfig

__all__ = ["build_parser", "main", "run_cli", "write_report"]

_SUITES = ("axioms", "conjugacy", "nonequiprime", "equiprime", "invariants", "leftdistrib")


def write_report(report: Report) -> bytes:
    """Stable JSON encoding of a suite report; identical reports give
    byte-identical output."""
    payload = {
        "suite": report.suite_name,
        "variant": report.variant.value,
        "seed": report.config.seed,
        "count": report.config.count,
        "cases_run": report.cases_run,
        "passed": report.passed,
        "failures": report.failures,
        "witnesses": report.witnesses,
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hnn-nearring",
        description="Exact arithmetic and nearring products on towers of HNN extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_variant(p):
        p.add_argument("--variant", required=True, choices=["A", "B", "C"],
                       help="which tower: A integer base, B free base, C integer base "
                            "with central generators")

    p = sub.add_parser("eval", help="normalize an expression")
    add_variant(p)
    p.add_argument("expr")

    p = sub.add_parser("mul", help="nearring product of two expressions")
    add_variant(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("apply", help="apply the embedding attached to --zeta")
    add_variant(p)
    p.add_argument("--zeta", required=True)
    p.add_argument("expr")

    p = sub.add_parser("member", help="invariant subgroup membership")
    add_variant(p)
    p.add_argument("--subgroup", required=True, choices=["W", "H"])
    p.add_argument("--zeta", help="index of the image subgroup (H only; "
                                  "defaults to om(0) under variant C)")
    p.add_argument("expr")

    p = sub.add_parser("check", help="run a verification suite")
    add_variant(p)
    p.add_argument("--suite", required=True, choices=_SUITES)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--depth", type=int, default=3, help="maximum sampled level")
    p.add_argument("--json", dest="json_path", help="write the JSON report here")
    return parser


def _run_suite(variant: Variant, name: str, config: SampleConfig) -> Report:
    if name == "axioms":
        return vs.check_nearring_axioms(variant, config)
    if name == "conjugacy":
        return vs.check_conjugacy(variant, config)
    if name == "nonequiprime":
        if variant is Variant.B_FREE_BASE:
            return vs.witness_nonequiprime_B(config)
        if variant is Variant.C_INT_OMEGA_BASE:
            return vs.witness_nonequiprime_C(config)
        raise EngineError("variant A carries no non-equiprime witness; use B or C")
    if name == "equiprime":
        if variant is Variant.A_INT_BASE:
            return vs.check_equiprime_instances_A(config)
        raise EngineError("equiprime instances are checked under variant A only")
    if name == "invariants":
        return vs.check_invariant_subgroups(variant, config)
    if name == "leftdistrib":
        return vs.find_left_distrib_counterexample(variant, config)
    raise EngineError(f"unknown suite {name!r}")


_VALUE_OPTIONS = {"--variant", "--zeta", "--subgroup", "--suite", "--seed",
                  "--count", "--depth", "--json"}


def _normalize_argv(argv: Sequence[str]) -> list:
    """Let expression positionals start with '-' by regrouping known
    options first and fencing the positionals behind '--'."""
    argv = list(argv)
    if not argv or argv[0] in ("-h", "--help"):
        return argv
    head, opts, positional = [argv[0]], [], []
    expect_value = False
    for tok in argv[1:]:
        if expect_value:
            opts.append(tok)
            expect_value = False
        elif tok == "--":
            continue
        elif tok in ("-h", "--help"):
            opts.append(tok)
        elif tok.startswith("--") and tok.split("=", 1)[0] in _VALUE_OPTIONS:
            opts.append(tok)
            expect_value = "=" not in tok
        else:
            positional.append(tok)
    return head + opts + (["--"] + positional if positional else [])


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_normalize_argv(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    variant = Variant(args.variant)
    try:
        if args.command == "eval":
            print(render(parse_element(args.expr, variant)))
            return 0
        if args.command == "mul":
            a = parse_element(args.left, variant)
            b = parse_element(args.right, variant)
            print(render(nr.mul(a, b)))
            return 0
        if args.command == "apply":
            zeta = parse_element(args.zeta, variant)
            x = parse_element(args.expr, variant)
            print(render(nr.f_eval(zeta, x)))
            return 0
        if args.command == "member":
            x = parse_element(args.expr, variant)
            if args.subgroup == "W":
                print("true" if nr.in_w(x) else "false")
                return 0
            if args.zeta is not None:
                zeta = parse_element(args.zeta, variant)
            elif variant is Variant.C_INT_OMEGA_BASE:
                zeta = parse_element("om(0)", variant)
            else:
                print("member --subgroup H needs --zeta under this variant",
                      file=sys.stderr)
                return 2
            print("true" if nr.in_h(zeta, x) else "false")
            return 0
        if args.command == "check":
            config = SampleConfig(seed=args.seed, count=args.count, max_level=args.depth)
            report = _run_suite(variant, args.suite, config)
            blob = write_report(report)
            if args.json_path:
                with open(args.json_path, "wb") as fh:
                    fh.write(blob)
            status = "PASS" if report.passed else "FAIL"
            print(f"{status} suite={report.suite_name} variant={variant.value} "
                  f"seed={config.seed} cases_run={report.cases_run} "
                  f"failures={len(report.failures)}")
            for w in report.witnesses:
                print(f"  witness: {w}")
            for f in report.failures[:5]:
                print(f"  failure: inputs={f['inputs']} expected={f['expected']} "
                      f"got={f['got']}")
            return 0 if report.passed else 1
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unhandled command {args.command}")
    return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
