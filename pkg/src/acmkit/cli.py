"""Command-line interface.

Subcommands: check, dual, ideal, homology, betti, verify.  Exit codes are
a fixed contract: 0 for any verdict, 2 for parse errors, 3 for a route
disagreement, 4 for domain violations (e.g. Betti table of the full
simplex), 5 when the verification sweep records failures.  ACMKIT_JOBS
sets the default worker count for verify; the --jobs flag overrides it.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from .bitsets import vertices_of
from .complexes import SimplicialComplex
from .criteria import RouteDisagreement, classify, graded_betti_hochster
from .formats import (
    ComplexParseError,
    emit_complex_text,
    field_from_string,
    harness_json_dict,
    parse_complex_json,
    parse_complex_text,
    report_json_dict,
)
from .harness import ALL_CHECKS, HarnessConfig, run
from .homology import FieldSpec, reduced_betti
from .ideals import alexander_dual, ideal_of_complex

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISAGREEMENT = 3
EXIT_DOMAIN = 4
EXIT_VERIFY_FAILED = 5


def _field_arg(s: str) -> FieldSpec:
    try:
        return field_from_string(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _checks_arg(s: str) -> frozenset[str]:
    checks = frozenset(tok.strip().lower() for tok in s.split(",") if tok.strip())
    unknown = checks - ALL_CHECKS
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown checks {sorted(unknown)}; pick from {sorted(ALL_CHECKS)}"
        )
    return checks or ALL_CHECKS


def _default_jobs() -> int:
    env = os.environ.get("ACMKIT_JOBS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _load_complex(path: str, json_in: bool) -> SimplicialComplex:
    text = Path(path).read_text(encoding="utf-8")
    return parse_complex_json(text) if json_in else parse_complex_text(text)


def _print_human_report(d: dict) -> None:
    print(f"input: {d['input']}")
    print(f"ambient size: {d['ambient_size']}")
    print(f"field: {d['field']}")
    print(f"route: {d['route']}")
    print(f"verdict: {d['verdict']}")
    print("facet cardinalities:", " ".join(map(str, d["facet_cardinalities"])))
    degs = d["dual_generator_degrees"]
    if degs is not None:
        print("dual generator degrees:", " ".join(map(str, degs)))
    table = d["componentwise_table"]
    if table is not None:
        cells = " ".join(
            f"{j}={'linear' if ok else 'nonlinear'}" for j, ok in sorted(
                table.items(), key=lambda kv: int(kv[0])
            )
        )
        print(f"componentwise slices: {cells}")
    if d["witnesses"] is not None:
        viol = d["witnesses"]["cm_violation"]
        face = "{" + " ".join(map(str, viol["face"])) + "}"
        print(
            "cm violation: link of face "
            f"{face} has homology in degree {viol['homology_degree']}"
        )
    print(f"elapsed: {d['timings_ms']['classify']} ms")


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        c = _load_complex(args.file, args.json_in)
    except ComplexParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.monotonic()
    try:
        report = classify(c, args.field, args.route)
    except RouteDisagreement as e:
        print(f"ROUTE DISAGREEMENT: {e}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except ValueError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    elapsed = int((time.monotonic() - t0) * 1000)
    d = report_json_dict(report, args.file, {"classify": elapsed})
    if args.json:
        print(json.dumps(d, indent=2))
    else:
        _print_human_report(d)
    return EXIT_OK


def _cmd_dual(args: argparse.Namespace) -> int:
    try:
        c = _load_complex(args.file, args.json_in)
    except ComplexParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(emit_complex_text(alexander_dual(c)))
    return EXIT_OK


def _cmd_ideal(args: argparse.Namespace) -> int:
    try:
        c = _load_complex(args.file, args.json_in)
    except ComplexParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        ideal = ideal_of_complex(c)
    except ValueError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    for g in ideal.generators:
        print("gen:", " ".join(map(str, vertices_of(g))))
    return EXIT_OK


def _cmd_homology(args: argparse.Namespace) -> int:
    try:
        c = _load_complex(args.file, args.json_in)
    except ComplexParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    if c.is_void:
        print("domain error: void complex has no homology", file=sys.stderr)
        return EXIT_DOMAIN
    for i in range(-1, int(c.dimension) + 1):
        print(f"betti {i}: {reduced_betti(c, i, args.field)}")
    return EXIT_OK


def _cmd_betti(args: argparse.Namespace) -> int:
    try:
        c = _load_complex(args.file, args.json_in)
    except ComplexParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        ideal = ideal_of_complex(alexander_dual(c))
        table = graded_betti_hochster(ideal, args.field)
    except ValueError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    for (i, j), v in table.entries:
        print(f"beta {i} {j}: {v}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    fields = tuple(args.field) if args.field else (FieldSpec.rational(),)
    try:
        cfg = HarnessConfig(
            n=args.vertices,
            fields=fields,
            mode=args.mode,
            seed=args.seed,
            count=args.count,
            density=args.density,
            checks=args.checks,
            workers=args.jobs,
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.monotonic()
    report = run(cfg)
    elapsed = int((time.monotonic() - t0) * 1000)
    if args.json:
        print(json.dumps(harness_json_dict(report, cfg, {"run": elapsed}), indent=2))
    else:
        print(f"{report.complexes_checked} checked, {report.total_failures} failures")
        print(f"skipped void: {report.skipped_void}")
        for name in sorted(cfg.checks):
            p = report.check_passes.get(name, 0)
            f = report.check_failures.get(name, 0)
            print(f"check {name}: {p} passed, {f} failed")
        for fld, hist in sorted(report.verdict_histogram.items()):
            cells = " ".join(f"{k}={v}" for k, v in sorted(hist.items()))
            print(f"verdicts over {fld}: {cells}")
        print(f"elapsed: {elapsed} ms")
    if report.failures:
        outdir = Path(tempfile.mkdtemp(prefix="acmkit-failures-"))
        shown = 0
        for idx, (check, fld, facets, detail) in enumerate(report.failures):
            c = SimplicialComplex.from_facets(facets, cfg.n)
            body = (
                f"# check: {check}\n# field: {fld}\n# detail: {detail}\n"
                + emit_complex_text(c)
            )
            path = outdir / f"{idx:04d}.complex"
            path.write_text(body, encoding="utf-8")
            if shown < 20:
                print(f"FAIL {check} [{fld}] {detail} -> {path}", file=sys.stderr)
                shown += 1
        if len(report.failures) > shown:
            print(
                f"... and {len(report.failures) - shown} more in {outdir}",
                file=sys.stderr,
            )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acmkit",
        description=(
            "Classify simplicial complexes (Cohen-Macaulay, approximately CM, "
            "sequentially CM) and cross-verify the dual-route equivalences."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_cmd(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="facet file (or JSON with --json-in)")
        p.add_argument(
            "--json-in",
            action="store_true",
            help='input is JSON: {"vertices": N, "facets": [[...]]}',
        )
        return p

    p = add_file_cmd("check", "classify a complex and print the verdict")
    p.add_argument("--field", type=_field_arg, default=FieldSpec.rational(),
                   help="rational (default) or gf:P")
    p.add_argument("--route", choices=("a", "b", "both"), default="both")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=_cmd_check)

    p = add_file_cmd("dual", "emit the Alexander dual as a facet file")
    p.set_defaults(func=_cmd_dual)

    p = add_file_cmd("ideal", "emit the Stanley-Reisner ideal generators")
    p.set_defaults(func=_cmd_ideal)

    p = add_file_cmd("homology", "emit reduced Betti numbers per dimension")
    p.add_argument("--field", type=_field_arg, default=FieldSpec.rational())
    p.set_defaults(func=_cmd_homology)

    p = add_file_cmd("betti", "emit the Hochster Betti table of the dual ideal")
    p.add_argument("--field", type=_field_arg, default=FieldSpec.rational())
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("verify", help="run the exhaustive/random sweep")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument(
        "--field",
        type=_field_arg,
        action="append",
        help="repeatable; defaults to rational",
    )
    p.add_argument(
        "--checks",
        type=_checks_arg,
        default=ALL_CHECKS,
        help=f"comma list from {sorted(ALL_CHECKS)}; default all",
    )
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())
