"""Text and JSON interchange formats.

The facet file format is line-oriented and hand-editable:

    # optional comments
    vertices: 4
    facet: 1 2
    facet: 3 4

Zero facet lines mean the void complex; a bare ``facet:`` line is the
empty facet (the irrelevant complex when it is the only one).  Files may
contain duplicate or nested facets; they are normalized on load.  Emission
is canonical and byte-stable, so dualizing twice reproduces the normalized
input exactly.
"""
from __future__ import annotations

import json
from typing import Any

from .bitsets import vertices_of
from .complexes import SimplicialComplex
from .criteria import ClassReport
from .harness import HarnessConfig, HarnessReport
from .homology import FieldSpec

SCHEMA_VERSION = 1


class ComplexParseError(Exception):
    """Input file rejected; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


def parse_complex_text(text: str) -> SimplicialComplex:
    """Parse the facet file format, normalizing facets on load."""
    n: int | None = None
    facets: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if n is not None:
                raise ComplexParseError(lineno, "duplicate 'vertices:' header")
            body = line[len("vertices:"):].strip()
            try:
                n = int(body)
            except ValueError:
                raise ComplexParseError(
                    lineno, f"ambient size must be an integer, got {body!r}"
                ) from None
            if not 1 <= n <= 63:
                raise ComplexParseError(
                    lineno, f"ambient size must be in 1..63, got {n}"
                )
        elif line.startswith("facet:"):
            if n is None:
                raise ComplexParseError(
                    lineno, "'facet:' before the 'vertices:' header"
                )
            body = line[len("facet:"):].split()
            verts = []
            for tok in body:
                try:
                    v = int(tok)
                except ValueError:
                    raise ComplexParseError(
                        lineno, f"facet entry {tok!r} is not an integer"
                    ) from None
                if not 1 <= v <= n:
                    raise ComplexParseError(
                        lineno, f"vertex {v} outside 1..{n}"
                    )
                verts.append(v)
            facets.append(verts)
        else:
            raise ComplexParseError(lineno, f"unrecognized line {line!r}")
    if n is None:
        raise ComplexParseError(0, "missing 'vertices:' header")
    return SimplicialComplex.from_facets(facets, n)


def parse_complex_json(text: str) -> SimplicialComplex:
    """Parse the JSON alternative input: {"vertices": N, "facets": [[...]]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexParseError(e.lineno, f"invalid JSON: {e.msg}") from None
    if not isinstance(data, dict):
        raise ComplexParseError(0, "top-level JSON value must be an object")
    n = data.get("vertices")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ComplexParseError(0, "'vertices' must be an integer")
    if not 1 <= n <= 63:
        raise ComplexParseError(0, f"ambient size must be in 1..63, got {n}")
    raw_facets = data.get("facets", [])
    if not isinstance(raw_facets, list):
        raise ComplexParseError(0, "'facets' must be a list of vertex lists")
    facets = []
    for f in raw_facets:
        if not isinstance(f, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in f
        ):
            raise ComplexParseError(0, f"facet {f!r} must be a list of integers")
        for v in f:
            if not 1 <= v <= n:
                raise ComplexParseError(0, f"vertex {v} outside 1..{n}")
        facets.append(f)
    return SimplicialComplex.from_facets(facets, n)


def emit_complex_text(c: SimplicialComplex) -> str:
    """Canonical facet file, byte-stable: header then facets in order."""
    lines = [f"vertices: {c.n}"]
    for f in c.facets:
        verts = " ".join(str(v) for v in vertices_of(f))
        lines.append(f"facet: {verts}" if verts else "facet:")
    return "\n".join(lines) + "\n"


def field_from_string(s: str) -> FieldSpec:
    """Parse 'rational' or 'gf:P' into a field selector."""
    if s == "rational":
        return FieldSpec.rational()
    if s.startswith("gf:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise ValueError(f"bad GF(p) spec {s!r}") from None
        return FieldSpec.gf(p)
    raise ValueError(f"field must be 'rational' or 'gf:P', got {s!r}")


def report_json_dict(
    report: ClassReport, input_name: str, timings_ms: dict[str, int]
) -> dict[str, Any]:
    """The classification report object, keys in fixed schema order."""
    c = report.complex
    witnesses: dict[str, Any] | None = None
    if report.cm_witness is not None:
        face, degree = report.cm_witness
        witnesses = {
            "cm_violation": {
                "face": list(vertices_of(face)),
                "homology_degree": degree,
            }
        }
    table = (
        None
        if report.componentwise is None
        else {str(j): ok for j, ok in report.componentwise}
    )
    return {
        "schema": SCHEMA_VERSION,
        "input": input_name,
        "ambient_size": c.n,
        "field": str(report.field),
        "route": report.route,
        "verdict": report.verdict.value,
        "facet_cardinalities": sorted(c.facet_cardinalities()),
        "dual_generator_degrees": (
            None if report.dual_degrees is None else sorted(report.dual_degrees)
        ),
        "componentwise_table": table,
        "witnesses": witnesses,
        "timings_ms": timings_ms,
    }


def harness_json_dict(
    report: HarnessReport, cfg: HarnessConfig, timings_ms: dict[str, int]
) -> dict[str, Any]:
    """The harness report object, keys in fixed schema order."""
    return {
        "schema": SCHEMA_VERSION,
        "mode": cfg.mode,
        "vertices": cfg.n,
        "fields": [str(f) for f in cfg.fields],
        "checks": sorted(cfg.checks),
        "complexes_checked": report.complexes_checked,
        "skipped_void": report.skipped_void,
        "check_passes": dict(sorted(report.check_passes.items())),
        "check_failures": dict(sorted(report.check_failures.items())),
        "verdict_histogram": {
            f: dict(sorted(h.items()))
            for f, h in sorted(report.verdict_histogram.items())
        },
        "failures": [
            {
                "check": chk,
                "field": fld,
                "facets": [list(f) for f in facets],
                "detail": detail,
            }
            for (chk, fld, facets, detail) in report.failures
        ],
        "timings_ms": timings_ms,
    }
