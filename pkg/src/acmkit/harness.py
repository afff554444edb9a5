"""Exhaustive and randomized cross-checking of the classification routes.

The exhaustive mode streams every simplicial complex on the ambient vertex
set (every antichain of subsets, void and irrelevant included) by canonical
backtracking over subsets in decreasing cardinality-lex order with bitset
domination pruning; nothing is ever stored.  Checks are evaluated per
complex and per field, failures are collected as data, and the final
report is a commutative merge of shard reports, so the result is identical
for any worker count.

Check names:

* ``involution``  -- the Alexander dual is an involution (runs on the void
  complex too; field-independent).
* ``euler``       -- boundary-of-boundary vanishes, and the alternating
  Betti sum equals the alternating face-count sum, per field.
* ``er``          -- Reisner CM-ness of the complex equals linearity of its
  dual face ideal (Eagon-Reiner).
* ``hh``          -- skeleton sequential-CM equals dual componentwise
  linearity (Herzog-Hibi).
* ``main``        -- the two approximately-CM routes agree, i.e. classify
  with route "both" never raises RouteDisagreement.
* ``betti``       -- the Hochster Betti table is coherent: its degree-0 row
  counts the minimal generators, and for equigenerated dual ideals its
  single-strand test agrees with the Eagon-Reiner linearity verdict.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field as dataclass_field
from typing import Iterable, Iterator

from .bitsets import canon_key, full_mask, vertices_of
from .complexes import SimplicialComplex
from .criteria import (
    RouteDisagreement,
    _betti,
    _bmatrix,
    _cm,
    _dual,
    _dual_ideal,
    classify,
    graded_betti_hochster,
    has_linear_resolution_er,
    is_scm_dual,
    is_scm_skeleton,
)
from .homology import FieldSpec
from .ideals import generation_degrees

ALL_CHECKS = frozenset({"er", "hh", "main", "involution", "euler", "betti"})

#: One failure record: (check, field, facets as vertex tuples, detail).
Failure = tuple[str, str, tuple[tuple[int, ...], ...], str]


@dataclass(frozen=True)
class HarnessConfig:
    """What to sweep and what to check.

    Exhaustive mode enumerates all complexes and needs n <= 6; random mode
    samples ``count`` seeded complexes and allows n up to 20.
    """

    n: int
    fields: tuple[FieldSpec, ...] = (FieldSpec.rational(),)
    mode: str = "exhaustive"
    seed: int = 0
    count: int = 100
    density: float = 0.3
    checks: frozenset[str] = ALL_CHECKS
    workers: int = 1

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if self.mode == "exhaustive" and not 1 <= self.n <= 6:
            raise ValueError("exhaustive mode requires 1 <= n <= 6")
        if self.mode == "random" and not 1 <= self.n <= 20:
            raise ValueError("random mode requires 1 <= n <= 20")
        if not self.fields:
            raise ValueError("at least one field is required")
        bad = set(self.checks) - ALL_CHECKS
        if bad:
            raise ValueError(f"unknown checks: {sorted(bad)}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must be within 0..1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.mode == "random" and self.count < 0:
            raise ValueError("count must be >= 0")


@dataclass
class HarnessReport:
    """Merged sweep outcome; merging is commutative and associative."""

    complexes_checked: int = 0
    skipped_void: int = 0
    check_passes: dict[str, int] = dataclass_field(default_factory=dict)
    check_failures: dict[str, int] = dataclass_field(default_factory=dict)
    verdict_histogram: dict[str, dict[str, int]] = dataclass_field(
        default_factory=dict
    )
    failures: tuple[Failure, ...] = ()

    @property
    def total_failures(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merged(self, other: "HarnessReport") -> "HarnessReport":
        passes = dict(self.check_passes)
        for k, v in other.check_passes.items():
            passes[k] = passes.get(k, 0) + v
        fails = dict(self.check_failures)
        for k, v in other.check_failures.items():
            fails[k] = fails.get(k, 0) + v
        hist = {f: dict(h) for f, h in self.verdict_histogram.items()}
        for f, h in other.verdict_histogram.items():
            mine = hist.setdefault(f, {})
            for k, v in h.items():
                mine[k] = mine.get(k, 0) + v
        return HarnessReport(
            self.complexes_checked + other.complexes_checked,
            self.skipped_void + other.skipped_void,
            passes,
            fails,
            hist,
            tuple(sorted(self.failures + other.failures)),
        )


# -- enumeration -------------------------------------------------------------


def _ordered_subsets(n: int) -> list[int]:
    """All subsets of 1..n in decreasing cardinality, then lex on members."""
    return sorted(
        range(1 << n), key=lambda m: (-m.bit_count(), vertices_of(m))
    )


def _antichain_extensions(
    subsets: list[int], start: int, chosen: list[int]
) -> Iterator[tuple[int, ...]]:
    """DFS over antichains extending ``chosen`` with elements from
    ``subsets[start:]``; yields ``chosen`` itself first.

    Decreasing cardinality order means a candidate can only be dominated
    by (contained in) an already chosen set, so one subset test per chosen
    element suffices.
    """
    yield tuple(chosen)
    for i in range(start, len(subsets)):
        s = subsets[i]
        if any(s | f == f for f in chosen):
            continue
        chosen.append(s)
        yield from _antichain_extensions(subsets, i + 1, chosen)
        chosen.pop()


def _as_complex(n: int, antichain: tuple[int, ...]) -> SimplicialComplex:
    # already an antichain; only the canonical sort is needed
    return SimplicialComplex(n, tuple(sorted(antichain, key=canon_key)))


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on ambient 1..n exactly once, in a fixed
    order, starting with the void complex.  Counts are Dedekind numbers."""
    if not 1 <= n <= 6:
        raise ValueError("exhaustive enumeration requires 1 <= n <= 6")
    subsets = _ordered_subsets(n)
    for antichain in _antichain_extensions(subsets, 0, []):
        yield _as_complex(n, antichain)


def _shard_tasks(n: int, depth: int) -> list[tuple]:
    """Partition the enumeration tree by fixing the top-cardinality prefix.

    Returns exact tasks (a single antichain each) for prefixes shorter
    than ``depth`` and subtree tasks for prefixes of length ``depth``.
    """
    subsets = _ordered_subsets(n)
    tasks: list[tuple] = [("exact", ())]

    def build(prefix: tuple[int, ...], start: int, level: int) -> None:
        for i in range(start, len(subsets)):
            s = subsets[i]
            if any(s | f == f for f in prefix):
                continue
            extended = prefix + (s,)
            if level + 1 == depth:
                tasks.append(("subtree", extended, i + 1))
            else:
                tasks.append(("exact", extended))
                build(extended, i + 1, level + 1)

    build((), 0, 0)
    return tasks


def _iter_shard(n: int, task: tuple) -> Iterator[SimplicialComplex]:
    if task[0] == "exact":
        yield _as_complex(n, task[1])
        return
    _, prefix, start = task
    subsets = _ordered_subsets(n)
    for antichain in _antichain_extensions(subsets, start, list(prefix)):
        yield _as_complex(n, antichain)


# -- randomized generation ----------------------------------------------------


def _derived_rng(n: int, seed: int, density: float) -> random.Random:
    digest = hashlib.sha256(f"{n}|{seed}|{density!r}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_complex(n: int, seed: int, density: float) -> SimplicialComplex:
    """Deterministic seeded complex: each subset enters the candidate facet
    pool independently, with probability shaped to favor mid-cardinality
    sets, then the pool is normalized to an antichain.

    Density 0 gives the void complex and density 1 the full simplex.
    """
    if not 1 <= n <= 20:
        raise ValueError("random complexes support 1 <= n <= 20")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be within 0..1")
    rng = _derived_rng(n, seed, density)
    picked = []
    for m in sorted(range(1 << n), key=canon_key):
        # exponent 1 at mid cardinality, growing toward the extremes
        exponent = 1.0 + abs(2 * m.bit_count() - n) / 2.0
        if rng.random() < density**exponent:
            picked.append(m)
    return SimplicialComplex.from_masks(picked, n)


def _item_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# -- per-complex checking ------------------------------------------------------


def _compose_is_zero(m1, m2) -> bool:
    """Entrywise integer check that m1 @ m2 == 0."""
    if not m1.cols or not m2.cols:
        return True
    for j in range(len(m2.cols)):
        col = [m2.entries[r][j] for r in range(len(m2.rows))]
        for r in range(len(m1.rows)):
            row = m1.entries[r]
            if sum(row[k] * col[k] for k in range(len(col))):
                return False
    return True


def _check_one(
    c: SimplicialComplex,
    cfg: HarnessConfig,
    memo: dict,
    report: HarnessReport,
) -> None:
    checks = cfg.checks
    facets_repr = tuple(vertices_of(f) for f in c.facets)
    failures: list[Failure] = []

    def record(check: str, fld: str, ok: bool, detail: str = "") -> None:
        if ok:
            report.check_passes[check] = report.check_passes.get(check, 0) + 1
        else:
            report.check_failures[check] = (
                report.check_failures.get(check, 0) + 1
            )
            failures.append((check, fld, facets_repr, detail))

    report.complexes_checked += 1

    if "involution" in checks:
        double = _dual(_dual(c, memo), memo)
        record("involution", "-", double == c, f"(dual dual) = {double!r}")

    if c.is_void:
        report.skipped_void += 1
        report.failures = report.failures + tuple(failures)
        return

    if "euler" in checks:
        top = int(c.dimension)
        dd_ok = all(
            _compose_is_zero(_bmatrix(c, k, memo), _bmatrix(c, k + 1, memo))
            for k in range(0, top + 1)
        )
        if not dd_ok:
            record("euler", "-", False, "boundary composition nonzero")
        else:
            chi = c.reduced_euler_characteristic()
            for fld in cfg.fields:
                alt = sum(
                    (-1) ** i * _betti(c, i, fld, memo)
                    for i in range(-1, top + 1)
                )
                record(
                    "euler",
                    str(fld),
                    alt == chi,
                    f"betti sum {alt} != face sum {chi}",
                )

    dual_proper = not c.is_full_simplex

    for fld in cfg.fields:
        if "er" in checks and dual_proper:
            lhs = _cm(c, fld, memo)[0]
            rhs = has_linear_resolution_er(_dual_ideal(c, memo), fld, memo)
            record(
                "er", str(fld), lhs == rhs, f"reisner={lhs} dual-linear={rhs}"
            )
        if "hh" in checks and dual_proper:
            lhs = is_scm_skeleton(c, fld, memo)
            rhs = is_scm_dual(c, fld, memo)
            record(
                "hh", str(fld), lhs == rhs, f"skeleton={lhs} dual={rhs}"
            )
        if "main" in checks:
            hist = report.verdict_histogram.setdefault(str(fld), {})
            try:
                verdict = classify(c, fld, "both", memo).verdict.value
                hist[verdict] = hist.get(verdict, 0) + 1
                record("main", str(fld), True)
            except RouteDisagreement as e:
                record(
                    "main",
                    str(fld),
                    False,
                    f"route a {e.report_a.verdict.value}"
                    f" != route b {e.report_b.verdict.value}",
                )
        if "betti" in checks and dual_proper:
            ideal = _dual_ideal(c, memo)
            table = graded_betti_hochster(ideal, fld, memo)
            by_degree: dict[int, int] = {}
            for g in ideal.generators:
                d = g.bit_count()
                by_degree[d] = by_degree.get(d, 0) + 1
            ok = table.generator_degrees() == by_degree
            detail = "degree-0 row disagrees with minimal generators"
            degs = generation_degrees(ideal)
            if ok and len(degs) == 1:
                strand = table.is_single_strand(next(iter(degs)))
                er = has_linear_resolution_er(ideal, fld, memo)
                ok = strand == er
                detail = f"strand={strand} eagon-reiner={er}"
            record("betti", str(fld), ok, detail)

    report.failures = report.failures + tuple(failures)


# -- execution ----------------------------------------------------------------


def _run_inline(
    cfg: HarnessConfig, complexes: Iterable[SimplicialComplex], memo: dict
) -> HarnessReport:
    report = HarnessReport()
    for c in complexes:
        _check_one(c, cfg, memo, report)
    report.failures = tuple(sorted(report.failures))
    return report


_WORKER_MEMO: dict | None = None


def _worker_init() -> None:
    global _WORKER_MEMO
    _WORKER_MEMO = {}


def _task_complexes(
    cfg: HarnessConfig, task: tuple
) -> Iterable[SimplicialComplex]:
    if task[0] == "randrange":
        _, lo, hi = task
        return (
            random_complex(cfg.n, _item_seed(cfg.seed, i), cfg.density)
            for i in range(lo, hi)
        )
    return _iter_shard(cfg.n, task)


def _run_task(payload: tuple[HarnessConfig, tuple]) -> HarnessReport:
    cfg, task = payload
    memo = _WORKER_MEMO if _WORKER_MEMO is not None else {}
    return _run_inline(cfg, _task_complexes(cfg, task), memo)


def _tasks_for(cfg: HarnessConfig) -> list[tuple]:
    if cfg.mode == "exhaustive":
        depth = 1 if cfg.n <= 5 else 2
        return _shard_tasks(cfg.n, depth)
    step = max(1, -(-cfg.count // max(cfg.workers * 4, 1)))
    return [
        ("randrange", lo, min(lo + step, cfg.count))
        for lo in range(0, cfg.count, step)
    ]


def run(cfg: HarnessConfig) -> HarnessReport:
    """Execute the sweep and return the merged report.

    The report is a pure function of the config: partitioning across
    workers never changes it.
    """
    tasks = _tasks_for(cfg)
    if cfg.workers == 1:
        memo: dict = {}
        report = HarnessReport()
        for task in tasks:
            report = report.merged(
                _run_inline(cfg, _task_complexes(cfg, task), memo)
            )
        return report
    import multiprocessing as mp

    report = HarnessReport()
    with mp.Pool(cfg.workers, initializer=_worker_init) as pool:
        for partial in pool.imap_unordered(
            _run_task, [(cfg, t) for t in tasks], chunksize=1
        ):
            report = report.merged(partial)
    return report
