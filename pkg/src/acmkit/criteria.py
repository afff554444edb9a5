"""Ring-theoretic predicates realized combinatorially, and the classifier.

Cohen-Macaulayness is decided by Reisner's criterion (vanishing reduced
link homology below top dimension).  Sequential CM-ness has two
independent executable routes: Duval's pure-skeleton test, and
Herzog-Hibi componentwise linearity of the dual face ideal.  The
approximately-CM verdict likewise has two routes: the skeleton route plus
the two-consecutive-facet-cardinalities condition, and the dual route via
componentwise linearity with generators in two consecutive degrees.  The
classifier can run both routes and raises `RouteDisagreement` if they
ever differ; that exception is the falsification signal the verification
harness listens for.

Predicates accept an optional ``memo`` dict.  All values involved are
immutable, so memoization is safe; a memo must stay confined to one
evaluation context (one classify call, one harness run) and is never
shared implicitly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .homology import FieldSpec, boundary_matrix, rank
from .ideals import (
    SquarefreeIdeal,
    alexander_dual,
    complex_of_ideal,
    generation_degrees,
    ideal_of_complex,
    squarefree_component,
)

_MEMO_LIMIT = 1_500_000  # entries; cleared wholesale past this (n=6 sweeps)


class Verdict(enum.Enum):
    CM = "CM"
    ACM = "ACM"
    SCM_NOT_ACM = "SCM_NOT_ACM"
    NOT_SCM = "NOT_SCM"


@dataclass(frozen=True, slots=True)
class ClassReport:
    """Classification verdict plus the witnesses that make it checkable.

    ``cm_witness`` is the first failing (face, homology degree) pair of the
    Reisner scan when the complex is not CM; ``dual_degrees`` are the
    generation degrees of the dual face ideal; ``componentwise`` maps each
    nonzero degree slice of that ideal to its linearity verdict.
    """

    verdict: Verdict
    route: str
    field: FieldSpec
    complex: SimplicialComplex
    cm_witness: tuple[int, int] | None = None
    dual_degrees: frozenset[int] | None = None
    componentwise: tuple[tuple[int, bool], ...] | None = None


class RouteDisagreement(Exception):
    """The homological and dual-algebraic routes returned different verdicts.

    This must never fire; a single instance falsifies the equivalence the
    package exists to check.
    """

    def __init__(self, report_a: ClassReport, report_b: ClassReport):
        self.report_a = report_a
        self.report_b = report_b
        super().__init__(
            f"route a says {report_a.verdict.value}, "
            f"route b says {report_b.verdict.value} "
            f"on {report_a.complex!r} over {report_a.field}"
        )


@dataclass(frozen=True, slots=True)
class BettiTable:
    """Graded Betti numbers of an ideal: (homological index, degree) -> count."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def beta(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def generator_degrees(self) -> dict[int, int]:
        """Degree -> count row at homological index 0 (the minimal generators)."""
        return {j: v for (i, j), v in self.entries if i == 0}

    def is_single_strand(self, degree: int) -> bool:
        """True when every nonzero entry sits on the strand j = i + degree."""
        return all(j == i + degree for (i, j), v in self.entries if v)


# -- memoized internal layers ------------------------------------------------


def _memo_put(memo: dict, key, value):
    if len(memo) >= _MEMO_LIMIT:
        memo.clear()
    memo[key] = value
    return value


def _faces(c: SimplicialComplex, memo: dict) -> list[int]:
    key = ("faces", c)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, c.faces())
    return got


def _link(c: SimplicialComplex, s: int, memo: dict) -> SimplicialComplex:
    key = ("link", c, s)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, c.link(s))
    return got


def _bmatrix(c: SimplicialComplex, k: int, memo: dict):
    key = ("bmat", c, k)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, boundary_matrix(c, k))
    return got


def _brank(c: SimplicialComplex, k: int, field: FieldSpec, memo: dict) -> int:
    key = ("brank", c, k, field)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, rank(_bmatrix(c, k, memo), field))
    return got


def _betti(c: SimplicialComplex, i: int, field: FieldSpec, memo: dict) -> int:
    key = ("betti", c, i, field)
    got = memo.get(key)
    if got is not None:
        return got
    if i == -1:
        val = 1 - _brank(c, 0, field, memo)
    else:
        n_faces = len(c.faces_of_dim(i))
        if n_faces == 0:
            val = 0
        else:
            val = (
                n_faces
                - _brank(c, i, field, memo)
                - _brank(c, i + 1, field, memo)
            )
    return _memo_put(memo, key, val)


def _cm(
    c: SimplicialComplex, field: FieldSpec, memo: dict
) -> tuple[bool, tuple[int, int] | None]:
    """Reisner scan in canonical face order; returns (verdict, witness)."""
    key = ("cm", c, field)
    got = memo.get(key)
    if got is not None:
        return got
    result: tuple[bool, tuple[int, int] | None] = (True, None)
    for s in _faces(c, memo):
        lk = _link(c, s, memo)
        top = lk.dimension  # never void: a link always contains the empty face
        for i in range(-1, top):
            if _betti(lk, i, field, memo):
                result = (False, (s, i))
                break
        if not result[0]:
            break
    return _memo_put(memo, key, result)


def _dual(c: SimplicialComplex, memo: dict) -> SimplicialComplex:
    key = ("dual", c)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, alexander_dual(c))
    return got


def _dual_ideal(c: SimplicialComplex, memo: dict) -> SquarefreeIdeal:
    key = ("dualideal", c)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, ideal_of_complex(_dual(c, memo)))
    return got


def _er_complex(ideal: SquarefreeIdeal, memo: dict) -> SimplicialComplex:
    """Dual of the ideal's complex, the object whose CM-ness decides linearity."""
    key = ("ercomplex", ideal)
    got = memo.get(key)
    if got is None:
        got = _memo_put(memo, key, _dual(complex_of_ideal(ideal), memo))
    return got


# -- public predicates --------------------------------------------------------


def is_cohen_macaulay(
    c: SimplicialComplex, field: FieldSpec, memo: dict | None = None
) -> tuple[bool, tuple[int, int] | None]:
    """Reisner's criterion over the field.

    True iff every face's link has vanishing reduced homology strictly
    below the link's dimension.  On failure the witness is the first
    offending (face, homology degree) pair in canonical face order.
    """
    if c.is_void:
        raise ValueError("void complex: CM-ness undefined")
    return _cm(c, field, {} if memo is None else memo)


def has_linear_resolution_er(
    ideal: SquarefreeIdeal, field: FieldSpec, memo: dict | None = None
) -> bool:
    """Linear-resolution test routed through Eagon-Reiner.

    An ideal generated in several degrees cannot have a linear resolution
    and returns False immediately; otherwise the verdict is the
    Cohen-Macaulayness of the Alexander dual of the ideal's complex.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("linear resolution test needs a proper nonzero ideal")
    memo = {} if memo is None else memo
    if len(generation_degrees(ideal)) > 1:
        return False
    return _cm(_er_complex(ideal, memo), field, memo)[0]


def graded_betti_hochster(
    ideal: SquarefreeIdeal, field: FieldSpec, memo: dict | None = None
) -> BettiTable:
    """Graded Betti numbers of the ideal by summing reduced homology of
    induced subcomplexes over all vertex subsets.

    Independent of the Eagon-Reiner route, hence usable as its
    cross-check: exponential in the ambient size, meant for small inputs.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("Betti table needs a proper nonzero ideal")
    memo = {} if memo is None else memo
    sigma = complex_of_ideal(ideal)
    table: dict[tuple[int, int], int] = {}
    for a in range(1, 1 << ideal.n):
        j = a.bit_count()
        ind = sigma.induced(a)
        top = min(ind.dimension, j - 2)
        for h in range(-1, top + 1):
            b = _betti(ind, h, field, memo)
            if b:
                i = j - h - 2
                table[(i, j)] = table.get((i, j), 0) + b
    entries = tuple(sorted(table.items()))
    return BettiTable(entries)


def is_componentwise_linear(
    ideal: SquarefreeIdeal, field: FieldSpec, memo: dict | None = None
) -> tuple[bool, tuple[tuple[int, bool], ...]]:
    """Linearity of every nonzero squarefree degree slice of the ideal.

    Returns the verdict plus the per-degree table; the zero ideal is
    vacuously componentwise linear.
    """
    if ideal.is_unit:
        raise ValueError("componentwise linearity undefined for the unit ideal")
    memo = {} if memo is None else memo
    rows: list[tuple[int, bool]] = []
    for j in range(1, ideal.n + 1):
        sliced = squarefree_component(ideal, j)
        if sliced.is_zero:
            continue
        rows.append((j, has_linear_resolution_er(sliced, field, memo)))
    return all(ok for _, ok in rows), tuple(rows)


def is_scm_skeleton(
    c: SimplicialComplex, field: FieldSpec, memo: dict | None = None
) -> bool:
    """Sequential CM-ness via Duval's criterion: every pure skeleton is CM."""
    if c.is_void:
        raise ValueError("void complex: SCM-ness undefined")
    memo = {} if memo is None else memo
    top = c.dimension
    return all(
        _cm(c.pure_skeleton(i), field, memo)[0] for i in range(0, top + 1)
    )


def is_scm_dual(
    c: SimplicialComplex, field: FieldSpec, memo: dict | None = None
) -> bool:
    """Sequential CM-ness via Herzog-Hibi: the dual face ideal is
    componentwise linear."""
    if c.is_void:
        raise ValueError("void complex: SCM-ness undefined")
    if c.is_full_simplex:
        raise ValueError("full simplex: dual ideal is zero, handled upstream")
    memo = {} if memo is None else memo
    return is_componentwise_linear(_dual_ideal(c, memo), field, memo)[0]


def is_acm_route_a(
    c: SimplicialComplex, field: FieldSpec, memo: dict | None = None
) -> bool:
    """Approximately CM, homological route: a non-CM sequentially-CM complex
    whose facet cardinalities are exactly two consecutive values."""
    if c.is_void:
        raise ValueError("void complex: ACM-ness undefined")
    memo = {} if memo is None else memo
    cards = c.facet_cardinalities()
    d = max(cards)
    if cards != {d - 1, d}:
        return False
    if _cm(c, field, memo)[0]:
        return False
    return is_scm_skeleton(c, field, memo)


def is_acm_route_b(
    c: SimplicialComplex, field: FieldSpec, memo: dict | None = None
) -> bool:
    """Approximately CM, dual-algebraic route: the dual face ideal is
    componentwise linear and generated in two consecutive degrees."""
    if c.is_void:
        raise ValueError("void complex: ACM-ness undefined")
    if c.is_full_simplex:
        raise ValueError("full simplex: dual route undefined, handled upstream")
    memo = {} if memo is None else memo
    ideal = _dual_ideal(c, memo)
    degs = generation_degrees(ideal)
    if len(degs) != 2 or max(degs) - min(degs) != 1:
        return False
    return is_componentwise_linear(ideal, field, memo)[0]


def classify(
    c: SimplicialComplex,
    field: FieldSpec,
    route: str = "both",
    memo: dict | None = None,
) -> ClassReport:
    """Full verdict: CM, else ACM, else SCM_NOT_ACM, else NOT_SCM.

    With route "both" the homological and dual verdicts are computed
    independently and must agree; a mismatch raises RouteDisagreement
    carrying both sub-reports.  The full simplex short-circuits to CM, so
    the dual route never meets a zero ideal.
    """
    if route not in ("a", "b", "both"):
        raise ValueError(f"route must be 'a', 'b' or 'both', got {route!r}")
    if c.is_void:
        raise ValueError("void complex cannot be classified")
    memo = {} if memo is None else memo

    cm, witness = _cm(c, field, memo)
    if cm:
        degs = (
            None
            if c.is_full_simplex
            else frozenset(generation_degrees(_dual_ideal(c, memo)))
        )
        return ClassReport(Verdict.CM, route, field, c, None, degs, None)

    report_a = report_b = None
    if route in ("a", "both"):
        cards = c.facet_cardinalities()
        d = max(cards)
        scm_a = is_scm_skeleton(c, field, memo)
        if scm_a and cards == {d - 1, d}:
            verdict_a = Verdict.ACM
        elif scm_a:
            verdict_a = Verdict.SCM_NOT_ACM
        else:
            verdict_a = Verdict.NOT_SCM
        report_a = ClassReport(verdict_a, "a", field, c, witness, None, None)
    if route in ("b", "both"):
        ideal = _dual_ideal(c, memo)
        degs = frozenset(generation_degrees(ideal))
        cwl, table = is_componentwise_linear(ideal, field, memo)
        if cwl and len(degs) == 2 and max(degs) - min(degs) == 1:
            verdict_b = Verdict.ACM
        elif cwl:
            verdict_b = Verdict.SCM_NOT_ACM
        else:
            verdict_b = Verdict.NOT_SCM
        report_b = ClassReport(verdict_b, "b", field, c, witness, degs, table)

    if route == "a":
        return report_a
    if route == "b":
        return report_b
    if report_a.verdict != report_b.verdict:
        raise RouteDisagreement(report_a, report_b)
    return ClassReport(
        report_a.verdict,
        "both",
        field,
        c,
        witness,
        report_b.dual_degrees,
        report_b.componentwise,
    )
