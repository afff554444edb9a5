"""Reduced simplicial homology dimensions over a selectable field.

Betti numbers come from two boundary-matrix ranks, never from a Smith
normal form: rational ranks use fraction-free integer elimination, GF(p)
ranks use modular elimination, and GF(2) gets a bit-parallel path because
the exhaustive harness calls it millions of times.  An integer Smith
normal form is still provided, purely as a torsion oracle for tests and
demos.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from .complexes import SimplicialComplex
from .bitsets import vertices_of


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """Coefficient field: the rationals (characteristic 0) or GF(p).

    The characteristic is validated at construction; primes up to 2^31
    are accepted.
    """

    characteristic: int

    RATIONAL: ClassVar["FieldSpec"]

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if p >= 1 << 31:
            raise ValueError(f"prime {p} too large (must be < 2^31)")
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec(0)

    @staticmethod
    def gf(p: int) -> "FieldSpec":
        spec = FieldSpec(p)
        if p == 0:
            raise ValueError("GF(p) needs a prime, not 0")
        return spec

    def __str__(self) -> str:
        return "rational" if self.characteristic == 0 else f"gf:{self.characteristic}"


FieldSpec.RATIONAL = FieldSpec(0)


@dataclass(frozen=True, slots=True)
class BoundaryMatrix:
    """Signed incidence matrix from k-faces to (k-1)-faces.

    Rows and columns are faces in canonical order; the entry for (row t,
    column s) is (-1)^p when t is s with its p-th sorted vertex removed,
    else 0.  k = 0 produces the 1 x #vertices augmentation row indexed by
    the empty face.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))


def boundary_matrix(c: SimplicialComplex, k: int) -> BoundaryMatrix:
    """Boundary map from dimension k to dimension k-1 of a non-void complex."""
    if c.is_void:
        raise ValueError("void complex has no boundary matrices")
    if k < 0:
        raise ValueError(f"boundary index must be >= 0, got {k}")
    rows = tuple(c.faces_of_dim(k - 1))
    cols = tuple(c.faces_of_dim(k))
    row_index = {m: i for i, m in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        sign = 1
        for v in vertices_of(s):
            t = s & ~(1 << (v - 1))
            entries[row_index[t]][j] = sign
            sign = -sign
    return BoundaryMatrix(rows, cols, tuple(tuple(r) for r in entries))


# -- exact rank over the selectable field ----------------------------------


def _rank_fraction_free(mat: list[list[int]]) -> int:
    """Exact integer rank via single-step fraction-free elimination."""
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        if rank == nr:
            break
        piv = next((r for r in range(rank, nr) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        piv_row = mat[rank]
        for r in range(rank + 1, nr):
            row = mat[r]
            factor = row[col]
            # the two-term update must run even when factor is 0: Sylvester's
            # identity guarantees exact division only for the full transform
            for c2 in range(col + 1, nc):
                row[c2] = (row[c2] * p - factor * piv_row[c2]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def _rank_gf2(entries: tuple[tuple[int, ...], ...]) -> int:
    """Bit-parallel GF(2) rank: rows packed into ints, reduced by leading bit."""
    basis: dict[int, int] = {}
    rank = 0
    for row in entries:
        x = 0
        for j, v in enumerate(row):
            if v & 1:
                x |= 1 << j
        while x:
            lead = x.bit_length() - 1
            other = basis.get(lead)
            if other is None:
                basis[lead] = x
                rank += 1
                break
            x ^= other
    return rank


def _rank_gfp(entries: tuple[tuple[int, ...], ...], p: int) -> int:
    mat = [[v % p for v in row] for row in entries]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        piv = next((r for r in range(rank, nr) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        piv_row = [(v * inv) % p for v in mat[rank]]
        mat[rank] = piv_row
        for r in range(rank + 1, nr):
            factor = mat[r][col]
            if factor:
                row = mat[r]
                for c2 in range(col, nc):
                    row[c2] = (row[c2] - factor * piv_row[c2]) % p
        rank += 1
    return rank


def rank(m: BoundaryMatrix, field: FieldSpec) -> int:
    """Matrix rank over the given field, computed exactly."""
    if not m.rows or not m.cols:
        return 0
    p = field.characteristic
    if p == 0:
        return _rank_fraction_free([list(r) for r in m.entries])
    if p == 2:
        return _rank_gf2(m.entries)
    return _rank_gfp(m.entries, p)


def reduced_betti(c: SimplicialComplex, i: int, field: FieldSpec) -> int:
    """Dimension of the i-th reduced homology over the field.

    Uses the augmented chain complex, so the irrelevant complex has a
    one-dimensional homology in degree -1 and any complex with a vertex
    has none there.  The void complex is rejected: its homology is zero
    by convention and callers must special-case it.
    """
    if c.is_void:
        raise ValueError("void complex homology is 0 by convention")
    if i < -1:
        raise ValueError(f"homology degree must be >= -1, got {i}")
    if i == -1:
        return 1 - rank(boundary_matrix(c, 0), field)
    n_faces = len(c.faces_of_dim(i))
    if n_faces == 0:
        return 0
    b = (
        n_faces
        - rank(boundary_matrix(c, i), field)
        - rank(boundary_matrix(c, i + 1), field)
    )
    assert b >= 0
    return b


# -- integer Smith normal form (test/demo oracle only) ----------------------


def snf_diagonal(entries: list[list[int]]) -> list[int]:
    """Diagonal of the integer Smith normal form, nonnegative, divisibility
    chain, zeros trimmed.

    Quadratic textbook reduction over Python ints; intended as an
    independent torsion oracle for small matrices, not as the homology
    path (Betti numbers are computed from ranks).
    """
    mat = [list(r) for r in entries]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    diag: list[int] = []
    top = 0
    while top < min(nr, nc):
        # locate the nonzero entry of smallest magnitude in the working block
        best = None
        for r in range(top, nr):
            for c in range(top, nc):
                v = abs(mat[r][c])
                if v and (best is None or v < abs(mat[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        r0, c0 = best
        mat[top], mat[r0] = mat[r0], mat[top]
        for row in mat:
            row[top], row[c0] = row[c0], row[top]
        pivot = mat[top][top]
        dirty = False
        for r in range(top + 1, nr):
            q = mat[r][top] // pivot
            if q:
                for c in range(top, nc):
                    mat[r][c] -= q * mat[top][c]
            if mat[r][top]:
                dirty = True
        for c in range(top + 1, nc):
            q = mat[top][c] // pivot
            if q:
                for r in range(top, nr):
                    mat[r][c] -= q * mat[r][top]
            if mat[top][c]:
                dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the block for the divisibility chain
        offender = None
        for r in range(top + 1, nr):
            for c in range(top + 1, nc):
                if mat[r][c] % pivot:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            for c in range(top, nc):
                mat[top][c] += mat[offender][c]
            continue
        diag.append(abs(pivot))
        top += 1
    return diag
