"""Simplicial complexes stored as facet antichains, plus the combinatorial
operations on them: faces, links, skeleta, induced subcomplexes and minimal
non-faces.

Two degenerate complexes are distinguished everywhere:

* the *void* complex has no facets and no faces at all;
* the *irrelevant* complex has the single facet ``{}``; its only face is
  the empty set.

Every other complex implicitly contains the empty set and all subsets of
its facets.  Ambient vertices need not appear in any facet; such a vertex
is simply a minimal non-face of size 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .bitsets import (
    MAX_VERTICES,
    canon_key,
    full_mask,
    mask_of,
    maximal_antichain,
    submasks,
    vertices_of,
)

#: Dimension of the void complex; compares below every integer.
NEG_INF = float("-inf")


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    """A simplicial complex on ambient vertex set {1, ..., n}.

    ``facets`` is the canonical facet antichain as bitmasks: deduplicated,
    containments dropped, sorted by (cardinality, members).  Instances are
    immutable and hashable; all operations are pure functions, so values
    are safe to share across threads or workers.
    """

    n: int
    facets: tuple[int, ...]

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_masks(masks: Iterable[int], n: int) -> "SimplicialComplex":
        """Normalize an arbitrary collection of facet bitmasks."""
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"ambient size must be in 1..{MAX_VERTICES}, got {n}")
        fm = full_mask(n)
        masks = tuple(masks)
        for m in masks:
            if m & ~fm:
                raise ValueError(
                    f"facet {vertices_of(m)} has vertices outside 1..{n}"
                )
        return SimplicialComplex(n, maximal_antichain(masks))

    @staticmethod
    def from_facets(facets: Iterable[Iterable[int]], n: int) -> "SimplicialComplex":
        """Normalize facets given as vertex collections (1-based labels)."""
        return SimplicialComplex.from_masks(
            (mask_of(f, n) for f in facets), n
        )

    def __repr__(self) -> str:
        shown = ", ".join(str(set(vertices_of(f)) or "{}") for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{shown}])"

    # -- basic queries -----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == (full_mask(self.n),)

    @property
    def dimension(self) -> int | float:
        """Max facet cardinality minus one; NEG_INF for the void complex."""
        if not self.facets:
            return NEG_INF
        return self.facets[-1].bit_count() - 1

    def facet_cardinalities(self) -> set[int]:
        """The set of facet sizes; a singleton exactly for pure complexes."""
        if self.is_void:
            raise ValueError("void complex has no facets")
        return {f.bit_count() for f in self.facets}

    @property
    def is_pure(self) -> bool:
        return len(self.facet_cardinalities()) == 1

    def is_face(self, mask: int) -> bool:
        """Face test: the set is contained in some facet."""
        return any(mask | f == f for f in self.facets)

    # -- face enumeration --------------------------------------------------

    def faces(self) -> list[int]:
        """All faces (downward closure of the facets), canonical order."""
        seen: set[int] = set()
        for f in self.facets:
            seen.update(submasks(f))
        return sorted(seen, key=canon_key)

    def faces_of_dim(self, k: int) -> list[int]:
        """Faces of dimension k (cardinality k+1), canonical order.

        k = -1 yields [{}] for any non-void complex; dimensions above the
        complex give the empty list.
        """
        if k < -1:
            raise ValueError(f"dimension must be >= -1, got {k}")
        if k == -1:
            return [] if self.is_void else [0]
        seen: set[int] = set()
        for f in self.facets:
            if f.bit_count() >= k + 1:
                for combo in combinations(vertices_of(f), k + 1):
                    m = 0
                    for v in combo:
                        m |= 1 << (v - 1)
                    seen.add(m)
        return sorted(seen, key=canon_key)

    def face_counts(self) -> list[int]:
        """Number of faces per cardinality; entry k counts dimension k-1."""
        if self.is_void:
            return [0]
        seen: set[int] = set()
        for f in self.facets:
            seen.update(submasks(f))
        counts = [0] * (self.facets[-1].bit_count() + 1)
        for m in seen:
            counts[m.bit_count()] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        """Alternating face-count sum starting at the empty face."""
        if self.is_void:
            raise ValueError("void complex has no Euler characteristic")
        total = 0
        for card, cnt in enumerate(self.face_counts()):
            total += cnt if card % 2 else -cnt
        return total

    # -- derived complexes -------------------------------------------------

    def link(self, mask: int) -> "SimplicialComplex":
        """Link of a face: sets disjoint from it whose union is a face.

        Generated by F - s over the facets F containing s; the link of the
        empty set is the complex itself, the link of a facet is the
        irrelevant complex.
        """
        if not self.is_face(mask):
            raise ValueError(f"{set(vertices_of(mask)) or '{}'} is not a face")
        gens = [f & ~mask for f in self.facets if mask | f == f]
        return SimplicialComplex(self.n, maximal_antichain(gens))

    def induced(self, mask: int) -> "SimplicialComplex":
        """Subcomplex of faces inside ``mask``, relabeled densely to 1..|mask|.

        The relabeling preserves vertex order, so results are deterministic.
        """
        keep = vertices_of(mask)
        if not keep:
            raise ValueError("induced subcomplex needs a nonempty vertex set")
        relabel = {v: i + 1 for i, v in enumerate(keep)}
        gens = []
        for f in self.facets:
            g = 0
            for v in vertices_of(f & mask):
                g |= 1 << (relabel[v] - 1)
            gens.append(g)
        return SimplicialComplex(len(keep), maximal_antichain(gens))

    def generated_skeleton(self, j: int) -> "SimplicialComplex":
        """Subcomplex generated by all faces of dimension >= j.

        Every face of dimension >= j lies in a facet of dimension >= j, so
        the generators reduce to the facets that large; j above the
        dimension gives the void complex.
        """
        if self.is_void:
            raise ValueError("void complex has no generated skeleton")
        kept = tuple(f for f in self.facets if f.bit_count() - 1 >= j)
        return SimplicialComplex(self.n, kept)

    def pure_skeleton(self, i: int) -> "SimplicialComplex":
        """Subcomplex whose facets are exactly the i-dimensional faces."""
        if self.is_void:
            raise ValueError("void complex has no pure skeleton")
        if i < -1 or i > self.dimension:
            raise ValueError(
                f"skeleton dimension {i} outside -1..{self.dimension}"
            )
        return SimplicialComplex(self.n, tuple(self.faces_of_dim(i)))

    def minimal_nonfaces(self) -> list[int]:
        """Inclusion-minimal subsets of 1..n that are not faces.

        Iterates subsets in cardinality order, pruning supersets of
        already-recorded non-faces, so the result is canonical.
        """
        if self.is_void:
            raise ValueError("void complex: every set is a non-face")
        found: list[int] = []
        verts = range(1, self.n + 1)
        for k in range(0, self.n + 1):
            for combo in combinations(verts, k):
                m = 0
                for v in combo:
                    m |= 1 << (v - 1)
                if any(nf | m == m for nf in found):
                    continue
                if not self.is_face(m):
                    found.append(m)
        return found


def normalize(facets: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    """Canonicalize a facet list: drop duplicates and contained sets, sort."""
    return SimplicialComplex.from_facets(facets, n)


def void_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_masks((), n)


def irrelevant_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_masks((0,), n)


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_masks((full_mask(n),), n)


def complex_faces_iter(c: SimplicialComplex) -> Iterator[int]:
    """Faces in canonical order; empty for the void complex."""
    return iter(c.faces())
