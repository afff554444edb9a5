"""Alexander duality and the squarefree monomial ideal calculus.

A squarefree monomial ideal is stored by the supports of its minimal
generators, so the whole calculus (membership, degree slices, the
Stanley-Reisner correspondence in both directions) runs on bitmask
antichains.  Monomial x_B lies in the ideal iff some generator support is
contained in B.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitsets import (
    canon_key,
    full_mask,
    mask_of,
    masks_of_size,
    minimal_antichain,
    vertices_of,
)
from .complexes import SimplicialComplex


@dataclass(frozen=True, slots=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal given by minimal generator supports.

    ``generators`` is an inclusion-minimal antichain in canonical order.
    The zero ideal has no generators; the unit ideal is generated by the
    empty support (the monomial 1).
    """

    n: int
    generators: tuple[int, ...]

    @staticmethod
    def from_masks(masks: Iterable[int], n: int) -> "SquarefreeIdeal":
        if not 1 <= n <= 63:
            raise ValueError(f"ambient size must be in 1..63, got {n}")
        fm = full_mask(n)
        masks = tuple(masks)
        for m in masks:
            if m & ~fm:
                raise ValueError(
                    f"generator {vertices_of(m)} has vertices outside 1..{n}"
                )
        return SquarefreeIdeal(n, minimal_antichain(masks))

    @staticmethod
    def from_supports(
        supports: Iterable[Iterable[int]], n: int
    ) -> "SquarefreeIdeal":
        return SquarefreeIdeal.from_masks(
            (mask_of(s, n) for s in supports), n
        )

    def __repr__(self) -> str:
        if self.is_zero:
            body = "0"
        elif self.is_unit:
            body = "1"
        else:
            body = ", ".join(
                "".join(f"x{v}" for v in vertices_of(g)) for g in self.generators
            )
        return f"SquarefreeIdeal(n={self.n}, ({body}))"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == (0,)

    def contains(self, mask: int) -> bool:
        """Membership of the squarefree monomial with the given support."""
        return any(g | mask == mask for g in self.generators)


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """The Alexander dual: complements of the non-faces form its faces.

    Its facets are exactly the complements of the minimal non-faces.  The
    dual of the full simplex is void, the dual of the void complex is the
    full simplex, and the map is an involution on all complexes.
    """
    fm = full_mask(c.n)
    if c.is_void:
        return SimplicialComplex(c.n, (fm,))
    duals = [fm & ~nf for nf in c.minimal_nonfaces()]
    return SimplicialComplex(c.n, tuple(sorted(duals, key=canon_key)))


def ideal_of_complex(c: SimplicialComplex) -> SquarefreeIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces.

    Rejects the void complex, whose ideal would be the unit ideal and is
    not the face ideal of any complex.
    """
    if c.is_void:
        raise ValueError("void complex has no Stanley-Reisner ideal")
    return SquarefreeIdeal(c.n, tuple(c.minimal_nonfaces()))


def complex_of_ideal(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Inverse Stanley-Reisner correspondence.

    Faces are the supports of squarefree monomials outside the ideal; the
    facets are complements of the minimal transversals of the generator
    supports.  Rejects the unit ideal (no complex has it as face ideal).
    """
    if ideal.is_unit:
        raise ValueError("unit ideal is not a Stanley-Reisner ideal")
    fm = full_mask(ideal.n)
    if ideal.is_zero:
        return SimplicialComplex(ideal.n, (fm,))
    transversals = _minimal_transversals(ideal.generators)
    facets = [fm & ~t for t in transversals]
    return SimplicialComplex(ideal.n, tuple(sorted(facets, key=canon_key)))


def _minimal_transversals(gens: tuple[int, ...]) -> list[int]:
    """Inclusion-minimal hitting sets of a family of nonempty bitmasks."""
    candidates: set[int] = set()

    def extend(partial: int, start: int) -> None:
        for i in range(start, len(gens)):
            if not gens[i] & partial:
                for v in vertices_of(gens[i]):
                    extend(partial | (1 << (v - 1)), i + 1)
                return
        candidates.add(partial)

    extend(0, 0)
    return list(minimal_antichain(candidates))


def squarefree_component(ideal: SquarefreeIdeal, j: int) -> SquarefreeIdeal:
    """Degree-j squarefree slice: all degree-j squarefree members, as an ideal.

    Generators all have cardinality j (so they form an antichain); an empty
    slice is the zero ideal.
    """
    if not 0 <= j <= ideal.n:
        raise ValueError(f"degree {j} outside 0..{ideal.n}")
    gens = tuple(m for m in masks_of_size(ideal.n, j) if ideal.contains(m))
    return SquarefreeIdeal(ideal.n, gens)


def generation_degrees(ideal: SquarefreeIdeal) -> set[int]:
    """Cardinalities of the minimal generator supports."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("generation degrees need a proper nonzero ideal")
    return {g.bit_count() for g in ideal.generators}
