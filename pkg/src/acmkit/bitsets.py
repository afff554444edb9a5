"""Bitmask helpers for subsets of the vertex range 1..n.

Vertex i occupies bit i-1, so subset algebra (union, intersection,
complement, containment) is single machine-word int arithmetic.  The
ambient size is capped at 63 vertices so every mask stays one word.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 63


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Pack vertex labels into a bitmask, validating the 1..n range."""
    m = 0
    for v in vertices:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} outside ambient range 1..{n}")
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into its sorted vertex labels."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def canon_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: cardinality first, then lexicographic members.

    Plain integer order on masks would put {2,3} before {1,4}; the
    member-tuple comparison gives the documented ordering.
    """
    return (mask.bit_count(), vertices_of(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def submasks_of_size(mask: int, k: int) -> Iterator[int]:
    """Subsets of ``mask`` with exactly k bits, lex order on member tuples."""
    for combo in combinations(vertices_of(mask), k):
        m = 0
        for v in combo:
            m |= 1 << (v - 1)
        yield m


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """All k-subsets of 1..n, lex order on member tuples."""
    yield from submasks_of_size(full_mask(n), k)


def maximal_antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal elements, deduplicated, canonically sorted."""
    pool = set(masks)
    kept = [m for m in pool if not any(m != o and m | o == o for o in pool)]
    kept.sort(key=canon_key)
    return tuple(kept)


def minimal_antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal elements, deduplicated, canonically sorted."""
    pool = set(masks)
    kept = [m for m in pool if not any(m != o and o | m == m for o in pool)]
    kept.sort(key=canon_key)
    return tuple(kept)
