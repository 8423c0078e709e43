"""Tiny exact linear algebra over GF(2).

Vectors are Python ints used as bitmasks (bit i = coordinate i); a
matrix is just an iterable of such ints (its rows).
"""

from __future__ import annotations

from typing import Dict, Iterable, List

__all__ = ["triangularize", "reduce_vector", "rank"]


def triangularize(vectors: Iterable[int]) -> List[int]:
    """Row-echelon basis (distinct leading bits) of the span."""
    pivots: Dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                break
            v ^= pivots[top]
    return [pivots[t] for t in sorted(pivots, reverse=True)]


def reduce_vector(v: int, basis: Iterable[int]) -> int:
    """Reduce ``v`` against an echelon basis; 0 means it lies in the span."""
    by_top = {b.bit_length() - 1: b for b in basis}
    while v:
        top = v.bit_length() - 1
        if top not in by_top:
            break
        v ^= by_top[top]
    return v


def rank(vectors: Iterable[int]) -> int:
    """Dimension of the span of the given bitmask vectors."""
    return len(triangularize(vectors))
