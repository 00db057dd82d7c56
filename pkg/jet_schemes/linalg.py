"""
Exact ranks of sparse rational matrices.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from jet_schemes.exceptions import ResourceCapExceeded

LOGGER = logging.getLogger(__name__)

SparseRow = Mapping[Hashable, Fraction]


def check_cap(rows: int, cols: int, max_dim: Optional[int]):
    if max_dim is None:
        return
    if rows > max_dim:
        raise ResourceCapExceeded("max_slice_dim", max_dim, rows)
    if cols > max_dim:
        raise ResourceCapExceeded("max_slice_dim", max_dim, cols)


def rank(rows: Sequence[SparseRow], columns: Optional[Sequence[Hashable]] = None, max_dim: Optional[int] = None) -> int:
    """
    Rank over QQ of the matrix whose rows are given as sparse maps column -> value.

    Args:
        rows: Sparse rows
        columns: Column labels (defaults to every label seen in rows)
        max_dim: Largest allowed row or column count

    Returns:
        Exact rank
    """
    if columns is None:
        seen: Dict[Hashable, None] = {}
        for row in rows:
            for key in row:
                seen.setdefault(key, None)
        columns = list(seen)
    check_cap(len(rows), len(columns), max_dim)
    if not rows or not columns:
        return 0
    index = {key: idx for idx, key in enumerate(columns)}
    data: Dict[int, Dict[int, object]] = {}
    for r, row in enumerate(rows):
        entries = {}
        for key, value in row.items():
            if value:
                value = Fraction(value)
                entries[index[key]] = QQ(value.numerator, value.denominator)
        if entries:
            data[r] = entries
    if not data:
        return 0
    matrix = DomainMatrix(data, (len(rows), len(columns)), QQ)
    result = matrix.rank()
    LOGGER.debug("Rank of %dx%d matrix: %d", len(rows), len(columns), result)
    return result


def span_dim(vectors: Iterable[SparseRow], max_dim: Optional[int] = None) -> int:
    """Dimension of the span of sparse vectors."""
    return rank(list(vectors), max_dim=max_dim)


def intersection_dim(U: Sequence[SparseRow], V: Sequence[SparseRow], max_dim: Optional[int] = None) -> int:
    """dim(span U ∩ span V) = dim U + dim V - dim(U + V)."""
    return span_dim(U, max_dim) + span_dim(V, max_dim) - span_dim(list(U) + list(V), max_dim)


__all__ = ["rank", "span_dim", "intersection_dim", "check_cap"]
