"""
Exact linear algebra over K: a deterministic kernel vector by Gauss-Jordan
elimination with RatFn entries.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

from core.errors import RaggedMatrix
from core.ratfn import RatFn

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[RatFn]]


def _shape(matrix: Matrix) -> Tuple[int, int]:
    if not matrix or not matrix[0]:
        raise RaggedMatrix("matrix must have at least one row and one column")
    cols = len(matrix[0])
    for k, row in enumerate(matrix):
        if len(row) != cols:
            raise RaggedMatrix(f"row {k} has {len(row)} entries, expected {cols}")
    return len(matrix), cols


def mat_vec(matrix: Matrix, v: Sequence[RatFn]) -> List[RatFn]:
    _, cols = _shape(matrix)
    if len(v) != cols:
        raise RaggedMatrix(f"vector of length {len(v)} for {cols} columns")
    out = []
    for row in matrix:
        acc = RatFn.zero(v[0].arity, v[0].char)
        for a, b in zip(row, v):
            if not a.is_zero and not b.is_zero:
                acc = acc + a * b
        out.append(acc)
    return out


def kernel_solve(matrix: Matrix) -> Optional[List[RatFn]]:
    """
    A nonzero v with M v = 0, or None when the kernel is trivial.

    Pivots are chosen per column as the nonzero candidate with the fewest
    monomials (numerator plus denominator), ties to the lowest row. The
    returned vector sets the first free column to 1, the other free columns
    to 0 and back-solves the pivot columns.
    """
    rows_n, cols = _shape(matrix)
    template = matrix[0][0]
    arity, char = template.arity, template.char
    rows = [list(r) for r in matrix]
    pivots: List[int] = []
    top = 0
    for col in range(cols):
        if top == rows_n:
            break
        candidates = [k for k in range(top, rows_n) if not rows[k][col].is_zero]
        if not candidates:
            continue
        best = min(candidates, key=lambda k: (rows[k][col].size, k))
        rows[top], rows[best] = rows[best], rows[top]
        inv = rows[top][col].inverse()
        rows[top] = [e * inv if not e.is_zero else e for e in rows[top]]
        pivot_row = rows[top]
        for k in range(rows_n):
            if k == top:
                continue
            factor = rows[k][col]
            if factor.is_zero:
                continue
            rows[k] = [
                a - factor * b if not b.is_zero else a for a, b in zip(rows[k], pivot_row)
            ]
        pivots.append(col)
        top += 1

    free = [c for c in range(cols) if c not in set(pivots)]
    logger.debug("kernel_solve: %dx%d matrix, rank %d", rows_n, cols, len(pivots))
    if not free:
        return None
    first = free[0]
    v = [RatFn.zero(arity, char) for _ in range(cols)]
    v[first] = RatFn.one(arity, char)
    for k, col in enumerate(pivots):
        v[col] = -rows[k][first]
    return v
