"""
Integer rank and torsion of boundary matrices.

A sparse pass eliminates unit pivots; sympy's Smith normal form over ZZ
handles the dense block that remains.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import TYPE_CHECKING, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

if TYPE_CHECKING:
    from .chains import SparseMatrix

logger = logging.getLogger("partcx.smith")


def to_domain_matrix(dense: Sequence[Sequence[int]]) -> DomainMatrix:
    """Dense integer rows as a ``DomainMatrix`` over ZZ."""
    width = len(dense[0]) if dense else 0
    return DomainMatrix([[ZZ(v) for v in row] for row in dense], (len(dense), width), ZZ)


def nonzero_invariant_factors(dense: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero invariant factors of an integer matrix, as positive ints."""
    if not dense or not dense[0]:
        return ()
    factors = (abs(int(f)) for f in invariant_factors(to_domain_matrix(dense)))
    return tuple(sorted(f for f in factors if f))


def _eliminate_units(matrix: SparseMatrix) -> tuple[int, dict[int, dict[int, int]]]:
    """
    Sparse Gaussian elimination restricted to pivots of absolute value one.

    Eliminating a unit pivot removes one invariant factor equal to 1 and
    leaves the others unchanged. Returns the number of pivots and the
    remaining rows.
    """

    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = defaultdict(set)
    for j, column in enumerate(matrix.columns):
        for i, value in column.items():
            if value:
                rows.setdefault(i, {})[j] = value
                cols[j].add(i)

    pivots = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(cols):
            if j not in cols:
                continue
            candidates = [i for i in cols[j] if abs(rows[i][j]) == 1]
            if not candidates:
                continue
            r = min(candidates, key=lambda i: (len(rows[i]), i))
            pivot_row = rows.pop(r)
            p = pivot_row[j]
            for i in list(cols[j]):
                if i == r:
                    continue
                row = rows[i]
                factor = row[j] * p
                for c, v in pivot_row.items():
                    updated = row.get(c, 0) - factor * v
                    if updated:
                        if c not in row:
                            cols[c].add(i)
                        row[c] = updated
                    elif c in row:
                        del row[c]
                        cols[c].discard(i)
                if not row:
                    del rows[i]
            for c in pivot_row:
                cols[c].discard(r)
                if not cols[c]:
                    del cols[c]
            pivots += 1
            progress = True
    return pivots, rows


def integer_rank_and_torsion(matrix: SparseMatrix) -> tuple[int, tuple[int, ...]]:
    """Rank and invariant factors greater than one of an integer matrix."""

    pivots, rows = _eliminate_units(matrix)
    if not rows:
        return pivots, ()
    row_ids = sorted(rows)
    col_ids = sorted({c for row in rows.values() for c in row})
    dense = [[rows[i].get(j, 0) for j in col_ids] for i in row_ids]
    logger.debug(
        "Residual block after unit elimination",
        extra={"rows": len(row_ids), "cols": len(col_ids), "pivots": pivots},
    )
    factors = nonzero_invariant_factors(dense)
    return pivots + len(factors), tuple(f for f in factors if f > 1)


def rational_rank(matrix: SparseMatrix) -> int:
    """Rank over the rationals, computed by sympy's sparse row reduction."""

    entries: dict[int, dict[int, object]] = {}
    for j, column in enumerate(matrix.columns):
        for i, value in column.items():
            if value:
                entries.setdefault(i, {})[j] = QQ(value)
    if not entries:
        return 0
    return DomainMatrix(entries, (matrix.nrows, matrix.ncols), QQ).rank()
