"""Exact row reduction and kernels over Q(i).

The forward pass is fraction-free (Bareiss cross-multiplication with exact
division by the previous pivot) on rows pre-scaled to Gaussian integers, which
sidesteps the denominator blowup of naive division-first elimination.  A final
backward pass normalizes pivots to 1 and clears above, producing the unique
reduced row echelon form: two row sets span the same subspace exactly when
their reduced forms are identical.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, GaussianRational

Row = tuple


def _integralize(row: list[GaussianRational]) -> list[GaussianRational]:
    denominator = 1
    for c in row:
        denominator = lcm(denominator, int(c.re.denominator), int(c.im.denominator))
    if denominator == 1:
        return row
    return [c * denominator for c in row]


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped, pivots
    are 1 with zeros above and below, and the result is canonical for the row
    space under the given column order.
    """
    work: list[list[GaussianRational]] = []
    for row in rows:
        row = list(row)
        if len(row) != ncols:
            raise ValueError(f"row has length {len(row)}, expected {ncols}")
        if any(row):
            work.append(_integralize(row))
    pivots: list[int] = []
    previous_pivot = ONE
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, len(work)):
            if work[r][col]:
                found = r
                break
        if found is None:
            continue
        if found != pivot_row:
            work[pivot_row], work[found] = work[found], work[pivot_row]
        pivot_value = work[pivot_row][col]
        for r in range(pivot_row + 1, len(work)):
            row = work[r]
            lead = row[col]
            if lead:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * pivot_value - lead * work[pivot_row][j]) / previous_pivot
                row[col] = ZERO
            else:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * pivot_value) / previous_pivot
        previous_pivot = pivot_value
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    work = work[:pivot_row]
    # backward pass: normalize pivots to 1 and clear entries above them
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        inv = ONE / work[r][col]
        work[r] = [c * inv for c in work[r]]
        for above in range(r):
            factor = work[above][col]
            if factor:
                work[above] = [
                    a - factor * b for a, b in zip(work[above], work[r])
                ]
    return tuple(tuple(row) for row in work), tuple(pivots)


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def kernel_basis(rows: Iterable[Sequence], ncols: int) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """RREF basis of the right null space {v : A v = 0}.

    One generator per free column (value 1 there, back-filled from the pivot
    rows), re-reduced so the result is again canonical.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    generators = []
    for free_col in range(ncols):
        if free_col in pivot_set:
            continue
        vector = [ZERO] * ncols
        vector[free_col] = ONE
        for row_index, pivot_col in enumerate(pivots):
            value = reduced[row_index][free_col]
            if value:
                vector[pivot_col] = -value
        generators.append(vector)
    return rref(generators, ncols)


def reduce_vector(reduced: Sequence[Row], pivots: Sequence[int], vector: Sequence) -> tuple:
    """Remainder of ``vector`` after eliminating along RREF rows (zero iff in span)."""
    out = list(vector)
    for row, col in zip(reduced, pivots):
        factor = out[col]
        if factor:
            out = [a - factor * b for a, b in zip(out, row)]
    return tuple(out)
