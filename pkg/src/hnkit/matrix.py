"""Matrices with polynomial entries: products, powers, exact determinants.

The determinant of a square matrix uses minor expansion (a memoized cofactor
scheme over column subsets) up to size 6 and fraction-free Gaussian
elimination above, where the Bareiss division step is an exact division in
the polynomial ring.  Both routes are division-safe and exact.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .poly import Polynomial, grlex_key
from .scalars import GaussianRational

_MINOR_EXPANSION_LIMIT = 6


class PolyMatrix:
    """Immutable rectangular grid of polynomials sharing one variable set."""

    __slots__ = ("rows", "cols", "n", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        grid = tuple(tuple(row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("matrix rows must all have the same length")
        n = grid[0][0].n
        for row in grid:
            for entry in row:
                if not isinstance(entry, Polynomial):
                    raise ValueError("matrix entries must be polynomials")
                if entry.n != n:
                    raise ValueError(
                        f"variable-count mismatch inside matrix: {entry.n} versus {n}"
                    )
        self.entries = grid
        self.rows = len(grid)
        self.cols = width
        self.n = n

    @classmethod
    def identity(cls, size: int, n: int) -> "PolyMatrix":
        one = Polynomial.constant(n, 1)
        zero = Polynomial.zero(n)
        return cls(
            [[one if i == j else zero for j in range(size)] for i in range(size)]
        )

    @classmethod
    def zero(cls, rows: int, cols: int, n: int) -> "PolyMatrix":
        zero = Polynomial.zero(n)
        return cls([[zero for _ in range(cols)] for _ in range(rows)])

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other, same=True)
        return PolyMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_shape(other, same=True)
        return PolyMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, (Polynomial, GaussianRational, int)):
            return PolyMatrix([[entry * other for entry in row] for row in self.entries])
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._check_shape(other, same=False)
        cols = tuple(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = Polynomial.zero(self.n)
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(out)

    def _check_shape(self, other: "PolyMatrix", same: bool):
        if self.n != other.n:
            raise ValueError(f"variable-count mismatch: {self.n} versus {other.n}")
        if same and (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")
        if not same and self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )

    def power(self, k: int) -> "PolyMatrix":
        if not self.is_square():
            raise ValueError("matrix power requires a square matrix")
        if k < 0:
            raise ValueError("matrix power must be non-negative")
        result = PolyMatrix.identity(self.rows, self.n)
        for _ in range(k):
            result = result * self
        return result

    def trace(self) -> Polynomial:
        if not self.is_square():
            raise ValueError("trace requires a square matrix")
        acc = Polynomial.zero(self.n)
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def det(self) -> Polynomial:
        """Exact determinant; minor expansion for size <= 6, Bareiss above."""
        if not self.is_square():
            raise ValueError("determinant requires a square matrix")
        if self.rows <= _MINOR_EXPANSION_LIMIT:
            return _det_minor_expansion(self.entries, self.n)
        return _det_bareiss(self.entries, self.n)

    def __repr__(self):
        return f"<PolyMatrix {self.rows}x{self.cols} over z1..z{self.n}>"


def _det_minor_expansion(entries, n: int) -> Polynomial:
    """Determinant by expansion along columns, memoized over row subsets.

    det of the submatrix using rows ``rows`` and the first len(rows) columns
    is built from size-1 subsets upward; no division is ever performed.
    """
    size = len(entries)
    minors: dict[tuple[int, ...], Polynomial] = {(): Polynomial.constant(n, 1)}
    for width in range(1, size + 1):
        col = width - 1
        next_minors: dict[tuple[int, ...], Polynomial] = {}
        for rows in combinations(range(size), width):
            acc = Polynomial.zero(n)
            for position, row in enumerate(rows):
                entry = entries[row][col]
                if not entry:
                    continue
                rest = rows[:position] + rows[position + 1 :]
                minor = minors[rest]
                if not minor:
                    continue
                term = entry * minor
                # cofactor sign for row slot `position`, column slot `col`
                acc = acc + term if (position + col) % 2 == 0 else acc - term
            next_minors[rows] = acc
        minors = next_minors
    return minors[tuple(range(size))]


def _det_bareiss(entries, n: int) -> Polynomial:
    """Fraction-free elimination; each division is exact in the polynomial ring."""
    size = len(entries)
    m = [list(row) for row in entries]
    sign = 1
    previous_pivot = Polynomial.constant(n, 1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            for swap in range(k + 1, size):
                if not m[swap][k].is_zero():
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(n)
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = exact_divide(numerator, previous_pivot)
            m[i][k] = Polynomial.zero(n)
        previous_pivot = pivot
    result = m[size - 1][size - 1]
    return -result if sign < 0 else result


def exact_divide(numerator: Polynomial, denominator: Polynomial) -> Polynomial:
    """Divide in the polynomial ring, requiring an exact (remainder-free) quotient."""
    if denominator.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    n = numerator.n
    if numerator.is_zero():
        return numerator
    if denominator.is_constant():
        return numerator / denominator.as_constant()
    lead_exp, lead_coeff = max(
        denominator.items(), key=lambda kv: grlex_key(kv[0])
    )
    quotient_terms: dict = {}
    remainder = numerator
    while remainder:
        r_exp, r_coeff = max(remainder.items(), key=lambda kv: grlex_key(kv[0]))
        step = tuple(a - b for a, b in zip(r_exp, lead_exp))
        if any(e < 0 for e in step):
            raise ValueError("polynomial division is not exact")
        coeff = r_coeff / lead_coeff
        quotient_terms[step] = coeff
        remainder = remainder - denominator * Polynomial.monomial(n, step, coeff)
    return Polynomial(n, quotient_terms)
