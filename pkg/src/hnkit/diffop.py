"""Constant-coefficient differential operators and the apolarity pairing.

The central operation substitutes the partial derivative D_i = d/dz_i for
each variable z_i of an operator polynomial f and applies the result to a
polynomial g, written f(D)g.  Restricted to two homogeneous polynomials of
the same degree m the pairing lands in the constants and defines a bilinear
form on the degree-m slice; on monomials it evaluates to
``B(z^a, z^b) = a! * delta_{ab}``, so its Gram matrix over the monomial basis
is diagonal with factorial entries, hence symmetric and non-singular.
"""

from __future__ import annotations

from math import factorial

from .matrix import PolyMatrix
from .poly import Polynomial, monomial_basis
from .scalars import ZERO, GaussianRational


def apply_diffop(f: Polynomial, g: Polynomial) -> Polynomial:
    """f(D)g: view f as a constant-coefficient operator and apply it to g.

    Linear in both arguments; a monomial c*z^a acts on z^b as the mixed
    partial c * D^a, contributing the falling-factorial multiplier
    ``prod_i b_i (b_i - 1) ... (b_i - a_i + 1)`` on the surviving term.
    """
    if f.n != g.n:
        raise ValueError(f"variable-count mismatch: {f.n} versus {g.n}")
    n = f.n
    acc: dict = {}
    for op_exp, op_coeff in f.items():
        for target_exp, target_coeff in g.items():
            multiplier = 1
            for a, b in zip(op_exp, target_exp):
                if a > b:
                    multiplier = 0
                    break
                for step in range(b, b - a, -1):
                    multiplier *= step
            if not multiplier:
                continue
            result_exp = tuple(map(int.__sub__, target_exp, op_exp))
            contribution = op_coeff * target_coeff * multiplier
            cell = acc.get(result_exp)
            acc[result_exp] = contribution if cell is None else cell + contribution
    return Polynomial(n, acc)


def derivative(p: Polynomial, orders) -> Polynomial:
    """Mixed partial D^orders applied to p (orders is an exponent vector)."""
    return apply_diffop(Polynomial.monomial(p.n, tuple(orders)), p)


def laplacian(g: Polynomial) -> Polynomial:
    """Sum of the pure second partials of g."""
    acc: dict = {}
    for exponent, coeff in g.items():
        for i, e in enumerate(exponent):
            if e >= 2:
                lowered = exponent[:i] + (e - 2,) + exponent[i + 1 :]
                contribution = coeff * (e * (e - 1))
                cell = acc.get(lowered)
                acc[lowered] = contribution if cell is None else cell + contribution
    return Polynomial(g.n, acc)


def laplacian_power(g: Polynomial, m: int) -> Polynomial:
    """m-fold Laplacian iterate; m = 0 is the identity."""
    if m < 0:
        raise ValueError(f"iterate count must be non-negative, got {m}")
    current = g
    for _ in range(m):
        if current.is_zero():
            return current
        current = laplacian(current)
    return current


def gradient(p: Polynomial) -> tuple[Polynomial, ...]:
    """The vector of first partials (d p/d z1, ..., d p/d zn)."""
    return tuple(p.partial(i) for i in range(1, p.n + 1))


def hessian(p: Polynomial) -> PolyMatrix:
    """The symmetric matrix of second partials of p."""
    grad = gradient(p)
    n = p.n
    entries: list[list[Polynomial]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            entry = grad[i].partial(j + 1)
            entries[i][j] = entry
            entries[j][i] = entry
    return PolyMatrix(entries)


def matrix_power_is_zero(matrix: PolyMatrix, k: int) -> bool:
    """Whether matrix^k is the zero matrix, by exact symbolic multiplication.

    Powers are accumulated one product at a time so that an early zero power
    short-circuits (if matrix^j = 0 with j <= k then matrix^k = 0).  Powers of
    a symmetric matrix are symmetric, so only the upper triangle is computed
    in that common case (Hessians).
    """
    if not matrix.is_square():
        raise ValueError("nilpotency test requires a square matrix")
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    symmetric = matrix.is_symmetric()
    current = matrix
    for _ in range(1, k):
        if current.is_zero():
            return True
        current = _mul_tracked(current, matrix, symmetric)
    return current.is_zero()


def _mul_tracked(a: PolyMatrix, b: PolyMatrix, symmetric: bool) -> PolyMatrix:
    """a*b, filling only the upper triangle when the product is known symmetric."""
    if not symmetric:
        return a * b
    size = a.rows
    n = a.n
    entries: list[list[Polynomial]] = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            acc = Polynomial.zero(n)
            row = a.entries[i]
            for t in range(size):
                left = row[t]
                right = b.entries[t][j]
                if left and right:
                    acc = acc + left * right
            entries[i][j] = acc
            entries[j][i] = acc
    return PolyMatrix(entries)


def apolar_form(f: Polynomial, g: Polynomial, m: int) -> GaussianRational:
    """The bilinear form f(D)g on two homogeneous polynomials of degree m.

    Defined only on the degree-m slice; inhomogeneous or degree-mismatched
    input is rejected rather than truncated.
    """
    if f.n != g.n:
        raise ValueError(f"variable-count mismatch: {f.n} versus {g.n}")
    for name, p in (("first", f), ("second", g)):
        if p and p.homogeneous_degree() != m:
            raise ValueError(
                f"{name} argument must be homogeneous of degree {m}, got {p!r}"
            )
    if f.is_zero() or g.is_zero():
        return ZERO
    return apply_diffop(f, g).as_constant()


def apolar_gram(m: int, n: int) -> list[list[GaussianRational]]:
    """Gram matrix of the degree-m apolarity form over the graded-lex monomial basis.

    Computed honestly pair by pair; it comes out diagonal with entries
    ``a! = prod_i a_i!`` for each basis exponent a, witnessing symmetry and
    non-singularity.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    basis = [Polynomial.monomial(n, e) for e in monomial_basis(n, m)]
    return [[apolar_form(u, v, m) for v in basis] for u in basis]


def monomial_factorial(exponent) -> int:
    """a! = prod_i a_i! for an exponent vector a (the diagonal Gram entries)."""
    out = 1
    for e in exponent:
        out *= factorial(e)
    return out
