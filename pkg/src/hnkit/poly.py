"""Sparse multivariate polynomials over Q(i), with grading utilities.

A polynomial in variables z1..zn is a finite map from exponent vectors
(length-n tuples of non-negative ints) to nonzero Gaussian-rational
coefficients.  The zero polynomial has an empty term map.  All arithmetic is
exact, and every value is immutable after construction; operations are pure
functions safe to share across threads.

The variable count ``n`` is fixed per polynomial and checked on every binary
operation: silently promoting between variable sets breeds bugs in graded
dimension counts, so a mismatch raises ``ValueError`` instead.

Term order everywhere is graded lexicographic (degree first, then lex with z1
most significant), descending for display and for the monomial basis of each
homogeneous slice.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Sequence

from .scalars import ONE, ZERO, GaussianRational

Exponent = tuple  # length-n tuple of non-negative ints


def grlex_key(exponent: Exponent):
    """Sort key realizing graded-lex order (ascending)."""
    return (sum(exponent), exponent)


class Polynomial:
    """Immutable sparse polynomial over Q(i) in a fixed set of variables z1..zn."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError(f"variable count must be >= 1, got {n}")
        self.n = n
        clean: dict = {}
        if terms:
            for exponent, coeff in terms.items() if hasattr(terms, "items") else terms:
                exponent = tuple(exponent)
                if len(exponent) != n:
                    raise ValueError(
                        f"exponent vector {exponent} has length {len(exponent)}, expected {n}"
                    )
                if any(not isinstance(e, int) or e < 0 for e in exponent):
                    raise ValueError(f"exponent vector {exponent} must be non-negative integers")
                if not isinstance(coeff, GaussianRational):
                    coeff = GaussianRational(coeff)
                if coeff:
                    existing = clean.get(exponent)
                    if existing is not None:
                        coeff = existing + coeff
                        if coeff:
                            clean[exponent] = coeff
                        else:
                            del clean[exponent]
                    else:
                        clean[exponent] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        """Internal fast path: terms must already be clean (no zeros, right lengths)."""
        self = object.__new__(cls)
        self.n = n
        self._terms = terms
        self._hash = None
        return self

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value) -> "Polynomial":
        return cls(n, {(0,) * n: value})

    @classmethod
    def variable(cls, n: int, index: int) -> "Polynomial":
        """The polynomial z_index, with 1 <= index <= n."""
        if not 1 <= index <= n:
            raise ValueError(f"variable index {index} out of range 1..{n}")
        exponent = [0] * n
        exponent[index - 1] = 1
        return cls(n, {tuple(exponent): ONE})

    @classmethod
    def monomial(cls, n: int, exponent: Sequence[int], coeff=1) -> "Polynomial":
        return cls(n, {tuple(exponent): coeff})

    # -- inspection ------------------------------------------------------------

    def items(self) -> Iterator[tuple[Exponent, GaussianRational]]:
        """Terms in unspecified order (use sorted_terms for deterministic order)."""
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exponent, GaussianRational]]:
        """Terms in graded-lex descending order (canonical display order)."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coefficient(self, exponent: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(exponent), ZERO)

    def constant_term(self) -> GaussianRational:
        return self._terms.get((0,) * self.n, ZERO)

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def homogeneous_degree(self):
        """The common total degree of all terms, or None if inhomogeneous or zero."""
        degrees = {sum(e) for e in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        """True when every term has the same total degree (the zero polynomial counts)."""
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def as_constant(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.constant_term()

    # -- arithmetic --------------------------------------------------------

    def _check_same_variables(self, other: "Polynomial"):
        if self.n != other.n:
            raise ValueError(f"variable-count mismatch: {self.n} versus {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            coerced = _scalar(other)
            if coerced is None:
                return NotImplemented
            other = Polynomial.constant(self.n, coerced)
        self._check_same_variables(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        result = dict(self._terms)
        for exponent, coeff in other._terms.items():
            existing = result.get(exponent)
            if existing is None:
                result[exponent] = coeff
            else:
                total = existing + coeff
                if total:
                    result[exponent] = total
                else:
                    del result[exponent]
        return Polynomial._raw(self.n, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            coerced = _scalar(other)
            if coerced is None:
                return NotImplemented
            other = Polynomial.constant(self.n, coerced)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            coerced = _scalar(other)
            if coerced is None:
                return NotImplemented
            return self.scale(coerced)
        self._check_same_variables(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.n)
        # Iterate the smaller factor in the outer loop; accumulate raw (re, im)
        # pairs to keep the hot loop free of wrapper-object churn.
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict = {}
        for ea, ca in a.items():
            ra, ia = ca.re, ca.im
            for eb, cb in b.items():
                exponent = tuple(map(int.__add__, ea, eb))
                rb, ib = cb.re, cb.im
                re = ra * rb - ia * ib
                im = ra * ib + ia * rb
                cell = acc.get(exponent)
                if cell is None:
                    acc[exponent] = [re, im]
                else:
                    cell[0] += re
                    cell[1] += im
        result = {}
        for exponent, (re, im) in acc.items():
            if re or im:
                result[exponent] = GaussianRational(re, im)
        return Polynomial._raw(self.n, result)

    __rmul__ = __mul__

    def scale(self, coeff) -> "Polynomial":
        coeff = coeff if isinstance(coeff, GaussianRational) else GaussianRational(coeff)
        if not coeff:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {e: c * coeff for e, c in self._terms.items()})

    def __truediv__(self, other):
        coerced = _scalar(other)
        if coerced is None:
            return NotImplemented
        return self.scale(GaussianRational(1) / coerced)

    def __pow__(self, exponent: int) -> "Polynomial":
        """Exact power by iterated products; p**0 is 1 (including 0**0, by convention)."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial power must be a non-negative integer, got {exponent}")
        result = Polynomial.constant(self.n, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus and grading -----------------------------------------------

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to z_index (1-based)."""
        if not 1 <= index <= self.n:
            raise ValueError(f"variable index {index} out of range 1..{self.n}")
        i = index - 1
        result: dict = {}
        for exponent, coeff in self._terms.items():
            e = exponent[i]
            if e:
                lowered = exponent[:i] + (e - 1,) + exponent[i + 1 :]
                result[lowered] = result.get(lowered, ZERO) + coeff * e
        return Polynomial._raw(self.n, {e: c for e, c in result.items() if c})

    def homogeneous_slice(self, degree: int) -> "Polynomial":
        """The sum of the terms of total degree exactly ``degree``."""
        return Polynomial._raw(
            self.n, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    def evaluate(self, point: Sequence) -> GaussianRational:
        """Exact evaluation at a point of Gaussian rationals."""
        values = [v if isinstance(v, GaussianRational) else GaussianRational(v) for v in point]
        if len(values) != self.n:
            raise ValueError(f"point has length {len(values)}, expected {self.n}")
        total = ZERO
        for exponent, coeff in self._terms.items():
            term = coeff
            for e, v in zip(exponent, values):
                if e:
                    term = term * v**e
            total = total + term
        return total

    # -- equality and display ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        from .textform import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"<Polynomial n={self.n} '{self}'>"


def _scalar(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, int):
        return GaussianRational(value)
    try:
        return GaussianRational(value)
    except (TypeError, ValueError):
        return None


def sum_of_squares(n: int) -> Polynomial:
    """z1^2 + ... + zn^2, the isotropy quadric (its operator form is the Laplacian)."""
    return Polynomial(
        n, {tuple(2 if j == i else 0 for j in range(n)): ONE for i in range(n)}
    )


def slice_dimension(n: int, degree: int) -> int:
    """Dimension of the space of homogeneous degree-d polynomials in n variables."""
    if degree < 0:
        return 0
    return comb(degree + n - 1, n - 1)


def monomial_basis(n: int, degree: int) -> list[Exponent]:
    """Exponent vectors of total degree ``degree``, graded-lex descending.

    This is the canonical ordered basis of each homogeneous slice; subspace
    coordinate vectors throughout the toolkit are taken against it.
    """
    if degree < 0:
        return []
    out: list[Exponent] = []

    def fill(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            fill(prefix + [e], remaining - e, slots - 1)

    fill([], degree, n)
    return out


def polynomial_from_vector(
    n: int, degree: int, coords: Iterable, basis: Sequence[Exponent] | None = None
) -> Polynomial:
    """Rebuild a homogeneous polynomial from coordinates over ``monomial_basis``."""
    if basis is None:
        basis = monomial_basis(n, degree)
    terms = {}
    for exponent, coeff in zip(basis, coords):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        if coeff:
            terms[exponent] = coeff
    return Polynomial._raw(n, terms)


def coefficient_vector(
    p: Polynomial, degree: int, basis: Sequence[Exponent] | None = None
) -> tuple:
    """Coordinates of a homogeneous polynomial over ``monomial_basis(p.n, degree)``.

    The zero polynomial is accepted at any degree; otherwise the polynomial
    must be homogeneous of exactly the requested degree.
    """
    if p and p.homogeneous_degree() != degree:
        raise ValueError(
            f"expected a homogeneous polynomial of degree {degree}, got {p!r}"
        )
    if basis is None:
        basis = monomial_basis(p.n, degree)
    return tuple(p.coefficient(e) for e in basis)
