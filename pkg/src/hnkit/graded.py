"""Graded slices of homogeneous ideals, PDE solution slices, and saturation.

For homogeneous generators g_1..g_k the degree-m slice of the ideal they
generate is spanned by the monomial multiples z^b * g_i with |b| = m - deg g_i.
The degree-m polynomial solutions of the operator system g_i(D)u = 0 form the
orthogonal complement of that slice under the apolarity form, whose diagonal
Gram matrix makes the complement a plain rescaled kernel.  Saturation of the
ideal (slice = full slice from some degree on) is equivalent to the generators
having no common zero besides the origin, which is what the certificate
machinery probes degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from . import linalg
from .diffop import apply_diffop, monomial_factorial
from .poly import (
    Polynomial,
    coefficient_vector,
    monomial_basis,
    polynomial_from_vector,
    slice_dimension,
)
from .scalars import ONE, ZERO


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of the degree-m slice, as canonical RREF coordinate rows.

    Coordinates are taken against the graded-lex descending monomial basis of
    the slice, so two values are equal exactly when they describe the same
    subspace.
    """

    m: int
    n: int
    matrix: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def ambient_dimension(self) -> int:
        return slice_dimension(self.n, self.m)

    def basis_polynomials(self) -> list[Polynomial]:
        basis = monomial_basis(self.n, self.m)
        return [polynomial_from_vector(self.n, self.m, row, basis) for row in self.matrix]

    def contains(self, p: Polynomial) -> bool:
        if p.n != self.n:
            raise ValueError(f"variable-count mismatch: {p.n} versus {self.n}")
        vector = coefficient_vector(p, self.m)
        remainder = linalg.reduce_vector(self.matrix, self.pivots, vector)
        return not any(remainder)

    @classmethod
    def from_rows(cls, m: int, n: int, rows) -> "SubspaceBasis":
        reduced, pivots = linalg.rref(rows, slice_dimension(n, m))
        return cls(m=m, n=n, matrix=reduced, pivots=pivots)

    @classmethod
    def full_slice(cls, m: int, n: int) -> "SubspaceBasis":
        dim = slice_dimension(n, m)
        rows = []
        for i in range(dim):
            row = [ZERO] * dim
            row[i] = ONE
            rows.append(tuple(row))
        return cls(m=m, n=n, matrix=tuple(rows), pivots=tuple(range(dim)))


class CertificateStatus(Enum):
    NO_COMMON_ZERO = "NO_COMMON_ZERO"
    COMMON_ZERO_EXISTS_LIKELY = "COMMON_ZERO_EXISTS_LIKELY"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Certificate:
    """Outcome of the common-zero saturation probe.

    ``hilbert_values`` records (m, dim ideal slice, dim full slice) for every
    probed degree.  NO_COMMON_ZERO always carries the witnessing saturation
    degree; the LIKELY status is a bounded observation, never a proof.
    """

    status: CertificateStatus
    saturation_degree: int | None
    probe_degree_reached: int
    hilbert_values: tuple

    def __post_init__(self):
        if self.status is CertificateStatus.NO_COMMON_ZERO and self.saturation_degree is None:
            raise ValueError("NO_COMMON_ZERO requires a witnessed saturation degree")
        for _, dim_ideal, dim_full in self.hilbert_values:
            if dim_ideal > dim_full:
                raise ValueError("ideal slice dimension exceeded the ambient dimension")


def checked_generators(generators: Sequence[Polynomial]) -> tuple[int, list[int]]:
    """Validate a generator list: homogeneous, nonzero, degree >= 1, shared n."""
    if not generators:
        raise ValueError("at least one generator is required")
    n = generators[0].n
    degrees = []
    for index, g in enumerate(generators, start=1):
        if g.n != n:
            raise ValueError(f"generator {index} has variable count {g.n}, expected {n}")
        d = g.homogeneous_degree()
        if d is None:
            if g.is_zero():
                raise ValueError(f"generator {index} is zero")
            raise ValueError(f"generator {index} is not homogeneous: {g}")
        if d < 1:
            raise ValueError(f"generator {index} must have degree >= 1, got {d}")
        degrees.append(d)
    return n, degrees


def ideal_graded_piece(generators: Sequence[Polynomial], m: int) -> SubspaceBasis:
    """Degree-m slice of the homogeneous ideal generated by the given polynomials."""
    n, degrees = checked_generators(generators)
    basis = monomial_basis(n, m)
    rows = []
    for g, d in zip(generators, degrees):
        if m < d:
            continue
        for multiplier_exp in monomial_basis(n, m - d):
            product = g * Polynomial.monomial(n, multiplier_exp)
            rows.append(coefficient_vector(product, m, basis))
    return SubspaceBasis.from_rows(m, n, rows)


def orthogonal_complement(basis: SubspaceBasis) -> SubspaceBasis:
    """Orthogonal complement inside the slice under the apolarity form.

    The Gram matrix is diagonal with entries a!, so the complement is the
    kernel of the coefficient matrix rescaled column-wise by a!.
    """
    if basis.dim == 0:
        return SubspaceBasis.full_slice(basis.m, basis.n)
    weights = [monomial_factorial(e) for e in monomial_basis(basis.n, basis.m)]
    scaled = [
        [value * weight for value, weight in zip(row, weights)] for row in basis.matrix
    ]
    reduced, pivots = linalg.kernel_basis(scaled, basis.ambient_dimension())
    return SubspaceBasis(m=basis.m, n=basis.n, matrix=reduced, pivots=pivots)


def pde_solution_slice(generators: Sequence[Polynomial], m: int) -> SubspaceBasis:
    """Degree-m solutions u of the system g_i(D)u = 0 for all generators.

    Computed directly as the joint kernel of the linear maps u -> g_i(D)u
    from the degree-m slice to the lower slices.
    """
    n, degrees = checked_generators(generators)
    source_basis = monomial_basis(n, m)
    dim_source = len(source_basis)
    constraint_rows: list[list] = []
    for g, d in zip(generators, degrees):
        if d > m:
            continue  # the operator annihilates the whole slice: no constraint
        target_basis = monomial_basis(n, m - d)
        target_index = {e: i for i, e in enumerate(target_basis)}
        block = [[ZERO] * dim_source for _ in target_basis]
        for col, source_exp in enumerate(source_basis):
            image = apply_diffop(g, Polynomial.monomial(n, source_exp))
            for exp, coeff in image.items():
                block[target_index[exp]][col] = coeff
        constraint_rows.extend(block)
    if not constraint_rows:
        return SubspaceBasis.full_slice(m, n)
    reduced, pivots = linalg.kernel_basis(constraint_rows, dim_source)
    return SubspaceBasis(m=m, n=n, matrix=reduced, pivots=pivots)


def default_probe_bound(degrees: Sequence[int], n: int) -> int:
    """Macaulay-style default saturation probe bound: 1 + sum (d_i - 1).

    The sum runs over the min(k, n) largest generator degrees.  This is a
    conservative heuristic for where saturation must have shown up when the
    generators have no common zero; callers can always override it.
    """
    largest = sorted(degrees, reverse=True)[: min(len(degrees), n)]
    return 1 + sum(d - 1 for d in largest)


def common_zero_certificate(
    generators: Sequence[Polynomial], max_degree: int | None = None
) -> Certificate:
    """Probe ideal slices for saturation, certifying absence of common zeros.

    Saturation at degree M (slice = full slice) persists to every higher
    degree, so a single witnessed M yields NO_COMMON_ZERO.  A run that
    exhausts the probe bound without saturating reports
    COMMON_ZERO_EXISTS_LIKELY when it reached the default bound, and
    INCONCLUSIVE when a caller-supplied smaller bound cut it short.
    """
    _, degrees = checked_generators(generators)
    default_bound = default_probe_bound(degrees, generators[0].n)
    bound = default_bound if max_degree is None else max_degree
    hilbert = []
    saturation_degree = None
    probed = 0
    for m in range(1, bound + 1):
        piece = ideal_graded_piece(generators, m)
        dim_full = piece.ambient_dimension()
        hilbert.append((m, piece.dim, dim_full))
        probed = m
        if piece.dim == dim_full:
            saturation_degree = m
            break
    if saturation_degree is not None:
        status = CertificateStatus.NO_COMMON_ZERO
    elif bound >= default_bound:
        status = CertificateStatus.COMMON_ZERO_EXISTS_LIKELY
    else:
        status = CertificateStatus.INCONCLUSIVE
    return Certificate(
        status=status,
        saturation_degree=saturation_degree,
        probe_degree_reached=probed,
        hilbert_values=tuple(hilbert),
    )
