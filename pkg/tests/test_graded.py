"""Graded ideal slices, PDE solution slices, complements, and certificates."""

import random

import pytest

from hnkit import (
    CertificateStatus,
    GaussianRational,
    Polynomial,
    common_zero_certificate,
    default_probe_bound,
    ideal_graded_piece,
    monomial_basis,
    orthogonal_complement,
    pde_solution_slice,
    slice_dimension,
    sum_of_squares,
)
from hnkit.textform import parse_polynomial as pp


def random_homogeneous_poly(rng: random.Random, n: int, d: int) -> Polynomial:
    basis = monomial_basis(n, d)
    while True:
        terms = {
            basis[rng.randrange(len(basis))]: GaussianRational(
                rng.randint(-3, 3), rng.randint(-3, 3)
            )
            for _ in range(rng.randint(1, 3))
        }
        p = Polynomial(n, terms)
        if not p.is_zero():
            return p


def test_ideal_graded_piece_examples():
    generators = [pp("z1^2", 2), pp("z2^2", 2)]
    assert ideal_graded_piece(generators, 3).dim == 4 == slice_dimension(2, 3)
    piece = ideal_graded_piece(generators, 2)
    assert piece.dim == 2 < slice_dimension(2, 2)
    assert piece.contains(pp("z1^2 - 5*z2^2", 2))
    assert not piece.contains(pp("z1*z2", 2))
    assert ideal_graded_piece(generators, 1).dim == 0


def test_ideal_graded_piece_rejects_bad_generators():
    with pytest.raises(ValueError, match="generator 2 is not homogeneous"):
        ideal_graded_piece([pp("z1^2", 2), pp("z1 + z2^2", 2)], 3)
    with pytest.raises(ValueError, match="generator 1 is zero"):
        ideal_graded_piece([Polynomial.zero(2)], 3)
    with pytest.raises(ValueError, match="degree >= 1"):
        ideal_graded_piece([pp("3", 2)], 2)
    with pytest.raises(ValueError, match="at least one"):
        ideal_graded_piece([], 2)


def test_orthogonal_complement_examples():
    generators = [pp("z1^2", 2), pp("z2^2", 2)]
    piece = ideal_graded_piece(generators, 2)
    complement = orthogonal_complement(piece)
    assert complement.basis_polynomials() == [pp("z1*z2", 2)]
    # complement of the full slice is zero, and of zero is the full slice
    full = ideal_graded_piece(generators, 3)
    assert orthogonal_complement(full).dim == 0
    empty = ideal_graded_piece(generators, 1)
    assert orthogonal_complement(empty).dim == slice_dimension(2, 1)


def test_pde_solution_slice_examples():
    harmonic = pde_solution_slice([sum_of_squares(2)], 2)
    assert harmonic.basis_polynomials() == [pp("z1^2 - z2^2", 2), pp("z1*z2", 2)]

    # generators {z1}: solutions are polynomials in the remaining variables
    for n in (2, 3):
        for m in (1, 2, 4):
            sol = pde_solution_slice([pp("z1", n)], m)
            assert sol.dim == slice_dimension(n - 1, m)

    narrowed = pde_solution_slice([pp("z1^2", 2), pp("z1*z2", 2)], 3)
    assert narrowed.basis_polynomials() == [pp("z2^3", 2)]


def test_solution_slice_claim_random():
    """The key subspace identity: solutions = orthogonal complement of the ideal."""
    rng = random.Random(20240229)
    for _ in range(25):
        n = rng.randint(2, 3)
        k = rng.randint(1, 3)
        generators = [
            random_homogeneous_poly(rng, n, rng.randint(1, 3)) for _ in range(k)
        ]
        for m in range(0, 6):
            ideal = ideal_graded_piece(generators, m)
            solutions = pde_solution_slice(generators, m)
            assert solutions == orthogonal_complement(ideal)
            assert ideal.dim + solutions.dim == slice_dimension(n, m)


def test_default_probe_bound():
    assert default_probe_bound([2, 2], 2) == 3
    assert default_probe_bound([2, 2, 2], 3) == 4
    assert default_probe_bound([3, 3, 2], 2) == 5  # two largest of three
    assert default_probe_bound([1], 4) == 1


def test_certificate_saturating_pair():
    certificate = common_zero_certificate([pp("z1^2", 2), pp("z2^2", 2)])
    assert certificate.status is CertificateStatus.NO_COMMON_ZERO
    assert certificate.saturation_degree == 3
    assert certificate.hilbert_values == ((1, 0, 2), (2, 2, 3), (3, 4, 4))
    # saturation persistence, checked rather than assumed
    next_piece = ideal_graded_piece([pp("z1^2", 2), pp("z2^2", 2)], 4)
    assert next_piece.dim == slice_dimension(2, 4)


def test_certificate_with_common_zero():
    generators = [pp("z1^2", 2), pp("z1*z2", 2)]
    certificate = common_zero_certificate(generators)
    assert certificate.status is CertificateStatus.COMMON_ZERO_EXISTS_LIKELY
    assert certificate.saturation_degree is None
    assert certificate.probe_degree_reached == default_probe_bound([2, 2], 2)
    # the witness (0, 1) really is a common zero
    for g in generators:
        assert g.evaluate([0, 1]).is_zero()
    # no saturation can appear while a common zero exists, for any bound
    deeper = common_zero_certificate(generators, max_degree=8)
    assert deeper.status is CertificateStatus.COMMON_ZERO_EXISTS_LIKELY


def test_certificate_inconclusive_when_cut_short():
    certificate = common_zero_certificate(
        [pp("z1^2", 2), pp("z2^2", 2)], max_degree=2
    )
    assert certificate.status is CertificateStatus.INCONCLUSIVE
    assert certificate.probe_degree_reached == 2


def test_certificate_fermat_partials():
    generators = [pp("3*z1^2", 3), pp("3*z2^2", 3), pp("3*z3^2", 3)]
    certificate = common_zero_certificate(generators)
    assert certificate.status is CertificateStatus.NO_COMMON_ZERO
    assert certificate.saturation_degree == 4
    persists = ideal_graded_piece(generators, 5)
    assert persists.dim == slice_dimension(3, 5)


def test_common_zero_means_no_saturation():
    rng = random.Random(77)
    # build generator pairs sharing the common zero (0, ..., 0, 1)
    for n in (2, 3):
        point = [0] * (n - 1) + [1]
        generators = []
        for d in (2, 3):
            p = random_homogeneous_poly(rng, n, d)
            shift = p.coefficient(tuple([0] * (n - 1) + [d]))
            generators.append(p - Polynomial.monomial(n, tuple([0] * (n - 1) + [d]), shift))
        generators = [g for g in generators if not g.is_zero()]
        for g in generators:
            assert g.evaluate(point).is_zero()
        certificate = common_zero_certificate(generators, max_degree=7)
        assert certificate.status is not CertificateStatus.NO_COMMON_ZERO


def test_subspace_equality_is_representation_independent():
    a = ideal_graded_piece([pp("z1^2", 2), pp("z2^2", 2)], 2)
    b = ideal_graded_piece([pp("z1^2 + z2^2", 2), pp("z2^2", 2)], 2)
    assert a == b
