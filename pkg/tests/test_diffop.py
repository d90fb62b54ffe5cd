"""Differential-operator application, Hessians, and the apolarity form."""

import random

import pytest

from hnkit import (
    GaussianRational,
    PolyMatrix,
    Polynomial,
    apolar_form,
    apolar_gram,
    apply_diffop,
    derivative,
    gradient,
    hessian,
    laplacian,
    laplacian_power,
    matrix_power_is_zero,
    monomial_basis,
    monomial_factorial,
    sum_of_squares,
)
from hnkit.linalg import rank
from hnkit.textform import parse_polynomial as pp


def random_poly(rng: random.Random, n: int, max_degree: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        exponent = tuple(rng.randint(0, max_degree) for _ in range(n))
        if sum(exponent) <= max_degree:
            terms[exponent] = GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
    return Polynomial(n, terms)


def random_homogeneous_poly(rng: random.Random, n: int, d: int) -> Polynomial:
    basis = monomial_basis(n, d)
    terms = {
        basis[rng.randrange(len(basis))]: GaussianRational(
            rng.randint(-3, 3), rng.randint(-3, 3)
        )
        for _ in range(rng.randint(1, 4))
    }
    return Polynomial(n, terms)


def test_apply_diffop_examples():
    assert apply_diffop(pp("z1^2", 2), pp("z1^2*z2", 2)) == pp("2*z2", 2)
    assert apply_diffop(pp("z1*z2", 2), pp("z1^2*z2^2", 2)) == pp("4*z1*z2", 2)
    with pytest.raises(ValueError, match="variable-count mismatch"):
        apply_diffop(pp("z1", 1), pp("z1*z2", 2))


def test_apply_diffop_is_laplacian_for_the_quadric():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, 4)
        assert apply_diffop(sum_of_squares(n), p) == laplacian(p)


def test_apply_diffop_composition():
    rng = random.Random(37)
    for _ in range(25):
        n = rng.randint(1, 3)
        f = random_poly(rng, n, 2)
        h = random_poly(rng, n, 2)
        p = random_poly(rng, n, 4)
        assert apply_diffop(f * h, p) == apply_diffop(f, apply_diffop(h, p))


def test_apply_diffop_bilinear():
    rng = random.Random(41)
    for _ in range(15):
        n = rng.randint(1, 3)
        f, g, p = (random_poly(rng, n, 3) for _ in range(3))
        assert apply_diffop(f + g, p) == apply_diffop(f, p) + apply_diffop(g, p)
        assert apply_diffop(f, g + p) == apply_diffop(f, g) + apply_diffop(f, p)


def test_laplacian_examples():
    assert laplacian(pp("z1^2 + z2^2", 2)) == pp("4", 2)
    assert laplacian(pp("z1^3", 2)) == pp("6*z1", 2)
    for k in range(2, 6):
        assert laplacian(pp("(z1+i*z2)", 2) ** k).is_zero()


def test_laplacian_power_oracle_values():
    p = pp("z1^4", 1)
    # oracle: two explicit second partials: z1^4 -> 12 z1^2 -> 24
    by_partials = p.partial(1).partial(1).partial(1).partial(1)
    assert by_partials == pp("24", 1)
    assert laplacian_power(p, 2) == pp("24", 1)

    q = sum_of_squares(2) ** 2
    # oracle: iterate the Laplacian by explicit partials
    step = q.partial(1).partial(1) + q.partial(2).partial(2)
    oracle = step.partial(1).partial(1) + step.partial(2).partial(2)
    assert oracle == pp("64", 2)
    assert laplacian_power(q, 2) == pp("64", 2)

    r = random_poly(random.Random(2), 2, 4)
    assert laplacian_power(r, 0) == r
    with pytest.raises(ValueError):
        laplacian_power(r, -1)


def test_derivative_matches_iterated_partials():
    p = pp("z1^3*z2^2 + z2^4", 2)
    assert derivative(p, (2, 1)) == p.partial(1).partial(1).partial(2)
    assert derivative(p, (0, 0)) == p


def test_gradient_examples():
    assert gradient(sum_of_squares(3)) == (
        pp("2*z1", 3),
        pp("2*z2", 3),
        pp("2*z3", 3),
    )
    assert gradient(Polynomial.constant(2, 7)) == (
        Polynomial.zero(2),
        Polynomial.zero(2),
    )
    assert gradient(pp("z1^2*z2", 2)) == (pp("2*z1*z2", 2), pp("z1^2", 2))


def test_hessian_examples():
    assert hessian(sum_of_squares(3)) == PolyMatrix.identity(3, 3) * 2
    h = hessian(pp("(z1+i*z2)^2", 2))
    assert h == PolyMatrix(
        [[pp("2", 2), pp("2i", 2)], [pp("2i", 2), pp("-2", 2)]]
    )
    assert hessian(pp("z1 + 4*z2", 2)).is_zero()


def test_hessian_symmetric_random():
    rng = random.Random(43)
    for _ in range(20):
        p = random_poly(rng, rng.randint(2, 4), 4)
        assert hessian(p).is_symmetric()


def test_matrix_power_is_zero_examples():
    h = hessian(pp("(z1+i*z2)^2", 2))
    assert matrix_power_is_zero(h, 2)
    assert not matrix_power_is_zero(PolyMatrix.identity(3, 3), 5)
    assert matrix_power_is_zero(PolyMatrix.zero(2, 2, 2), 1)
    with pytest.raises(ValueError):
        matrix_power_is_zero(PolyMatrix.zero(2, 3, 2), 1)


def test_apolar_form_monomial_values():
    assert apolar_form(pp("z1", 2), pp("z1", 2), 1) == 1
    assert apolar_form(pp("z1", 2), pp("z2", 2), 1) == 0
    assert apolar_form(pp("z1^2", 2), pp("z1^2", 2), 2) == 2
    assert apolar_form(pp("z1*z2", 2), pp("z1*z2", 2), 2) == 1
    # oracle: D1^2 D2 applied to z1^2 z2 gives 2!*1! = 2
    assert apolar_form(pp("z1^2*z2", 2), pp("z1^2*z2", 2), 3) == 2


def test_apolar_form_rejects_bad_input():
    with pytest.raises(ValueError, match="homogeneous"):
        apolar_form(pp("z1^2 + z2", 2), pp("z1^2", 2), 2)
    with pytest.raises(ValueError, match="homogeneous"):
        apolar_form(pp("z1^2", 2), pp("z1", 2), 2)
    assert apolar_form(Polynomial.zero(2), pp("z1^2", 2), 2) == 0


def test_apolar_form_symmetric_random():
    rng = random.Random(47)
    for _ in range(40):
        n = rng.randint(1, 3)
        m = rng.randint(1, 4)
        f = random_homogeneous_poly(rng, n, m)
        g = random_homogeneous_poly(rng, n, m)
        assert apolar_form(f, g, m) == apolar_form(g, f, m)


def test_apolar_gram_diagonal_factorials_and_rank():
    gram = apolar_gram(2, 2)
    basis = monomial_basis(2, 2)
    assert [row[i] for i, row in enumerate(gram)] == [2, 1, 2]
    for m in range(0, 5):
        for n in range(1, 4):
            gram = apolar_gram(m, n)
            basis = monomial_basis(n, m)
            for i, row in enumerate(gram):
                for j, value in enumerate(row):
                    expected = monomial_factorial(basis[i]) if i == j else 0
                    assert value == expected
            assert rank(gram, len(basis)) == len(basis)
