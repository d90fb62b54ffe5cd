"""Exact row reduction and kernels over Q(i)."""

import random

from hnkit import GaussianRational
from hnkit.linalg import kernel_basis, rank, reduce_vector, rref
from hnkit.scalars import ONE, Rational, ZERO


def g(re=0, im=0):
    return GaussianRational(re, im)


def random_rows(rng: random.Random, rows: int, cols: int):
    return [
        [
            g(Rational(rng.randint(-4, 4), rng.randint(1, 3)), rng.randint(-2, 2))
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]


def test_rref_simple():
    reduced, pivots = rref([[g(2), g(4)], [g(1), g(2)]], 2)
    assert pivots == (0,)
    assert reduced == ((ONE, g(2)),)


def test_rref_identity_normalization():
    rows = [[g(0, 2), g(2)], [g(1), g(1)]]
    reduced, pivots = rref(rows, 2)
    assert pivots == (0, 1)
    assert reduced == ((ONE, ZERO), (ZERO, ONE))


def test_rref_canonical_under_row_operations():
    rng = random.Random(17)
    for _ in range(30):
        rows = random_rows(rng, rng.randint(1, 5), rng.randint(1, 5))
        reduced, _ = rref(rows, len(rows[0]))
        # scramble: shuffle rows and add random multiples of other rows
        scrambled = [list(row) for row in rows]
        rng.shuffle(scrambled)
        if len(scrambled) >= 2:
            factor = g(rng.randint(-2, 2), rng.randint(-2, 2))
            scrambled[0] = [
                a + factor * b for a, b in zip(scrambled[0], scrambled[1])
            ]
        again, _ = rref(scrambled, len(rows[0]))
        assert reduced == again


def test_kernel_is_annihilated():
    rng = random.Random(23)
    for _ in range(30):
        cols = rng.randint(1, 6)
        rows = random_rows(rng, rng.randint(1, 4), cols)
        kernel, _ = kernel_basis(rows, cols)
        assert rank(rows, cols) + len(kernel) == cols
        for vector in kernel:
            for row in rows:
                total = ZERO
                for a, b in zip(row, vector):
                    total = total + a * b
                assert total.is_zero()


def test_reduce_vector_membership():
    rows = [[g(1), g(0), g(1)], [g(0), g(1), g(2)]]
    reduced, pivots = rref(rows, 3)
    inside = [g(2), g(3), g(8)]  # 2*row1 + 3*row2
    remainder = reduce_vector(reduced, pivots, inside)
    assert not any(remainder)
    outside = [g(0), g(0), g(1)]
    assert any(reduce_vector(reduced, pivots, outside))


def test_zero_matrix_kernel_is_identity():
    kernel, pivots = kernel_basis([[ZERO, ZERO]], 2)
    assert len(kernel) == 2
    assert pivots == (0, 1)
