"""Shared corpus fixtures.

The HN corpus spreads over 2 <= n <= 6 and 2 <= d <= 5 without piling the
largest degree onto the largest variable count at full support (exact
arithmetic cost explodes in that corner while adding no coverage: the bounds
are still both reached).  Negative controls are deterministic pseudo-random
draws; a draw that happens to be Hessian nilpotent would be skipped by
bumping its seed, keeping the controls honestly negative.
"""

from __future__ import annotations

import pytest

from hnkit import (
    FamilyKind,
    FamilySpec,
    GaussianRational,
    I,
    is_hessian_nilpotent,
    random_homogeneous,
)


def g(re=0, im=0):
    return GaussianRational(re, im)


def _iso(direction, d):
    return FamilySpec(
        kind=FamilyKind.ISOTROPIC_POWER,
        n=len(direction),
        d=d,
        directions=(tuple(direction),),
    )


def _ortho(directions, coefficients, d):
    return FamilySpec(
        kind=FamilyKind.ORTHO_ISOTROPIC_SUM,
        n=len(directions[0]),
        d=d,
        directions=tuple(tuple(a) for a in directions),
        coefficients=tuple(coefficients),
    )


def hn_family_specs() -> list[FamilySpec]:
    one, zero = g(1), g(0)
    specs: list[FamilySpec] = []
    # n = 2
    for d in (2, 3, 4, 5):
        specs.append(_iso([one, I], d))
        specs.append(_iso([one, -I], d))
        specs.append(_iso([g(2, -1), g(1, 2)], d))
    # n = 3
    for d in (2, 3, 4, 5):
        specs.append(_iso([g(3), g(4), g(0, 5)], d))
        specs.append(_iso([one, I, zero], d))
    for d in (2, 3, 4):
        specs.append(_iso([g(5), g(12), g(0, 13)], d))
    for d in (2, 3):
        specs.append(_iso([zero, g(3), g(0, 3)], d))
    # n = 4
    a_front = [one, I, zero, zero]
    a_back = [zero, zero, one, I]
    a_full = [one, I, one, I]
    for d in (2, 3, 4, 5):
        specs.append(_iso(a_front, d))
    for d in (2, 3, 4):
        specs.append(_iso(a_full, d))
    for d in (2, 3):
        specs.append(_iso([g(3), g(4), g(0, 5), zero], d))
    for d in (2, 3, 4):
        specs.append(_ortho([a_front, a_back], [one, one], d))
    specs.append(_ortho([a_front, a_back], [g(2), g(0, 3)], 3))
    for d in (2, 3):
        specs.append(_ortho([a_front, a_full], [one, g(1, 1)], d))
    # n = 5
    for d in (2, 3, 4):
        specs.append(_iso([one, I, zero, zero, zero], d))
        specs.append(_iso([g(3), g(4), g(0, 5), one, I], d))
    for d in (2, 3):
        specs.append(
            _ortho(
                [[one, I, zero, zero, zero], [zero, zero, g(3), g(4), g(0, 5)]],
                [one, g(2)],
                d,
            )
        )
    # n = 6
    z6 = [zero] * 6
    for d in (2, 3):
        specs.append(_iso([one, I] + z6[:4], d))
        specs.append(_iso([g(20), g(21), zero, g(0, 29), zero, zero], d))
    specs.append(_iso([one, I, one, I, one, I], 2))
    for d in (2, 3):
        specs.append(
            _ortho(
                [
                    [one, I, zero, zero, zero, zero],
                    [zero, zero, one, I, zero, zero],
                    [zero, zero, zero, zero, one, I],
                ],
                [one, g(2), one],
                d,
            )
        )
    specs.append(
        _ortho(
            [[g(3), g(4), g(0, 5), zero, zero, zero], [zero, zero, zero, one, I, zero]],
            [one, one],
            3,
        )
    )
    return specs


_NEGATIVE_SHAPES = [
    (2, 2, 4), (2, 3, 4), (2, 4, 4), (2, 5, 4),
    (3, 2, 4), (3, 3, 4), (3, 4, 4), (3, 5, 4),
    (4, 2, 4), (4, 3, 4), (4, 4, 4),
    (5, 2, 4), (5, 3, 4),
    (6, 2, 4), (6, 3, 2),
]


def negative_control_polys() -> list:
    controls = []
    for n, d, count in _NEGATIVE_SHAPES:
        produced = 0
        seed = 1000 * n + 100 * d
        while produced < count:
            p = random_homogeneous(n, d, seed)
            seed += 1
            if is_hessian_nilpotent(p):
                continue  # measure-zero HN draw: bump the seed
            controls.append(p)
            produced += 1
    return controls


@pytest.fixture(scope="session")
def hn_corpus():
    """List of (spec, polynomial) pairs; every member verified HN on build."""
    return [(spec, spec.build()) for spec in hn_family_specs()]


@pytest.fixture(scope="session")
def negative_controls():
    return negative_control_polys()
