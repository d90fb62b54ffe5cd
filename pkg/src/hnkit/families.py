"""Constructors for HN test corpora and negative controls.

Powers of an isotropic linear form (sum of squared direction entries zero)
are the canonical Hessian-nilpotent witnesses: the Hessian is a rank-one
multiple of the direction's outer product with zero trace.  Sums of powers of
pairwise fully-orthogonal isotropic forms extend the family.  Both
constructors verify nilpotency through the toolkit itself after building the
polynomial instead of trusting the algebraic argument.

``random_homogeneous`` supplies deterministic pseudo-random negative
controls; the generator is a fixed, documented mix function so corpora are
reproducible bit-for-bit anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .analysis import is_hessian_nilpotent
from .errors import InternalCheckError
from .poly import Polynomial, monomial_basis
from .scalars import GaussianRational, ZERO
from .textform import format_gaussian_list, parse_gaussian


def _dot(a: Sequence[GaussianRational], b: Sequence[GaussianRational]) -> GaussianRational:
    """The bilinear (not Hermitian) pairing sum a_i b_i."""
    total = ZERO
    for x, y in zip(a, b):
        total = total + x * y
    return total


def _as_direction(values) -> tuple[GaussianRational, ...]:
    return tuple(
        v if isinstance(v, GaussianRational) else GaussianRational(v) for v in values
    )


def _linear_form(direction: Sequence[GaussianRational]) -> Polynomial:
    n = len(direction)
    terms = {}
    for i, coeff in enumerate(direction):
        if coeff:
            exponent = [0] * n
            exponent[i] = 1
            terms[tuple(exponent)] = coeff
    return Polynomial(n, terms)


def isotropic_power(direction, d: int) -> Polynomial:
    """(a.z)^d for an isotropic direction a (sum a_i^2 = 0, a nonzero), d >= 2."""
    a = _as_direction(direction)
    if len(a) < 1:
        raise ValueError("direction must be non-empty")
    if all(v.is_zero() for v in a):
        raise ValueError("direction must be nonzero")
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    if not _dot(a, a).is_zero():
        raise ValueError(f"direction is not isotropic: sum of squares is {_dot(a, a)}")
    p = _linear_form(a) ** d
    if not is_hessian_nilpotent(p):
        raise InternalCheckError("isotropic power failed the nilpotency check")
    return p


def ortho_isotropic_sum(directions, coefficients, d: int) -> Polynomial:
    """sum_j c_j (a_j.z)^d for isotropic directions with a_j . a_k = 0 for all j, k.

    The full-orthogonality requirement includes j = k, which is exactly
    isotropy of each direction.  The Hessian is then a sum of pairwise
    annihilating rank-one nilpotents; nilpotency is still verified, not
    assumed.
    """
    dirs = [_as_direction(a) for a in directions]
    coeffs = [
        c if isinstance(c, GaussianRational) else GaussianRational(c)
        for c in coefficients
    ]
    if not dirs:
        raise ValueError("at least one direction is required")
    if len(dirs) != len(coeffs):
        raise ValueError(
            f"{len(dirs)} directions but {len(coeffs)} coefficients"
        )
    n = len(dirs[0])
    if any(len(a) != n for a in dirs):
        raise ValueError("directions must share one length")
    if any(all(v.is_zero() for v in a) for a in dirs):
        raise ValueError("directions must be nonzero")
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    for j, a in enumerate(dirs):
        for k in range(j, len(dirs)):
            if not _dot(a, dirs[k]).is_zero():
                raise ValueError(
                    f"directions {j + 1} and {k + 1} are not orthogonal "
                    f"(pairing {_dot(a, dirs[k])})"
                )
    total = Polynomial.zero(n)
    for a, c in zip(dirs, coeffs):
        total = total + _linear_form(a) ** d * c
    if not is_hessian_nilpotent(total):
        raise InternalCheckError("orthogonal isotropic sum failed the nilpotency check")
    return total


# -- deterministic pseudo-random draws ------------------------------------------

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    """The splitmix64 finalizer: the fixed mix function behind corpus draws."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def random_homogeneous(n: int, d: int, seed: int) -> Polynomial:
    """Deterministic pseudo-random homogeneous polynomial of degree d.

    For the basis monomial at position j (graded-lex descending), the draw is
    ``h = splitmix64(splitmix64(seed) ^ splitmix64(j + 1))``; the real part of
    the coefficient is ``h mod 7 - 3`` and the imaginary part is
    ``(h >> 8) mod 7 - 3``, giving small Gaussian integers in [-3, 3].  A draw
    of 0 drops the term, so the output is mildly sparse.  In the measure-zero
    event that every coefficient vanishes, the leading basis monomial gets
    coefficient 1 so the result stays homogeneous of degree d.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    basis = monomial_basis(n, d)
    seed_mix = _splitmix64(seed & _MASK64)
    terms = {}
    for j, exponent in enumerate(basis):
        h = _splitmix64(seed_mix ^ _splitmix64(j + 1))
        re = h % 7 - 3
        im = (h >> 8) % 7 - 3
        if re or im:
            terms[exponent] = GaussianRational(re, im)
    if not terms:
        terms[basis[0]] = GaussianRational(1)
    return Polynomial(n, terms)


# -- family specifications and the corpus file format ---------------------------


class FamilyKind(Enum):
    ISOTROPIC_POWER = "ISOTROPIC_POWER"
    ORTHO_ISOTROPIC_SUM = "ORTHO_ISOTROPIC_SUM"
    RANDOM_HOMOGENEOUS = "RANDOM_HOMOGENEOUS"


@dataclass(frozen=True)
class FamilySpec:
    """A reproducible recipe for one corpus polynomial.

    Identical specs build bit-identical polynomials; the corpus file format
    (a JSON list of these, coefficients in canonical text) is what the CLI's
    ``family`` command consumes.
    """

    kind: FamilyKind
    n: int
    d: int
    directions: tuple = ()
    coefficients: tuple = ()
    seed: int = 0

    def build(self) -> Polynomial:
        if self.kind is FamilyKind.ISOTROPIC_POWER:
            if len(self.directions) != 1:
                raise ValueError("ISOTROPIC_POWER takes exactly one direction")
            return isotropic_power(self.directions[0], self.d)
        if self.kind is FamilyKind.ORTHO_ISOTROPIC_SUM:
            coefficients = self.coefficients or tuple(
                GaussianRational(1) for _ in self.directions
            )
            return ortho_isotropic_sum(self.directions, coefficients, self.d)
        return random_homogeneous(self.n, self.d, self.seed)

    def is_hn_family(self) -> bool:
        return self.kind is not FamilyKind.RANDOM_HOMOGENEOUS

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "n": self.n, "d": self.d}
        if self.directions:
            out["directions"] = [format_gaussian_list(a) for a in self.directions]
        if self.coefficients:
            out["coefficients"] = format_gaussian_list(self.coefficients)
        if self.kind is FamilyKind.RANDOM_HOMOGENEOUS:
            out["seed"] = self.seed
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "FamilySpec":
        kind = FamilyKind(data["kind"])
        directions = tuple(
            tuple(parse_gaussian(c) for c in a) for a in data.get("directions", [])
        )
        coefficients = tuple(parse_gaussian(c) for c in data.get("coefficients", []))
        return cls(
            kind=kind,
            n=int(data["n"]),
            d=int(data["d"]),
            directions=directions,
            coefficients=coefficients,
            seed=int(data.get("seed", 0)),
        )


def load_family_specs(path) -> list[FamilySpec]:
    """Read a corpus file: a JSON list of family-spec objects."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, list):
        raise ValueError("corpus file must contain a JSON list of family specs")
    return [FamilySpec.from_json_dict(entry) for entry in data]


def dump_family_specs(specs: Sequence[FamilySpec], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump([spec.to_json_dict() for spec in specs], handle, indent=2, sort_keys=True)
        handle.write("\n")
