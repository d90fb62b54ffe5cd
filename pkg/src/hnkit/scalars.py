"""Exact arithmetic in Q(i), the field of Gaussian rationals.

A Gaussian rational is ``re + im*i`` with ``re`` and ``im`` arbitrary-precision
rationals, always kept in lowest terms.  Equality is exact; nothing here ever
rounds.  Values are immutable: no method mutates ``self``.

The rational backend is ``gmpy2.mpq`` when available (markedly faster) and
``fractions.Fraction`` otherwise.  Both normalize to lowest terms and hash
identically, so the choice is invisible to callers.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

_RAT_TYPE = type(Rational(0))


def _as_rational(value) -> "Rational":
    if type(value) is _RAT_TYPE:
        return value
    return Rational(value)


class GaussianRational:
    """An element of Q(i).  Immutable; all operations return new values."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_rational(re)
        self.im = _as_rational(im)

    # -- ring / field structure -------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        norm = c * c + d * d
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure helpers -------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> "Rational":
        """The field norm re^2 + im^2 (a non-negative rational)."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- equality and hashing ----------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # Matches hash(rational) when purely real so x == q implies equal hashes.
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f'GaussianRational("{self.re}", "{self.im}")'


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, _RAT_TYPE, Fraction)):
        return GaussianRational(value)
    return NotImplemented


def format_gaussian(value: GaussianRational) -> str:
    """Canonical text for a Gaussian rational: ``a``, ``bi``, ``a+bi`` or ``a-bi``.

    Rationals print as ``p/q``; a unit imaginary part prints as bare ``i``.
    """
    re, im = value.re, value.im
    if not im:
        return str(re)
    if im == 1:
        im_text = "i"
    elif im == -1:
        im_text = "-i"
    else:
        im_text = f"{im}i"
    if not re:
        return im_text
    sign = "-" if im_text.startswith("-") else "+"
    return f"{re}{sign}{im_text.lstrip('-')}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
