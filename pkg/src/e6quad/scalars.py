"""Exact scalars: the rationals and the Gaussian rationals Q(i).

Rationals are ``gmpy2.mpq`` values (always in lowest terms, positive
denominator).  Gaussian rationals are :class:`GScalar` pairs.  Every other
module is written against the small generic interface below (``sigma``,
``abs2``, ``is_zero``), so plain Python ``float``/``complex`` values work as
an inexact backend as well.
"""

from __future__ import annotations

import random
from numbers import Number

import gmpy2
from gmpy2 import mpq

Rational = type(mpq())

#: Comparison tolerance used only by the float backend.
FLOAT_TOL = 1e-9

_EXACT_REAL = (int, Rational)
# mpq mixed with float/complex promotes to gmpy2's mpfr/mpc
_COMPLEX = (complex, type(gmpy2.mpc(0)))
_INEXACT = (float, type(gmpy2.mpfr(0))) + _COMPLEX


def Q(value, den=None) -> Rational:
    """Coerce ``value`` (int, Fraction, mpq, "p/q" string) to a rational."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, Rational):
        return value
    if isinstance(value, float):
        raise TypeError("refusing to build an exact rational from a float")
    return mpq(value)


class GScalar:
    """Gaussian rational ``re + i*im`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Q(re)
        self.im = Q(im)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GScalar):
            return GScalar(self.re + other.re, self.im + other.im)
        if isinstance(other, _EXACT_REAL):
            return GScalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GScalar):
            return GScalar(self.re - other.re, self.im - other.im)
        if isinstance(other, _EXACT_REAL):
            return GScalar(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _EXACT_REAL):
            return GScalar(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GScalar):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GScalar(a * c - b * d, a * d + b * c)
        if isinstance(other, _EXACT_REAL):
            return GScalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GScalar):
            n = other.re * other.re + other.im * other.im
            if n == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            a, b, c, d = self.re, self.im, other.re, other.im
            return GScalar((a * c + b * d) / n, (b * c - a * d) / n)
        if isinstance(other, _EXACT_REAL):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GScalar(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _EXACT_REAL):
            return GScalar(other) / self
        return NotImplemented

    def __neg__(self):
        return GScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GScalar(1) / self) ** (-n)
        result, base = GScalar(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GScalar":
        return GScalar(self.re, -self.im)

    def abs2(self) -> Rational:
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _EXACT_REAL):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GScalar({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"

    def __complex__(self):
        return complex(float(self.re), float(self.im))


I = GScalar(0, 1)


def conj_sigma(s):
    """Field involution: complex conjugation on Q(i), identity on Q."""
    if isinstance(s, GScalar):
        return GScalar(s.re, -s.im)
    if isinstance(s, _COMPLEX):
        return s.conjugate()
    return s


sigma = conj_sigma


def abs2(s):
    """``s * sigma(s)``, returned as a (real) rational."""
    if isinstance(s, GScalar):
        return s.re * s.re + s.im * s.im
    if isinstance(s, _COMPLEX):
        return (s * s.conjugate()).real
    return s * s


def real_part(s):
    if isinstance(s, GScalar):
        return s.re
    if isinstance(s, _COMPLEX):
        return s.real
    return s


def is_real(s) -> bool:
    if isinstance(s, GScalar):
        return s.im == 0
    if isinstance(s, _COMPLEX):
        return abs(s.imag) <= FLOAT_TOL
    return True


def is_exact(s) -> bool:
    return isinstance(s, (GScalar, *_EXACT_REAL))


def is_zero(s, tol: float = FLOAT_TOL) -> bool:
    """Exact zero test; falls back to ``|s| <= tol`` for floats."""
    if isinstance(s, _INEXACT):
        return abs(s) <= tol
    return not s


def simplify(s):
    """Demote a GScalar with zero imaginary part to a plain rational."""
    if isinstance(s, GScalar) and s.im == 0:
        return s.re
    return s


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def format_rational(q) -> str:
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Rational:
    if isinstance(text, bool):
        raise TypeError("boolean is not a rational")
    if isinstance(text, int):
        return mpq(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {text!r}")
    try:
        return mpq(text.strip())
    except ValueError as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def scalar_to_json(s):
    """Rational -> "p/q"; GScalar -> [re, im]."""
    if isinstance(s, GScalar):
        return [format_rational(s.re), format_rational(s.im)]
    if isinstance(s, _EXACT_REAL):
        return format_rational(s)
    if isinstance(s, _INEXACT):
        z = complex(s)
        return [z.real, z.imag] if isinstance(s, _COMPLEX) else z.real
    raise TypeError(f"not a scalar: {s!r}")


def scalar_from_json(obj):
    if isinstance(obj, list):
        if len(obj) != 2:
            raise ValueError("a Gaussian scalar is a two-element array")
        return GScalar(parse_rational(obj[0]), parse_rational(obj[1]))
    return parse_rational(obj)


# ---------------------------------------------------------------------------
# random sampling
# ---------------------------------------------------------------------------

NUMERATOR_RANGE = (-9, 9)
DENOMINATORS = (1, 2, 3, 5)


def random_rational(rng: random.Random) -> Rational:
    """Numerator uniform in [-9, 9], denominator from {1, 2, 3, 5}."""
    return mpq(rng.randint(*NUMERATOR_RANGE), rng.choice(DENOMINATORS))


def random_gscalar(rng: random.Random) -> GScalar:
    return GScalar(random_rational(rng), random_rational(rng))


def random_scalar(rng: random.Random, field: str = "QI"):
    """Random scalar from ``field``: "Q", "QI", "float" or "complex"."""
    if field == "Q":
        return random_rational(rng)
    if field == "QI":
        return random_gscalar(rng)
    if field == "float":
        return rng.uniform(-3.0, 3.0)
    if field == "complex":
        return complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
    raise ValueError(f"unknown field {field!r}")


def random_unit_gscalar(rng: random.Random) -> GScalar:
    """Random element of the unit circle in Q(i), via a Pythagorean pair."""
    m = rng.randint(1, 6)
    n = rng.randint(0, 6)
    d = m * m + n * n
    w = GScalar(mpq(m * m - n * n, d), mpq(2 * m * n, d))
    return w * rng.choice((GScalar(1), GScalar(-1), I, -I))


def zero_like(field: str):
    if field in ("Q", "QI"):
        return mpq(0)
    return 0.0


def is_number(s) -> bool:
    return isinstance(s, (GScalar, Number)) and not isinstance(s, bool)
