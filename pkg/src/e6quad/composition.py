"""Cayley-Dickson tower F_m^K for m <= 3 (K, quadratic extension, quaternions,
octonions) over Q or Q(i).

The recursive doubling product

    (x1, x2) * (y1, y2) = (x1 y1 - conj(y2) x2,  y2 x1 + x2 conj(y1))

is the single source of truth.  The order ``y2 x1`` in the second component
matters once the base is non-commutative: with ``x1 y2`` instead, level 3 is
neither alternative nor a composition algebra.  A signed structure-constant
table for each level is derived from it once (``structure_table``) and used
as the fast path by :func:`cd_mul`.  Basis labelling: ``e0 = 1`` and the generator adjoined at
level ``m + 1`` is ``e_{2^m}``; ``e_{2^m + j}`` is ``(0, e_j)``.
"""

from __future__ import annotations

import contextlib
import random
from functools import lru_cache

from gmpy2 import mpq

from .scalars import (
    GScalar,
    is_zero,
    random_scalar,
    scalar_from_json,
    scalar_to_json,
    sigma,
)

MAX_LEVEL = 3


class LevelMismatchError(ValueError):
    """Arithmetic between Cayley-Dickson numbers of different levels."""


class NonInvertibleError(ArithmeticError):
    """Raised by :func:`invert` for null elements (N(x) = 0)."""


class CDNum:
    """Element of F_m^K: ``2**level`` scalar coordinates on e0 .. e_{2^m - 1}."""

    __slots__ = ("level", "coeffs")

    def __init__(self, coeffs, level: int | None = None):
        coeffs = tuple(coeffs)
        if level is None:
            level = len(coeffs).bit_length() - 1
        if not 0 <= level <= MAX_LEVEL or len(coeffs) != 1 << level:
            raise ValueError(
                f"need 2**level coefficients with 0 <= level <= {MAX_LEVEL}, "
                f"got {len(coeffs)} for level {level}")
        self.level = level
        self.coeffs = coeffs

    @classmethod
    def zero(cls, level: int = 3) -> "CDNum":
        return cls((mpq(0),) * (1 << level), level)

    @classmethod
    def one(cls, level: int = 3) -> "CDNum":
        return cls.unit(0, level)

    @classmethod
    def unit(cls, index: int, level: int = 3, scale=1) -> "CDNum":
        c = [mpq(0)] * (1 << level)
        c[index] = scale if not isinstance(scale, int) else mpq(scale)
        return cls(c, level)

    @classmethod
    def scalar(cls, s, level: int = 3) -> "CDNum":
        return cls.unit(0, level, s)

    # -- vector space -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, CDNum):
            return False
        if other.level != self.level:
            raise LevelMismatchError(
                f"level {self.level} vs level {other.level}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return CDNum([a + b for a, b in zip(self.coeffs, other.coeffs)], self.level)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return CDNum([a - b for a, b in zip(self.coeffs, other.coeffs)], self.level)

    def __neg__(self):
        return CDNum([-a for a in self.coeffs], self.level)

    def scale(self, s) -> "CDNum":
        return CDNum([s * a for a in self.coeffs], self.level)

    def __mul__(self, other):
        if isinstance(other, CDNum):
            return cd_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        # K is central, so left and right scalar multiplication agree
        return self.scale(other)

    def __truediv__(self, s):
        return CDNum([a / s for a in self.coeffs], self.level)

    # -- structure ------------------------------------------------------------
    def conj(self) -> "CDNum":
        return cd_conj(self)

    def re(self):
        return re_part(self)

    def norm(self):
        return norm_form(self)

    def sigma(self) -> "CDNum":
        return complex_conj_entry(self)

    def is_zero(self) -> bool:
        return all(is_zero(a) for a in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CDNum):
            return NotImplemented
        return self.level == other.level and all(
            is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def __repr__(self):
        terms = [f"{a}*e{i}" for i, a in enumerate(self.coeffs) if not is_zero(a)]
        return f"CDNum[{self.level}]({' + '.join(terms) or '0'})"

    def halves(self):
        h = len(self.coeffs) // 2
        return (CDNum(self.coeffs[:h], self.level - 1),
                CDNum(self.coeffs[h:], self.level - 1))

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": [scalar_to_json(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CDNum":
        return cls([scalar_from_json(a) for a in obj["coeffs"]], int(obj["level"]))


OctC = CDNum  # level-3 CDNum over Q(i)


def embed(x: CDNum, level: int) -> CDNum:
    """Zero-pad ``x`` into F_level via x -> (x, 0) repeatedly."""
    if level < x.level:
        raise LevelMismatchError("cannot embed into a lower level")
    pad = (1 << level) - len(x.coeffs)
    return CDNum(x.coeffs + (mpq(0),) * pad, level)


# ---------------------------------------------------------------------------
# the doubling product (source of truth)
# ---------------------------------------------------------------------------

def cd_mul_recursive(x: CDNum, y: CDNum) -> CDNum:
    """Product computed directly from the doubling formula."""
    if x.level != y.level:
        raise LevelMismatchError(f"level {x.level} vs level {y.level}")
    if x.level == 0:
        return CDNum((x.coeffs[0] * y.coeffs[0],), 0)
    x1, x2 = x.halves()
    y1, y2 = y.halves()
    a = cd_mul_recursive(x1, y1) - cd_mul_recursive(cd_conj(y2), x2)
    b = cd_mul_recursive(y2, x1) + cd_mul_recursive(x2, cd_conj(y1))
    return CDNum(a.coeffs + b.coeffs, x.level)


@lru_cache(maxsize=None)
def structure_table(level: int) -> tuple:
    """``table[i][j] = (sign, k)`` with ``e_i e_j = sign * e_k``.

    Derived from :func:`cd_mul_recursive` on basis units with integer
    coefficients.
    """
    n = 1 << level
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = cd_mul_recursive(CDNum.unit(i, level), CDNum.unit(j, level))
            nz = [(k, c) for k, c in enumerate(prod.coeffs) if c]
            assert len(nz) == 1 and abs(nz[0][1]) == 1
            k, c = nz[0]
            row.append((int(c), k))
        rows.append(tuple(row))
    return tuple(rows)


# Per level, for each output slot k: the tuple of (sign, i, j) with e_i e_j = sign e_k.
_FAST: dict[int, tuple] = {}


def _fast_plan(level: int) -> tuple:
    plan = _FAST.get(level)
    if plan is None:
        table = structure_table(level)
        n = 1 << level
        slots = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                sign, k = table[i][j]
                slots[k].append((sign, i, j))
        plan = tuple(tuple(s) for s in slots)
        _FAST[level] = plan
    return plan


def cd_mul(x: CDNum, y: CDNum) -> CDNum:
    """Product in F_m^K via the precomputed structure constants."""
    if x.level != y.level:
        raise LevelMismatchError(f"level {x.level} vs level {y.level}")
    a, b = x.coeffs, y.coeffs
    out = []
    for slot in _fast_plan(x.level):
        acc = 0
        for sign, i, j in slot:
            ai, bj = a[i], b[j]
            if not ai or not bj:
                continue
            if sign > 0:
                acc = acc + ai * bj
            else:
                acc = acc - ai * bj
        out.append(acc if not isinstance(acc, int) else mpq(acc))
    return CDNum(out, x.level)


@contextlib.contextmanager
def corrupted_table(level: int = 3, i: int = 1, j: int = 2):
    """Test hook: flip the sign of one structure constant of the fast path."""
    plan = [list(s) for s in _fast_plan(level)]
    for slot in plan:
        for n, (sign, a, b) in enumerate(slot):
            if (a, b) == (i, j):
                slot[n] = (-sign, a, b)
    saved = _FAST[level]
    _FAST[level] = tuple(tuple(s) for s in plan)
    try:
        yield
    finally:
        _FAST[level] = saved


# ---------------------------------------------------------------------------
# involution, trace, norm
# ---------------------------------------------------------------------------

def cd_conj(x: CDNum) -> CDNum:
    """Canonical involution: negate every coordinate except e0."""
    c = x.coeffs
    return CDNum((c[0],) + tuple(-a for a in c[1:]), x.level)


def re_part(x: CDNum):
    """Re(x) = (x + conj x) / 2, i.e. the e0 coordinate."""
    return x.coeffs[0]


def norm_form(x: CDNum):
    """N(x) = x conj(x) = sum of squared coordinates (no sigma applied)."""
    acc = 0
    for a in x.coeffs:
        if a:
            acc = acc + a * a
    return acc if not isinstance(acc, int) else mpq(acc)


def bracket(x: CDNum, y: CDNum):
    """Polarised norm <x|y> = N(x+y) - N(x) - N(y) = 2 Re(x conj y)."""
    if x.level != y.level:
        raise LevelMismatchError(f"level {x.level} vs level {y.level}")
    acc = 0
    for a, b in zip(x.coeffs, y.coeffs):
        if a and b:
            acc = acc + a * b
    return 2 * acc if not isinstance(acc, int) else mpq(2 * acc)


def invert(x: CDNum) -> CDNum:
    n = norm_form(x)
    if is_zero(n):
        raise NonInvertibleError(f"{x!r} is a null element (N = 0)")
    return cd_conj(x) / n


def complex_conj_entry(x: CDNum) -> CDNum:
    """Apply the field involution to every coordinate (z -> z-bar on F_m^C)."""
    return CDNum([sigma(a) for a in x.coeffs], x.level)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def random_cd(rng: random.Random, level: int = 3, field: str = "QI",
              density: float = 1.0) -> CDNum:
    """Random element; each coordinate is nonzero with probability ``density``."""
    out = []
    for _ in range(1 << level):
        if density < 1.0 and rng.random() > density:
            out.append(mpq(0) if field in ("Q", "QI") else 0.0)
        else:
            out.append(random_scalar(rng, field))
    return CDNum(out, level)


def basis_units(level: int = 3) -> list[CDNum]:
    return [CDNum.unit(i, level) for i in range(1 << level)]


def complex_basis_units(level: int = 3) -> list[CDNum]:
    """K-basis of F_m^C written with Gaussian coefficients."""
    return [CDNum.unit(i, level, GScalar(1)) for i in range(1 << level)]
