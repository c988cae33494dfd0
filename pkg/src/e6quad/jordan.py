"""The exceptional Jordan algebra h_3 of octonion-hermitian 3x3 matrices.

An element ``X = (xi1, xi2, xi3; x1, x2, x3)`` stands for the matrix

    [ xi1      x3       conj(x2) ]
    [ conj(x3) xi2      x1       ]
    [ x2       conj(x1) xi3      ]

with diagonal entries in K and off-diagonal entries in the octonions over K.
Products and forms are computed from componentwise formulas; the
trace-based definitions are kept alongside as independent routes
(``det_trace``, ``cross_trace``, ``cross_dual``, ``bilinear_trace``).
"""

from __future__ import annotations

import random
from functools import lru_cache

from gmpy2 import mpq

from .composition import CDNum, bracket, cd_conj, cd_mul, norm_form, random_cd
from .scalars import is_zero, random_scalar, scalar_from_json, scalar_to_json

HALF = mpq(1, 2)

#: Cyclic index triples (i, j, k), zero based.
TRIPLES = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class IndexTriple(tuple):
    """One of the cyclic triples (1,2,3), (2,3,1), (3,1,2) (one based)."""

    def __new__(cls, i, j, k):
        if (i, j, k) not in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            raise ValueError(f"({i},{j},{k}) is not a cyclic index triple")
        return super().__new__(cls, (i, j, k))

    @property
    def zero_based(self):
        return tuple(n - 1 for n in self)


class Herm3:
    """Element of h_3^K: three diagonal scalars and three octonions."""

    __slots__ = ("xi", "x")

    def __init__(self, xi, x):
        xi, x = tuple(xi), tuple(x)
        if len(xi) != 3 or len(x) != 3:
            raise ValueError("Herm3 needs three diagonal scalars and three octonions")
        for o in x:
            if not isinstance(o, CDNum) or o.level != 3:
                raise TypeError("off-diagonal entries must be level-3 CDNum")
        self.xi = tuple(mpq(s) if isinstance(s, int) else s for s in xi)
        self.x = x

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls) -> "Herm3":
        z = CDNum.zero()
        return cls((mpq(0),) * 3, (z, z, z))

    @classmethod
    def identity(cls) -> "Herm3":
        z = CDNum.zero()
        return cls((mpq(1),) * 3, (z, z, z))

    @classmethod
    def E(cls, i: int, scale=1) -> "Herm3":
        """Diagonal idempotent with xi_i = scale (one based ``i``)."""
        xi = [mpq(0)] * 3
        xi[i - 1] = mpq(scale) if isinstance(scale, int) else scale
        z = CDNum.zero()
        return cls(xi, (z, z, z))

    @classmethod
    def slot(cls, i: int, value: CDNum) -> "Herm3":
        """Element with a single off-diagonal entry x_i = value (one based)."""
        x = [CDNum.zero()] * 3
        x[i - 1] = value
        return cls((mpq(0),) * 3, x)

    @classmethod
    def make(cls, xi1, xi2, xi3, x1=None, x2=None, x3=None) -> "Herm3":
        z = CDNum.zero()
        return cls((xi1, xi2, xi3), (x1 or z, x2 or z, x3 or z))

    # -- vector space ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Herm3):
            return NotImplemented
        return Herm3([a + b for a, b in zip(self.xi, other.xi)],
                     [a + b for a, b in zip(self.x, other.x)])

    def __sub__(self, other):
        if not isinstance(other, Herm3):
            return NotImplemented
        return Herm3([a - b for a, b in zip(self.xi, other.xi)],
                     [a - b for a, b in zip(self.x, other.x)])

    def __neg__(self):
        return Herm3([-a for a in self.xi], [-a for a in self.x])

    def scale(self, s) -> "Herm3":
        return Herm3([s * a for a in self.xi], [a.scale(s) for a in self.x])

    def __rmul__(self, s):
        if isinstance(s, Herm3):
            return NotImplemented
        return self.scale(s)

    def __mul__(self, s):
        if isinstance(s, Herm3):
            raise TypeError("use jordan_mul or cross for products of Herm3")
        return self.scale(s)

    def coords(self) -> tuple:
        """The 27 coordinates in :func:`basis27` order."""
        out = list(self.xi)
        for o in self.x:
            out.extend(o.coeffs)
        return tuple(out)

    @classmethod
    def from_coords(cls, c) -> "Herm3":
        c = list(c)
        if len(c) != 27:
            raise ValueError("need 27 coordinates")
        return cls(c[:3], [CDNum(c[3 + 8 * n: 11 + 8 * n], 3) for n in range(3)])

    def is_zero(self) -> bool:
        return all(is_zero(a) for a in self.coords())

    def __eq__(self, other):
        if not isinstance(other, Herm3):
            return NotImplemented
        return all(is_zero(a - b) for a, b in zip(self.coords(), other.coords()))

    def __hash__(self):
        return hash(self.coords())

    def __repr__(self):
        xi = ", ".join(str(a) for a in self.xi)
        x = ", ".join(repr(o) for o in self.x)
        return f"Herm3({xi}; {x})"

    def to_json(self) -> dict:
        return {"xi": [scalar_to_json(a) for a in self.xi],
                "x": [o.to_json() for o in self.x]}

    @classmethod
    def from_json(cls, obj) -> "Herm3":
        try:
            xi = [scalar_from_json(a) for a in obj["xi"]]
            x = [CDNum.from_json(o) for o in obj["x"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Herm3 JSON: {exc}") from exc
        return cls(xi, x)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def jordan_mul(X: Herm3, Y: Herm3) -> Herm3:
    """X o Y = (XY + YX)/2, computed componentwise."""
    xi, eta, x, y = X.xi, Y.xi, X.x, Y.x
    zeta = [None] * 3
    z = [None] * 3
    for i, j, k in TRIPLES:
        zeta[i] = xi[i] * eta[i] + HALF * (bracket(x[j], y[j]) + bracket(x[k], y[k]))
        acc = (y[i].scale(xi[j] + xi[k]) + x[i].scale(eta[j] + eta[k])
               + cd_conj(cd_mul(y[j], x[k])) + cd_conj(cd_mul(x[j], y[k])))
        z[i] = acc.scale(HALF)
    return Herm3(zeta, z)


def jordan_square(X: Herm3) -> Herm3:
    """X o X via zeta_i = xi_i^2 + N(x_j) + N(x_k), z_i = (xi_j+xi_k) x_i + conj(x_j x_k)."""
    xi, x = X.xi, X.x
    zeta = [None] * 3
    z = [None] * 3
    for i, j, k in TRIPLES:
        zeta[i] = xi[i] * xi[i] + norm_form(x[j]) + norm_form(x[k])
        z[i] = x[i].scale(xi[j] + xi[k]) + cd_conj(cd_mul(x[j], x[k]))
    return Herm3(zeta, z)


def trace(X: Herm3):
    return X.xi[0] + X.xi[1] + X.xi[2]


def bilinear(X: Herm3, Y: Herm3):
    """(X, Y) = sum xi_i eta_i + sum <x_i|y_i>."""
    acc = 0
    for a, b in zip(X.xi, Y.xi):
        if a and b:
            acc = acc + a * b
    for a, b in zip(X.x, Y.x):
        acc = acc + bracket(a, b)
    return acc if not isinstance(acc, int) else mpq(acc)


def bilinear_trace(X: Herm3, Y: Herm3):
    """(X, Y) = tr(X o Y)."""
    return trace(jordan_mul(X, Y))


def trilinear(X: Herm3, Y: Herm3, Z: Herm3):
    """Symmetric trilinear form from the trace identity

    3(X,Y,Z) = tr(XoYoZ) - tr X tr(YoZ)/2 - tr Y tr(XoZ)/2 - tr Z tr(XoY)/2
               + tr X tr Y tr Z / 2.
    """
    tx, ty, tz = trace(X), trace(Y), trace(Z)
    xy = jordan_mul(X, Y)
    t3 = trace(jordan_mul(xy, Z))
    val = (t3 - HALF * tx * bilinear_trace(Y, Z) - HALF * ty * bilinear_trace(X, Z)
           - HALF * tz * trace(xy) + HALF * tx * ty * tz)
    return val / 3


def det(X: Herm3):
    """xi1 xi2 xi3 - sum xi_i N(x_i) + 2 Re(x1 x2 x3)."""
    xi, x = X.xi, X.x
    re123 = cd_mul(cd_mul(x[0], x[1]), x[2]).coeffs[0]
    return (xi[0] * xi[1] * xi[2] - xi[0] * norm_form(x[0]) - xi[1] * norm_form(x[1])
            - xi[2] * norm_form(x[2]) + 2 * re123)


def det_trace(X: Herm3):
    """det X = tr(X^3)/3 - tr X tr(X^2)/2 + (tr X)^3/6."""
    t = trace(X)
    x2 = jordan_mul(X, X)
    return (trace(jordan_mul(x2, X)) / 3 - HALF * t * trace(x2)
            + t * t * t / 6)


def cross(X: Herm3, Y: Herm3) -> Herm3:
    """Freudenthal cross product, componentwise:

    2 zeta_i = xi_j eta_k + xi_k eta_j - <x_i|y_i>
    2 z_i    = conj(y_j x_k) + conj(x_j y_k) - xi_i y_i - eta_i x_i
    """
    xi, eta, x, y = X.xi, Y.xi, X.x, Y.x
    zeta = [None] * 3
    z = [None] * 3
    for i, j, k in TRIPLES:
        zeta[i] = HALF * (xi[j] * eta[k] + xi[k] * eta[j] - bracket(x[i], y[i]))
        acc = (cd_conj(cd_mul(y[j], x[k])) + cd_conj(cd_mul(x[j], y[k]))
               - y[i].scale(xi[i]) - x[i].scale(eta[i]))
        z[i] = acc.scale(HALF)
    return Herm3(zeta, z)


def cross_square(X: Herm3) -> Herm3:
    """X x X via zeta_i = xi_j xi_k - N(x_i), z_i = conj(x_j x_k) - xi_i x_i."""
    xi, x = X.xi, X.x
    zeta = [None] * 3
    z = [None] * 3
    for i, j, k in TRIPLES:
        zeta[i] = xi[j] * xi[k] - norm_form(x[i])
        z[i] = cd_conj(cd_mul(x[j], x[k])) - x[i].scale(xi[i])
    return Herm3(zeta, z)


def cross_trace(X: Herm3, Y: Herm3) -> Herm3:
    """X x Y = XoY - (Y,I)X/2 - (X,I)Y/2 - (X,Y)I/2 + (X,I)(Y,I)I/2."""
    tx, ty = trace(X), trace(Y)
    ident = Herm3.identity()
    return (jordan_mul(X, Y) - X.scale(HALF * ty) - Y.scale(HALF * tx)
            - ident.scale(HALF * bilinear(X, Y)) + ident.scale(HALF * tx * ty))


def cross_dual(X: Herm3, Y: Herm3) -> Herm3:
    """X x Y recovered from (X x Y, Z) = 3(X, Y, Z) on all 27 basis Z."""
    coords = [3 * trilinear(X, Y, b) / g
              for b, g in zip(basis27(), gram_diagonal())]
    return Herm3.from_coords(coords)


# ---------------------------------------------------------------------------
# basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis27() -> tuple:
    out = [Herm3.E(i) for i in (1, 2, 3)]
    for slot in (1, 2, 3):
        for u in range(8):
            out.append(Herm3.slot(slot, CDNum.unit(u)))
    return tuple(out)


def basis27() -> list[Herm3]:
    """E1, E2, E3, then the unit octonions e0..e7 in slots x1, x2, x3."""
    return list(_basis27())


def gram_diagonal() -> tuple:
    """(b, b) for each basis element; the Gram matrix is diagonal."""
    return (mpq(1),) * 3 + (mpq(2),) * 24


def basis_label(n: int) -> str:
    if n < 3:
        return f"E{n + 1}"
    slot, unit = divmod(n - 3, 8)
    return f"x{slot + 1}:e{unit}"


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def random_herm3(rng: random.Random, field: str = "QI", density: float = 1.0) -> Herm3:
    xi = [random_scalar(rng, field) for _ in range(3)]
    x = [random_cd(rng, 3, field, density) for _ in range(3)]
    return Herm3(xi, x)
