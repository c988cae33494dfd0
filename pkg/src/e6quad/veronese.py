"""Veronese vectors of h_3^C and the isotropy classification of their points.

A point is a ray ``C X`` spanned by a Veronese vector (``X != 0`` and
``X x X = 0``).  The semilinear map ``H`` and the hermitian form
``h(X, Y) = (X, H(Y))`` pick out the *weakly isotropic* points
(``h(X, X) = 0``) and among them the *strongly isotropic* ones, where

    4 H(X) x (X x T) = h(T, X) X      for every T in h_3^C.

Both sides are C-linear in ``T``, so checking the 27 basis matrices decides
the condition exactly.  An independent route evaluates the expanded scalar
and octonion equations of the identity (:func:`appendix_failure`), again
complete by linearity in the free octonion ``t``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from . import linalg
from .composition import CDNum, bracket, cd_conj, cd_mul, complex_conj_entry, norm_form
from .jordan import (
    TRIPLES,
    Herm3,
    basis27,
    bilinear,
    cross,
    cross_square,
    jordan_mul,
)
from .scalars import GScalar, abs2, is_real, is_zero, random_unit_gscalar, sigma

#: Signs of the off-diagonal slots in H and h.
SIGNS = (-1, -1, 1)


class PreconditionError(ValueError):
    """Input outside the domain of a classifier (distinct from a False verdict)."""


class ZeroVectorError(PreconditionError):
    pass


class NotVeroneseError(PreconditionError):
    pass


class NotWeaklyIsotropicError(PreconditionError):
    pass


class NotRealError(PreconditionError):
    pass


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------

class ProjPoint:
    """The ray ``K X``, stored with its first nonzero coordinate scaled to 1.

    Coordinates are scanned in :func:`~e6quad.jordan.basis27` order
    (xi1, xi2, xi3, then x1, x2, x3 coefficientwise).
    """

    __slots__ = ("rep",)

    def __init__(self, X: Herm3):
        coords = X.coords()
        lead = next((c for c in coords if not is_zero(c)), None)
        if lead is None:
            raise ZeroVectorError("the zero vector does not span a point")
        inv = 1 / lead if not isinstance(lead, GScalar) else GScalar(1) / lead
        self.rep = Herm3.from_coords([_simplify(c * inv) for c in coords])

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(tuple(_key(c) for c in self.rep.coords()))

    def __repr__(self):
        return f"ProjPoint({self.rep!r})"


def _simplify(c):
    if isinstance(c, GScalar) and c.im == 0:
        return c.re
    return c


def _key(c):
    if isinstance(c, GScalar):
        return (c.re, c.im)
    return (c, mpq(0))


def _rep(p) -> Herm3:
    return p.rep if isinstance(p, ProjPoint) else p


# ---------------------------------------------------------------------------
# Veronese vectors
# ---------------------------------------------------------------------------

def veronese_conditions(X: Herm3) -> list[tuple[str, int, bool]]:
    """The six conditions ``N(x_i) = xi_j xi_k`` and ``xi_i conj(x_i) = x_j x_k``."""
    out = []
    xi, x = X.xi, X.x
    for i, j, k in TRIPLES:
        out.append(("norm", i + 1, is_zero(norm_form(x[i]) - xi[j] * xi[k])))
        out.append(("product", i + 1,
                    (cd_conj(x[i]).scale(xi[i]) - cd_mul(x[j], x[k])).is_zero()))
    return out


def is_veronese(X) -> bool:
    """True iff X != 0 and all Veronese conditions hold (equivalently X x X = 0)."""
    X = _rep(X)
    if X.is_zero():
        return False
    by_conditions = all(ok for _, _, ok in veronese_conditions(X))
    by_cross = cross_square(X).is_zero()
    if by_conditions != by_cross:
        raise AssertionError(f"Veronese conditions and X x X disagree on {X!r}")
    return by_conditions


def _require_veronese(X: Herm3):
    if X.is_zero():
        raise ZeroVectorError("zero matrix")
    if not is_veronese(X):
        raise NotVeroneseError(f"{X!r} is not a Veronese vector")


# ---------------------------------------------------------------------------
# H, h, B, beta
# ---------------------------------------------------------------------------

def map_H(X: Herm3) -> Herm3:
    """(xi1, xi2, xi3; x1, x2, x3) -> (xi1~, xi2~, xi3~; -x1~, -x2~, x3~), ~ = sigma."""
    return Herm3([sigma(a) for a in X.xi],
                 [complex_conj_entry(o).scale(s) for o, s in zip(X.x, SIGNS)])


def form_h(X: Herm3, Y: Herm3):
    """h(X, Y) = sum xi_i eta_i~ - <x1|y1~> - <x2|y2~> + <x3|y3~>."""
    acc = mpq(0)
    for a, b in zip(X.xi, Y.xi):
        acc = acc + a * sigma(b)
    for a, b, s in zip(X.x, Y.x, SIGNS):
        v = bracket(a, complex_conj_entry(b))
        acc = acc + v if s > 0 else acc - v
    return acc


def form_h_via_H(X: Herm3, Y: Herm3):
    """h(X, Y) computed as (X, H(Y))."""
    return bilinear(X, map_H(Y))


def _require_real(X: Herm3):
    if not all(is_real(c) for c in X.coords()):
        raise NotRealError("B and beta are defined on the real form h_3^R only")


def map_B(X: Herm3) -> Herm3:
    """Restriction of H to the real matrices: negate slots x1, x2."""
    _require_real(X)
    return Herm3(X.xi, [o.scale(s) for o, s in zip(X.x, SIGNS)])


def form_beta(X: Herm3, Y: Herm3):
    """beta(X, Y) = (X, B(Y)), a symmetric form of block signs (+,+,+,-,-,+)."""
    _require_real(X)
    return bilinear(X, map_B(Y))


# ---------------------------------------------------------------------------
# isotropy
# ---------------------------------------------------------------------------

def is_weakly_isotropic(p) -> bool:
    X = _rep(p)
    _require_veronese(X)
    return is_zero(form_h(X, X))


@lru_cache(maxsize=None)
def _complex_basis27() -> tuple:
    return tuple(basis27())


def strong_identity_failure(X: Herm3):
    """First basis index T with 4 H(X) x (X x T) != h(T, X) X, else None.

    Requires only that X is Veronese; a non-weak X always fails (take the
    identity at T spanning directions of X).
    """
    HX = map_H(X)
    for n, T in enumerate(_complex_basis27()):
        lhs = cross(HX, cross(X, T)).scale(4)
        rhs = X.scale(form_h(T, X))
        if lhs != rhs:
            return n
    return None


def is_strongly_isotropic(p) -> bool:
    """Decide 4 H(X) x (X x T) = h(T, X) X on all 27 basis matrices T."""
    X = _rep(p)
    _require_veronese(X)
    if not is_zero(form_h(X, X)):
        raise NotWeaklyIsotropicError(f"{X!r} is not weakly isotropic")
    return strong_identity_failure(X) is None


# -- the expanded equation system ---------------------------------------------

def _bar(o: CDNum) -> CDNum:
    return complex_conj_entry(o)


def _oct_zero(o: CDNum) -> bool:
    return o.is_zero()


def appendix_failure(X: Herm3):
    """First violated equation of the expanded system, else None.

    Returns ``(family, (i, j, k), t_index)`` with one-based family 1..9, a
    one-based cyclic triple (``None`` for family 1) and the basis octonion
    index used for ``t`` (``None`` for the t-free families).  Here ``~``
    below is the entrywise field involution and ``conj`` the octonion one.
    """
    xi, x = X.xi, X.x
    s = SIGNS
    xb = [_bar(o) for o in x]
    a2 = [abs2(c) for c in xi]

    # (1)  sum |xi|^2 = <x1|x1~> + <x2|x2~> - <x3|x3~>
    if not is_zero(a2[0] + a2[1] + a2[2]
                   - bracket(x[0], xb[0]) - bracket(x[1], xb[1]) + bracket(x[2], xb[2])):
        return (1, None, None)

    for i, j, k in TRIPLES:
        tri = (i + 1, j + 1, k + 1)
        # (2)  |xi_j|^2 + |xi_k|^2 + s_i <x_i|x_i~> = |xi_i|^2
        if not is_zero(a2[j] + a2[k] + s[i] * bracket(x[i], xb[i]) - a2[i]):
            return (2, tri, None)
        # (3)  xi_k~ x_j + s_i conj(x_k x_i~) = -s_j xi_i x_j~
        e3 = (x[j].scale(sigma(xi[k])) + cd_conj(cd_mul(x[k], xb[i])).scale(s[i])
              + xb[j].scale(s[j] * xi[i]))
        if not _oct_zero(e3):
            return (3, tri, None)
        # (4)  xi_j~ x_k + s_i conj(x_i~ x_j) = -s_k xi_i x_k~
        e4 = (x[k].scale(sigma(xi[j])) + cd_conj(cd_mul(xb[i], x[j])).scale(s[i])
              + xb[k].scale(s[k] * xi[i]))
        if not _oct_zero(e4):
            return (4, tri, None)
        # (5)  s_i xi_k x_i~ + s_k conj(x_j x_k~) = -xi_j~ x_i
        e5 = (xb[i].scale(s[i] * xi[k]) + cd_conj(cd_mul(x[j], xb[k])).scale(s[k])
              + x[i].scale(sigma(xi[j])))
        if not _oct_zero(e5):
            return (5, tri, None)
        # (6)  s_i xi_j x_i~ + s_j conj(x_j~ x_k) = -xi_k~ x_i
        e6 = (xb[i].scale(s[i] * xi[j]) + cd_conj(cd_mul(xb[j], x[k])).scale(s[j])
              + x[i].scale(sigma(xi[k])))
        if not _oct_zero(e6):
            return (6, tri, None)

        cxbj = cd_conj(xb[j])
        cxbk = cd_conj(xb[k])
        for u in range(8):
            t = CDNum.unit(u)
            # (7)  s_j (t x_j) conj(x_j~) + s_k conj(x_k~) (x_k t) + |xi_i|^2 t
            #      + s_i <x_i|t> x_i~ = s_i <x_i~|t> x_i
            e7 = (cd_mul(cd_mul(t, x[j]), cxbj).scale(s[j])
                  + cd_mul(cxbk, cd_mul(x[k], t)).scale(s[k])
                  + t.scale(a2[i])
                  + xb[i].scale(s[i] * bracket(x[i], t))
                  - x[i].scale(s[i] * bracket(xb[i], t)))
            if not _oct_zero(e7):
                return (7, tri, u)
            # (8)  s_j (x_i t) conj(x_j~) - s_k xi_j conj(t x_k~) - xi_i~ conj(t x_k)
            #      = s_j <x_j~|t> x_i
            e8 = (cd_mul(cd_mul(x[i], t), cxbj).scale(s[j])
                  - cd_conj(cd_mul(t, xb[k])).scale(s[k] * xi[j])
                  - cd_conj(cd_mul(t, x[k])).scale(sigma(xi[i]))
                  - x[i].scale(s[j] * bracket(xb[j], t)))
            if not _oct_zero(e8):
                return (8, tri, u)
            # (9)  -s_j xi_k conj(x_j~ t) + s_k conj(x_k~) (t x_i) - xi_i~ conj(x_j t)
            #      = s_k <x_k~|t> x_i
            e9 = (- cd_conj(cd_mul(xb[j], t)).scale(s[j] * xi[k])
                  + cd_mul(cxbk, cd_mul(t, x[i])).scale(s[k])
                  - cd_conj(cd_mul(x[j], t)).scale(sigma(xi[i]))
                  - x[i].scale(s[k] * bracket(xb[k], t)))
            if not _oct_zero(e9):
                return (9, tri, u)
    return None


def is_strongly_isotropic_appendix(p) -> bool:
    """Strong isotropy decided by the expanded equation system."""
    X = _rep(p)
    _require_veronese(X)
    if not is_zero(form_h(X, X)):
        raise NotWeaklyIsotropicError(f"{X!r} is not weakly isotropic")
    return appendix_failure(X) is None


def classify(X: Herm3) -> dict:
    """Classification certificate for a nonzero matrix."""
    if X.is_zero():
        raise ZeroVectorError("zero matrix")
    cert = {"point": X.to_json(), "veronese": False, "weak": False, "strong": False,
            "failed_equation": None}
    if not is_veronese(X):
        return cert
    cert["veronese"] = True
    cert["weak"] = is_zero(form_h(X, X))
    identity_fail = strong_identity_failure(X)
    equation_fail = appendix_failure(X)
    cert["strong"] = cert["weak"] and identity_fail is None
    cert["strong_identity"] = identity_fail is None
    cert["strong_equations"] = equation_fail is None
    cert["agreement"] = (identity_fail is None) == (equation_fail is None)
    if identity_fail is not None:
        cert["failed_basis_T"] = identity_fail
    if equation_fail is not None:
        fam, tri, u = equation_fail
        cert["failed_equation"] = {"family": fam,
                                   "triple": list(tri) if tri else None,
                                   "t_basis": u}
    return cert


# ---------------------------------------------------------------------------
# V-incidence, symplecta, collinearity
# ---------------------------------------------------------------------------

def v_incident(p, Y: Herm3) -> bool:
    """C X V-incident with the symplecton of Y: (X, Y) = 0 and
    4 Y x (X x T) = (T, Y) X for all T (checked on the basis)."""
    X = _rep(p)
    _require_veronese(X)
    _require_veronese(Y)
    if not is_zero(bilinear(X, Y)):
        return False
    for T in _complex_basis27():
        if cross(Y, cross(X, T)).scale(4) != X.scale(bilinear(T, Y)):
            return False
    return True


@dataclass(frozen=True)
class SymplectonSpace:
    """The linear span ``X x h_3`` attached to a Veronese vector."""

    generator: Herm3
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, Y: Herm3) -> bool:
        rows = [b.coords() for b in self.basis]
        return linalg.rank(rows + [Y.coords()]) == len(rows)


def symplecton(X: Herm3) -> SymplectonSpace:
    _require_veronese(X)
    images = [cross(X, T).coords() for T in _complex_basis27()]
    red, _ = linalg.rref(images, 27)
    return SymplectonSpace(X, tuple(Herm3.from_coords(r) for r in red))


def collinear(p, q) -> bool:
    """p and q collinear iff X x Y = 0."""
    X, Y = _rep(p), _rep(q)
    _require_veronese(X)
    _require_veronese(Y)
    return cross(X, Y).is_zero()


# ---------------------------------------------------------------------------
# fixtures and generators
# ---------------------------------------------------------------------------

def rank_one(v) -> Herm3:
    """Real rank-one matrix v v^T as an element of h_3 (entries on e0)."""
    v1, v2, v3 = (mpq(a) for a in v)
    return Herm3.make(v1 * v1, v2 * v2, v3 * v3,
                      CDNum.scalar(v2 * v3), CDNum.scalar(v1 * v3), CDNum.scalar(v1 * v2))


def find_strong_fixture(bound: int = 2) -> Herm3:
    """First strongly isotropic ``v v^T`` with integer ``v`` in a small box.

    Entries are tried in the order 0, 1, -1, 2, -2, ... so the smallest
    representative comes first.
    """
    values = [0] + [s * n for n in range(1, bound + 1) for s in (1, -1)]
    for v in itertools.product(values, repeat=3):
        if v == (0, 0, 0):
            continue
        X = rank_one(v)
        if is_weakly_isotropic(X) and is_strongly_isotropic(X):
            return X
    raise LookupError("no strongly isotropic rank-one point in the box")


#: Strongly isotropic regression fixture (0, 1, 1; 1, 0, 0) = v v^T, v = (0, 1, 1).
STRONG_FIXTURE = rank_one((0, 1, 1))


def strong_neighbour(k: int, sign: int = 1) -> Herm3:
    """(0, 1, -1; sign i e_k, 0, 0): strongly isotropic and collinear with
    :data:`STRONG_FIXTURE`.

    Found by an exhaustive small-coefficient search in the kernel of
    ``Y -> STRONG_FIXTURE x Y``.  Distinct ``(k, sign)`` give pairwise
    non-collinear points.
    """
    return Herm3.make(0, 1, -1, CDNum.unit(k, scale=GScalar(0, sign)))


def _unit_octonion(rng: random.Random) -> CDNum:
    """Random real unit octonion: product of a few (c + s e_k), c^2 + s^2 = 1."""
    out = CDNum.one()
    for _ in range(rng.randint(0, 3)):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        d = m * m + n * n
        c, s = mpq(m * m - n * n, d), mpq(2 * m * n, d)
        k = rng.randint(1, 7)
        out = cd_mul(out, CDNum.unit(0).scale(c) + CDNum.unit(k).scale(s))
    return out


def _pure_unit(rng: random.Random) -> CDNum:
    """Random real unit octonion with zero real part."""
    k, l = rng.sample(range(1, 8), 2)
    m, n = rng.randint(0, 4), rng.randint(1, 4)
    d = m * m + n * n
    return CDNum.unit(k).scale(mpq(m * m - n * n, d)) + CDNum.unit(l).scale(mpq(2 * m * n, d))


def weak_family_member(r, w: CDNum, u: CDNum, omega=1) -> Herm3:
    """(2 r omega, 0, 0; 0, a + i a u, 0) with a = r w.

    For a real unit octonion ``w``, a pure imaginary real unit ``u`` and
    ``|omega| = 1``, p = a and q = a u satisfy N(p) = N(q) and <p|q> = 0, so
    x2 = p + i q is null and h(X, X) = 4 r^2 - <x2|x2~> = 0.  Slot 3 alone
    never gives an isotropic point because h is positive definite on xi
    and x3.
    """
    a = w.scale(r)
    x2 = a.scale(GScalar(1)) + cd_mul(a, u).scale(GScalar(0, 1))
    return Herm3.make(omega * (2 * r), 0, 0, None, x2, None)


def weak_family_point(rng: random.Random) -> Herm3:
    """Random member of :func:`weak_family_member`."""
    r = mpq(rng.randint(1, 5), rng.choice((1, 2, 3)))
    return weak_family_member(r, _unit_octonion(rng), _pure_unit(rng), random_unit_gscalar(rng))


def generate_weak_points(count: int, seed: int, max_word: int = 3) -> list[ProjPoint]:
    """Weakly isotropic Veronese points: the slot-2 null family plus images
    under random generator words of length ``0..max_word``."""
    from .liegroups import random_word

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        X = weak_family_point(rng)
        word = random_word(rng, rng.randint(0, max_word))
        out.append(ProjPoint(word(X)))
    return out


def generate_strong_points(count: int, seed: int, max_word: int = 3) -> list[ProjPoint]:
    """Images of :data:`STRONG_FIXTURE` under random generator words."""
    from .liegroups import random_word

    rng = random.Random(seed)
    return [ProjPoint(random_word(rng, rng.randint(1, max_word))(STRONG_FIXTURE))
            for _ in range(count)]


def generate_non_isotropic_points(count: int, seed: int, max_word: int = 3) -> list[ProjPoint]:
    """Veronese controls with h(X, X) != 0: words applied to E1, E2, E3,
    rank-one real points and off-weight members of the slot-2 family."""
    from .liegroups import random_word

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = rng.randrange(3)
        if kind == 0:
            X = Herm3.E(rng.randint(1, 3))
        elif kind == 1:
            X = rank_one([rng.randint(-3, 3) for _ in range(3)])
        else:
            X = weak_family_point(rng)
            X = Herm3(
                (X.xi[0] * rng.choice((2, 3, mpq(1, 2))),) + X.xi[1:], X.x)
        if X.is_zero() or is_zero(form_h(X, X)):
            continue
        out.append(ProjPoint(random_word(rng, rng.randint(0, max_word))(X)))
    return out


def e_slot_point(i: int) -> Herm3:
    return Herm3.E(i)


def jordan_annihilates(X: Herm3, U: Herm3) -> bool:
    return jordan_mul(X, U).is_zero()
