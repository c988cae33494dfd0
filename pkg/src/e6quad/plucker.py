"""Bivectors of C^6: Plücker coordinates, the induced hermitian form, the
triple product through the top exterior power, and Witt indices.

On V = C^6 we use

    h6(x, y) = -x1 y1~ - x2 y2~ + x3 y3~ + x4 y4~ + x5 y5~ + x6 y6~

(``~`` is complex conjugation).  Bivector coordinates are indexed by the
pairs (1,2), (1,3), ..., (5,6) in lexicographic order; ``PAIRS`` holds them
zero based.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from gmpy2 import mpq

from . import linalg
from .scalars import GScalar, is_zero, scalar_from_json, scalar_to_json, sigma, simplify

DIM = 6
H6_SIGNS = (-1, -1, 1, 1, 1, 1)
PAIRS = tuple(itertools.combinations(range(DIM), 2))
QUADS = tuple(itertools.combinations(range(DIM), 4))
TRIPLES3 = tuple(itertools.combinations(range(DIM), 3))
PAIR_INDEX = {p: n for n, p in enumerate(PAIRS)}


class DimensionError(ValueError):
    pass


class NotDecomposableError(ValueError):
    pass


class IsotropicSearchError(ArithmeticError):
    """No isotropic vector with Gaussian-rational coordinates was found."""


# ---------------------------------------------------------------------------
# vectors and subspaces
# ---------------------------------------------------------------------------

def vec6(*coords) -> tuple:
    if len(coords) != DIM:
        raise DimensionError("a vector of C^6 has six coordinates")
    return tuple(mpq(c) if isinstance(c, int) else c for c in coords)


def unit_vec(i: int, scale=1) -> tuple:
    """Standard basis vector e_i (one based)."""
    v = [mpq(0)] * DIM
    v[i - 1] = mpq(scale) if isinstance(scale, int) else scale
    return tuple(v)


def vadd(x, y) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vscale(s, x) -> tuple:
    return tuple(s * a for a in x)


class Subspace:
    """Subspace of K^n held as its reduced row-echelon basis.

    The echelon form is canonical, so ``==`` is subspace equality.
    """

    __slots__ = ("rows", "n")

    def __init__(self, vectors, n: int = DIM):
        red, _ = linalg.rref([list(v) for v in vectors], n) if vectors else ([], [])
        self.rows = tuple(tuple(simplify(a) for a in r) for r in red)
        self.n = n

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        return linalg.rank([list(r) for r in self.rows] + [list(v)]) == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(_key(a) for a in r) for r in self.rows))

    def __repr__(self):
        rows = "; ".join("(" + ", ".join(str(a) for a in r) + ")" for r in self.rows)
        return f"Subspace[{self.dim}]({rows})"

    def to_json(self) -> list:
        return [[scalar_to_json(a) for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj, n: int = DIM) -> "Subspace":
        return cls([[scalar_from_json(a) for a in r] for r in obj], n)


def _key(a):
    return (a.re, a.im) if isinstance(a, GScalar) else (a, 0)


def span(*vectors) -> Subspace:
    return Subspace(vectors)


def intersection_dim(L: Subspace, M: Subspace) -> int:
    return L.dim + M.dim - linalg.rank([list(r) for r in L.rows + M.rows])


# ---------------------------------------------------------------------------
# forms on C^6
# ---------------------------------------------------------------------------

def form_h6(x, y):
    acc = mpq(0)
    for s, a, b in zip(H6_SIGNS, x, y):
        if a and b:
            acc = acc + a * sigma(b) if s > 0 else acc - a * sigma(b)
    return acc


def form_sym6(x, y):
    """The symmetric form (x, y) = sum x_i y_i."""
    acc = mpq(0)
    for a, b in zip(x, y):
        if a and b:
            acc = acc + a * b
    return acc


def is_totally_isotropic(L: Subspace, form=form_h6) -> bool:
    return all(is_zero(form(a, b)) for a in L.rows for b in L.rows)


# ---------------------------------------------------------------------------
# exterior powers
# ---------------------------------------------------------------------------

class Bivector:
    """Element of Λ²K^6 in the lexicographic wedge basis."""

    __slots__ = ("c",)

    def __init__(self, coords):
        coords = tuple(mpq(a) if isinstance(a, int) else a for a in coords)
        if len(coords) != len(PAIRS):
            raise DimensionError("a bivector has 15 coordinates")
        self.c = coords

    @classmethod
    def basis(cls, i: int, j: int) -> "Bivector":
        """e_i ∧ e_j (one based, i < j)."""
        c = [mpq(0)] * len(PAIRS)
        c[PAIR_INDEX[(i - 1, j - 1)]] = mpq(1)
        return cls(c)

    def __add__(self, other):
        return Bivector(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other):
        return Bivector(a - b for a, b in zip(self.c, other.c))

    def scale(self, s) -> "Bivector":
        return Bivector(s * a for a in self.c)

    def is_zero(self) -> bool:
        return all(is_zero(a) for a in self.c)

    def __eq__(self, other):
        if not isinstance(other, Bivector):
            return NotImplemented
        return all(is_zero(a - b) for a, b in zip(self.c, other.c))

    def __hash__(self):
        return hash(tuple(_key(simplify(a)) for a in self.c))

    def __repr__(self):
        terms = [f"{a}*e{i + 1}{j + 1}" for (i, j), a in zip(PAIRS, self.c) if not is_zero(a)]
        return f"Bivector({' + '.join(terms) or '0'})"

    def to_json(self) -> list:
        return [scalar_to_json(a) for a in self.c]

    @classmethod
    def from_json(cls, obj) -> "Bivector":
        return cls(scalar_from_json(a) for a in obj)


def basis_bivectors() -> list[Bivector]:
    return [Bivector.basis(i + 1, j + 1) for i, j in PAIRS]


def wedge2(x, y) -> Bivector:
    return Bivector(x[i] * y[j] - x[j] * y[i] for i, j in PAIRS)


def wedge_vec_biv(x, u: Bivector) -> tuple:
    """x ∧ u in Λ³ (coordinates on the 20 sorted triples)."""
    P = PAIR_INDEX
    return tuple(x[a] * u.c[P[(b, c)]] - x[b] * u.c[P[(a, c)]] + x[c] * u.c[P[(a, b)]]
                 for a, b, c in TRIPLES3)


def wedge_biv_biv(u: Bivector, v: Bivector) -> tuple:
    """u ∧ v in Λ⁴ (coordinates on the 15 sorted quadruples)."""
    P = PAIR_INDEX
    out = []
    for a, b, c, d in QUADS:
        uc, vc = u.c, v.c
        out.append(uc[P[(a, b)]] * vc[P[(c, d)]] - uc[P[(a, c)]] * vc[P[(b, d)]]
                   + uc[P[(a, d)]] * vc[P[(b, c)]] + uc[P[(b, c)]] * vc[P[(a, d)]]
                   - uc[P[(b, d)]] * vc[P[(a, c)]] + uc[P[(c, d)]] * vc[P[(a, b)]])
    return tuple(out)


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _top_terms() -> tuple:
    """(quad index, pair index, sign) with e_S ∧ e_T = sign e_1..e_6."""
    out = []
    for qi, S in enumerate(QUADS):
        T = tuple(k for k in range(DIM) if k not in S)
        out.append((qi, PAIR_INDEX[T], _perm_sign(S + T)))
    return tuple(out)


def wedge_quad_biv(A: tuple, w: Bivector):
    """Coefficient of A ∧ w on e1 ∧ ... ∧ e6."""
    acc = mpq(0)
    for qi, pi, sign in _top_terms():
        if A[qi] and w.c[pi]:
            acc = acc + A[qi] * w.c[pi] if sign > 0 else acc - A[qi] * w.c[pi]
    return acc


def is_decomposable(u: Bivector) -> bool:
    return all(is_zero(a) for a in wedge_biv_biv(u, u))


def plucker_embed(L: Subspace) -> Bivector:
    """Representative of the Plücker ray of a plane (wedge of its echelon basis)."""
    if L.dim != 2:
        raise DimensionError(f"Plücker embedding needs a plane, got dim {L.dim}")
    return wedge2(*L.rows)


def normalize_ray(u: Bivector) -> Bivector:
    lead = next((a for a in u.c if not is_zero(a)), None)
    if lead is None:
        raise ValueError("zero bivector has no ray")
    return Bivector(simplify(a / lead) for a in u.c)


def same_ray(u: Bivector, v: Bivector) -> bool:
    return normalize_ray(u) == normalize_ray(v)


def inverse_plucker(u: Bivector) -> Subspace:
    """The plane {x : x ∧ u = 0} of a nonzero decomposable bivector."""
    if u.is_zero():
        raise NotDecomposableError("zero bivector")
    if not is_decomposable(u):
        raise NotDecomposableError(f"{u!r} is not decomposable")
    cols = [wedge_vec_biv(unit_vec(i + 1), u) for i in range(DIM)]
    rows = [[cols[c][r] for c in range(DIM)] for r in range(len(TRIPLES3))]
    kernel = linalg.nullspace(rows, DIM)
    L = Subspace(kernel)
    if L.dim != 2:
        raise AssertionError(f"kernel of x ∧ u has dimension {L.dim}")
    return L


def _require_decomposable(*us):
    for u in us:
        if not is_decomposable(u):
            raise NotDecomposableError(f"{u!r} is not decomposable")


def confluent(u: Bivector, v: Bivector) -> bool:
    """Planes of u and v meet nontrivially, decided by u ∧ v = 0."""
    _require_decomposable(u, v)
    return all(is_zero(a) for a in wedge_biv_biv(u, v))


def planes_meet(u: Bivector, v: Bivector) -> bool:
    """Same question decided by rank: dim(L + M) <= 3."""
    L, M = inverse_plucker(u), inverse_plucker(v)
    return intersection_dim(L, M) > 0


# ---------------------------------------------------------------------------
# forms on Λ²
# ---------------------------------------------------------------------------

H2_SIGNS = tuple(H6_SIGNS[i] * H6_SIGNS[j] for i, j in PAIRS)


def form_h2(u: Bivector, v: Bivector):
    """Hermitian form induced on Λ²; diagonal in the wedge basis since h6 is."""
    acc = mpq(0)
    for s, a, b in zip(H2_SIGNS, u.c, v.c):
        if a and b:
            acc = acc + a * sigma(b) if s > 0 else acc - a * sigma(b)
    return acc


def form_h2_wedges(x1, x2, y1, y2):
    """h2(x1 ∧ x2, y1 ∧ y2) = h(x1,y1) h(x2,y2) - h(x1,y2) h(x2,y1)."""
    return form_h6(x1, y1) * form_h6(x2, y2) - form_h6(x1, y2) * form_h6(x2, y1)


def h2_gram() -> list:
    B = basis_bivectors()
    return [[form_h2(a, b) for b in B] for a in B]


def triple6(u: Bivector, v: Bivector, w: Bivector):
    """(u, v, w) = coefficient of u ∧ v ∧ w on e1 ∧ ... ∧ e6."""
    return wedge_quad_biv(wedge_biv_biv(u, v), w)


def cross6(u: Bivector, v: Bivector) -> Bivector:
    """u × v with (u × v, w) = (u, v, w) for the symmetric form (e_ab, e_cd) = δ.

    The Gram matrix of that form is the identity in the wedge basis, so the
    coordinates are triple products against basis bivectors.
    """
    uv = wedge_biv_biv(u, v)
    return Bivector(wedge_quad_biv(uv, b) for b in basis_bivectors())


def form_sym2(u: Bivector, v: Bivector):
    acc = mpq(0)
    for a, b in zip(u.c, v.c):
        if a and b:
            acc = acc + a * b
    return acc


# ---------------------------------------------------------------------------
# isotropy of bivectors
# ---------------------------------------------------------------------------

def _require_point(u: Bivector):
    if u.is_zero():
        raise NotDecomposableError("zero bivector")
    _require_decomposable(u)


def is_weakly_isotropic_biv(u: Bivector) -> bool:
    _require_point(u)
    return is_zero(form_h2(u, u))


def is_strongly_isotropic_biv(u: Bivector) -> bool:
    """The plane of u is totally isotropic for h6."""
    _require_point(u)
    strong = is_totally_isotropic(inverse_plucker(u))
    if strong and not is_zero(form_h2(u, u)):
        raise AssertionError("totally isotropic plane with h2(u, u) != 0")
    return strong


def strong_by_incident_family(u: Bivector) -> bool:
    """h2(u, v) = 0 for every v = x ∧ z with x in the plane of u and z a
    basis vector.  These v span all bivectors confluent with u."""
    _require_point(u)
    L = inverse_plucker(u)
    for x in L.rows:
        for k in range(DIM):
            v = wedge2(x, unit_vec(k + 1))
            if v.is_zero():
                continue
            if not is_zero(form_h2(u, v)):
                return False
    return True


# ---------------------------------------------------------------------------
# Witt index
# ---------------------------------------------------------------------------

def _hform(G, x, y):
    acc = mpq(0)
    for i, a in enumerate(x):
        if not a:
            continue
        row = G[i]
        for j, b in enumerate(y):
            if b and row[j]:
                acc = acc + a * row[j] * sigma(b)
    return acc


def _orth_basis(G, basis):
    """Gram-Schmidt for a non-degenerate hermitian form; returns (vectors, diagonal).

    Isotropic pivots are avoided by mixing in a later vector, which is
    always possible when the form is non-degenerate on the span.
    """
    vecs = [list(v) for v in basis]
    out, diag = [], []
    while vecs:
        idx = next((k for k, v in enumerate(vecs) if not is_zero(_hform(G, v, v))), None)
        if idx is None:
            v0 = vecs[0]
            partner = next((k for k in range(1, len(vecs))
                            if not is_zero(_hform(G, v0, vecs[k]))), None)
            if partner is None:
                raise ValueError("form is degenerate on the given span")
            for coef in (1, GScalar(0, 1)):
                cand = [a + coef * b for a, b in zip(v0, vecs[partner])]
                if not is_zero(_hform(G, cand, cand)):
                    vecs[0] = cand
                    break
            idx = 0
        v = vecs.pop(idx)
        d = _hform(G, v, v)
        out.append(v)
        diag.append(simplify(d))
        vecs = [[a - (_hform(G, w, v) / d) * b for a, b in zip(w, v)] for w in vecs]
    return out, diag


def _two_squares(n: int):
    """Integers (a, b) with a^2 + b^2 = n, or None."""
    for a in range(math.isqrt(n) + 1):
        b2 = n - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return a, b
    return None


def _gaussian_with_norm(r):
    """z in Q(i) with |z|^2 = r (r a positive rational), or None."""
    r = mpq(r)
    p, q = int(r.numerator), int(r.denominator)
    ab = _two_squares(p * q)
    if ab is None:
        return None
    return GScalar(mpq(ab[0], q), mpq(ab[1], q))


def _isotropic_vector(G, vecs, diag):
    """Isotropic combination of two orthogonal vectors of opposite sign."""
    for j, dj in enumerate(diag):
        for k, dk in enumerate(diag):
            if dj > 0 > dk:
                z = _gaussian_with_norm(-dk / dj)
                if z is not None:
                    return [z * a + b for a, b in zip(vecs[j], vecs[k])]
    return None


def signature(G) -> tuple[int, int]:
    """(positive, negative) inertia of a non-degenerate hermitian Gram matrix."""
    n = len(G)
    _, diag = _orth_basis(G, linalg.identity(n))
    return sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0)


def witt_index_gram(G) -> int:
    """Witt index by splitting off hyperbolic planes over Q(i).

    Each round finds an isotropic vector v in the current space W, a partner
    w with h(v, w) != 0, and replaces W by the orthogonal complement of
    span(v, w) inside W.
    """
    n = len(G)
    W = linalg.identity(n)
    count = 0
    while W:
        vecs, diag = _orth_basis(G, W)
        if all(d > 0 for d in diag) or all(d < 0 for d in diag):
            return count
        v = _isotropic_vector(G, vecs, diag)
        if v is None:
            raise IsotropicSearchError("no Gaussian-rational isotropic vector found")
        w = next(b for b in vecs if not is_zero(_hform(G, b, v)))
        plane = [v, w]
        conds = [[_hform(G, e, p) for e in linalg.identity(n)] for p in plane]
        # W' = {x in W : h(x, v) = h(x, w) = 0}, expressed in W's coordinates
        rows = [[sum((c * a for c, a in zip(cond, wv)), mpq(0)) for wv in W] for cond in conds]
        coeffs = linalg.nullspace(rows, len(W))
        W = [[sum((cf * wv[i] for cf, wv in zip(cv, W)), mpq(0)) for i in range(n)]
             for cv in coeffs]
        count += 1
    return count


def builtin_gram(name: str) -> list:
    if name == "h6":
        return [[mpq(H6_SIGNS[i]) if i == j else mpq(0) for j in range(DIM)] for i in range(DIM)]
    if name == "h2":
        return h2_gram()
    if name == "definite":
        return linalg.identity(DIM)
    raise ValueError(f"unknown form {name!r}; choose h6, h2 or definite")


def witt_index(form) -> int:
    """Witt index of a built-in form name ("h6", "h2", "definite") or a Gram matrix."""
    G = builtin_gram(form) if isinstance(form, str) else form
    return witt_index_gram(G)


def witt_index_by_signature(form) -> int:
    """Over C the Witt index of a non-degenerate hermitian form is min(p, q)."""
    G = builtin_gram(form) if isinstance(form, str) else form
    return min(signature(G))


def gram_determinant(G):
    return linalg.determinant(G)


def random_vec6(rng, field: str = "QI") -> tuple:
    from .scalars import random_scalar
    return tuple(random_scalar(rng, field) for _ in range(DIM))

