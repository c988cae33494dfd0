"""Generators of Spin(8) < Spin(9) < Spin(10) acting on h_3^C, exact
invariance certification, and orbit enumeration.

Three families of maps, all given by closed componentwise formulas:

* ``T_a`` for a real unit octonion ``a``: x1 -> conj(a) x1, x2 -> x2 conj(a),
  x3 -> a x3 a, diagonal fixed.
* ``R_(c,s)`` for rationals with c^2 + s^2 = 1: the congruence
  ``X -> M X M^T`` by the rotation ``M = [[c, s, 0], [-s, c, 0], [0, 0, 1]]``.
* ``S_w`` for a Gaussian rational with w conj(w) = 1: xi1 -> w^2 xi1,
  xi2 -> conj(w)^2 xi2, x1 -> conj(w) x1, x2 -> w x2.

The first two preserve the symmetric form, det and H; the third preserves
det and h but not the symmetric form.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from . import linalg
from .composition import CDNum, cd_conj, cd_mul, norm_form, structure_table
from .jordan import Herm3, basis27, bilinear, cross, trilinear
from .scalars import GScalar, I, abs2, is_real, scalar_from_json, scalar_to_json, sigma
from .veronese import ProjPoint, form_h, map_H


class GeneratorParameterError(ValueError):
    """Parameter violates the norm constraint of its generator family."""


# ---------------------------------------------------------------------------
# the three actions
# ---------------------------------------------------------------------------

def _check_unit_octonion(a: CDNum):
    if not isinstance(a, CDNum) or a.level != 3:
        raise GeneratorParameterError("T_a needs a level-3 octonion")
    if not all(is_real(c) for c in a.coeffs):
        raise GeneratorParameterError("T_a needs a real octonion")
    if norm_form(a) != 1:
        raise GeneratorParameterError(f"N(a) = {norm_form(a)}, expected 1")


def _check_pythagorean(c, s):
    if isinstance(c, (GScalar, float, complex)) or isinstance(s, (GScalar, float, complex)):
        raise GeneratorParameterError("R_(c,s) needs rational c, s")
    if c * c + s * s != 1:
        raise GeneratorParameterError(f"c^2 + s^2 = {c * c + s * s}, expected 1")


def _check_unit_scalar(w):
    if isinstance(w, (float, complex)) or abs2(w) != 1:
        raise GeneratorParameterError(f"|w|^2 = {abs2(w)}, expected 1")


def apply_Ta(a: CDNum, X: Herm3) -> Herm3:
    _check_unit_octonion(a)
    ab = cd_conj(a)
    x1, x2, x3 = X.x
    return Herm3(X.xi, (cd_mul(ab, x1), cd_mul(x2, ab), cd_mul(cd_mul(a, x3), a)))


def apply_Rcs(c, s, X: Herm3) -> Herm3:
    c, s = mpq(c), mpq(s)
    _check_pythagorean(c, s)
    xi1, xi2, xi3 = X.xi
    x1, x2, x3 = X.x
    cs = c * s
    re3 = x3.coeffs[0]
    return Herm3(
        (c * c * xi1 + s * s * xi2 + 2 * cs * re3,
         s * s * xi1 + c * c * xi2 - 2 * cs * re3,
         xi3),
        (x1.scale(c) - cd_conj(x2).scale(s),
         x2.scale(c) + cd_conj(x1).scale(s),
         x3.scale(c * c) - cd_conj(x3).scale(s * s) + CDNum.scalar(cs * (xi2 - xi1))))


def apply_Rcs_as_printed(c, s, X: Herm3) -> Herm3:
    """R_(c,s) with ``c^2 x2`` in the (1,2) entry instead of ``c^2 x3``.

    Kept only to demonstrate that this reading does not preserve det.
    """
    Y = apply_Rcs(c, s, X)
    c, s = mpq(c), mpq(s)
    x1, x2, x3 = X.x
    wrong = x2.scale(c * c) - cd_conj(x3).scale(s * s) + CDNum.scalar(c * s * (X.xi[1] - X.xi[0]))
    return Herm3(Y.xi, (Y.x[0], Y.x[1], wrong))


def apply_Somega(w, X: Herm3) -> Herm3:
    _check_unit_scalar(w)
    wb = sigma(w)
    xi1, xi2, xi3 = X.xi
    x1, x2, x3 = X.x
    return Herm3((w * w * xi1, wb * wb * xi2, xi3), (x1.scale(wb), x2.scale(w), x3))


def rcs_by_congruence(c, s, X: Herm3) -> Herm3:
    """R_(c,s) evaluated as the literal matrix product M X M^T.

    Real scalars are central, so the 3x3 product is unambiguous.  Used as
    an independent check on :func:`apply_Rcs`.
    """
    c, s = mpq(c), mpq(s)
    _check_pythagorean(c, s)
    M = [[c, s, 0], [-s, c, 0], [0, 0, 1]]
    A = to_octonion_matrix(X)
    out = [[CDNum.zero() for _ in range(3)] for _ in range(3)]
    for r in range(3):
        for q in range(3):
            acc = CDNum.zero()
            for a in range(3):
                for b in range(3):
                    f = M[r][a] * M[q][b]
                    if f:
                        acc = acc + A[a][b].scale(f)
            out[r][q] = acc
    return from_octonion_matrix(out)


def to_octonion_matrix(X: Herm3) -> list:
    xi1, xi2, xi3 = (CDNum.scalar(a) for a in X.xi)
    x1, x2, x3 = X.x
    return [[xi1, x3, cd_conj(x2)],
            [cd_conj(x3), xi2, x1],
            [x2, cd_conj(x1), xi3]]


def from_octonion_matrix(A) -> Herm3:
    for r in range(3):
        for q in range(r, 3):
            if A[q][r] != (A[r][q] if r == q else cd_conj(A[r][q])):
                raise ValueError("matrix is not hermitian")
        if any(A[r][r].coeffs[1:]):
            raise ValueError("diagonal entries must be scalars")
    return Herm3((A[0][0].coeffs[0], A[1][1].coeffs[0], A[2][2].coeffs[0]),
                 (A[1][2], A[2][0], A[0][1]))


# ---------------------------------------------------------------------------
# generators and words
# ---------------------------------------------------------------------------

TAGS = ("Ta", "Rcs", "Somega")


@dataclass(frozen=True)
class Generator:
    tag: str
    param: object

    def __post_init__(self):
        if self.tag == "Ta":
            _check_unit_octonion(self.param)
        elif self.tag == "Rcs":
            c, s = self.param
            _check_pythagorean(mpq(c), mpq(s))
        elif self.tag == "Somega":
            _check_unit_scalar(self.param)
        else:
            raise GeneratorParameterError(f"unknown generator tag {self.tag!r}")

    def __call__(self, X: Herm3) -> Herm3:
        if self.tag == "Ta":
            return apply_Ta(self.param, X)
        if self.tag == "Rcs":
            return apply_Rcs(*self.param, X)
        return apply_Somega(self.param, X)

    def to_json(self) -> dict:
        if self.tag == "Ta":
            param = [scalar_to_json(c) for c in self.param.coeffs]
        elif self.tag == "Rcs":
            param = [scalar_to_json(mpq(v)) for v in self.param]
        else:
            param = scalar_to_json(self.param)
        return {"tag": self.tag, "param": param}

    @classmethod
    def from_json(cls, obj) -> "Generator":
        tag, param = obj["tag"], obj["param"]
        if tag == "Ta":
            return cls(tag, CDNum([scalar_from_json(c) for c in param], 3))
        if tag == "Rcs":
            return cls(tag, tuple(scalar_from_json(v) for v in param))
        return cls(tag, scalar_from_json(param))

    def __str__(self):
        if self.tag == "Ta":
            terms = [f"{c}e{i}" for i, c in enumerate(self.param.coeffs) if c]
            return f"T[{' + '.join(terms)}]"
        if self.tag == "Rcs":
            return f"R[{self.param[0]}, {self.param[1]}]"
        return f"S[{self.param}]"


def Ta(a: CDNum) -> Generator:
    return Generator("Ta", a)


def Rcs(c, s) -> Generator:
    return Generator("Rcs", (mpq(c), mpq(s)))


def Somega(w) -> Generator:
    return Generator("Somega", w)


@dataclass(frozen=True)
class GroupWord:
    """Generators applied left to right; the empty word is the identity."""

    letters: tuple = ()

    def __call__(self, X: Herm3) -> Herm3:
        for g in self.letters:
            X = g(X)
        return X

    def then(self, other: "GroupWord | Generator") -> "GroupWord":
        tail = other.letters if isinstance(other, GroupWord) else (other,)
        return GroupWord(self.letters + tail)

    def __len__(self):
        return len(self.letters)

    def to_json(self) -> list:
        return [g.to_json() for g in self.letters]


def as_word(g) -> GroupWord:
    if isinstance(g, GroupWord):
        return g
    if isinstance(g, Generator):
        return GroupWord((g,))
    raise TypeError(f"not a generator or word: {g!r}")


# ---------------------------------------------------------------------------
# built-in parameters
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def quaternion_triples() -> tuple:
    """Index triples i < j < k with e_i e_j = +-e_k (the seven quaternion lines)."""
    table = structure_table(3)
    out = set()
    for i in range(1, 8):
        for j in range(i + 1, 8):
            out.add(tuple(sorted((i, j, table[i][j][1]))))
    return tuple(sorted(out))


def unit_octonions() -> list[CDNum]:
    """Signed basis units and one half-integer unit per quaternion triple."""
    out = [CDNum.unit(i) for i in range(1, 8)] + [CDNum.unit(1, scale=-1)]
    half = mpq(1, 2)
    for n, (i, j, k) in enumerate(quaternion_triples()):
        signs = [(-1) ** ((n >> b) & 1) for b in range(3)]
        c = [mpq(0)] * 8
        c[0] = half
        for idx, sg in zip((i, j, k), signs):
            c[idx] = sg * half
        out.append(CDNum(c, 3))
    return out


PYTHAGOREAN = ((mpq(3, 5), mpq(4, 5)), (mpq(5, 13), mpq(12, 13)), (mpq(4, 5), mpq(-3, 5)))
UNIT_GAUSSIAN = (GScalar(mpq(3, 5), mpq(4, 5)), GScalar(mpq(5, 13), mpq(12, 13)), I)


def builtin_generators() -> list[Generator]:
    return ([Ta(a) for a in unit_octonions()]
            + [Rcs(c, s) for c, s in PYTHAGOREAN]
            + [Somega(w) for w in UNIT_GAUSSIAN])


def default_orbit_generators() -> list[Generator]:
    """A small mixed set used for orbits and samples."""
    octs = unit_octonions()
    return [Ta(octs[0]), Ta(octs[8]), Rcs(*PYTHAGOREAN[0]), Somega(UNIT_GAUSSIAN[0])]


def random_generator(rng: random.Random) -> Generator:
    gens = builtin_generators()
    return gens[rng.randrange(len(gens))]


def random_word(rng: random.Random, length: int) -> GroupWord:
    return GroupWord(tuple(random_generator(rng) for _ in range(length)))


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class LinearMap27:
    """Exact 27x27 matrix in the basis27 ordering (columns are images)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if len(rows) != 27 or any(len(r) != 27 for r in rows):
            raise ValueError("need a 27x27 matrix")
        self.rows = rows

    @classmethod
    def identity(cls) -> "LinearMap27":
        return cls(linalg.identity(27))

    def __call__(self, X: Herm3) -> Herm3:
        return Herm3.from_coords(linalg.matvec(self.rows, X.coords()))

    def __matmul__(self, other: "LinearMap27") -> "LinearMap27":
        return LinearMap27(linalg.matmul(self.rows, other.rows))

    def __eq__(self, other):
        if not isinstance(other, LinearMap27):
            return NotImplemented
        return all(a == b for r, q in zip(self.rows, other.rows) for a, b in zip(r, q))

    def determinant(self):
        return linalg.determinant(self.rows)


def to_matrix(g: Callable[[Herm3], Herm3]) -> LinearMap27:
    cols = [g(b).coords() for b in basis27()]
    return LinearMap27([[cols[c][r] for c in range(27)] for r in range(27)])


def scaling_map(factor) -> Callable[[Herm3], Herm3]:
    """X -> factor * X (a det non-invariance witness for factor^3 != 1)."""
    def scale(X: Herm3) -> Herm3:
        return X.scale(factor)
    scale.__name__ = f"scale_{factor}"
    return scale


# ---------------------------------------------------------------------------
# invariance certification
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_trilinear_table() -> dict:
    """(i, j, k) -> trilinear(b_i, b_j, b_k) for i <= j <= k, via the trace form."""
    B = basis27()
    return {t: trilinear(B[t[0]], B[t[1]], B[t[2]])
            for t in itertools.combinations_with_replacement(range(27), 3)}


def det_failure(g: Callable[[Herm3], Herm3], fast: bool = False,
                rng: random.Random | None = None, samples: int = 2000):
    """First basis triple where trilinear(g b_i, g b_j, g b_k) changes, else None.

    Exhaustive mode covers all multisets {i, j, k} (the form is symmetric).
    Image values use (X x Y, Z) = 3 (X, Y, Z); reference values come from
    the trace form, so the two sides are computed independently.  Returns
    ``(triple, before, after)``.
    """
    table = _basis_trilinear_table()
    triples = sorted(table)
    if fast:
        rng = rng or random.Random(0)
        triples = sorted(rng.sample(triples, min(samples, len(triples))))
    images = [g(b) for b in basis27()]
    crosses = {}
    for i, j, k in triples:
        key = (i, j)
        if key not in crosses:
            crosses[key] = cross(images[i], images[j])
        after = bilinear(crosses[key], images[k]) / 3
        if after != table[(i, j, k)]:
            return ((i, j, k), table[(i, j, k)], after)
    return None


def preserves_det(g, fast: bool = False, rng: random.Random | None = None) -> bool:
    return det_failure(g, fast=fast, rng=rng) is None


def det_ratio(g, X: Herm3 | None = None):
    """det(g(X)) / det(X) on a matrix with nonzero det (default: identity)."""
    from .jordan import det
    X = Herm3.identity() if X is None else X
    return det(g(X)) / det(X)


def _pair_failure(g, form):
    B = basis27()
    images = [g(b) for b in B]
    for i in range(27):
        for j in range(27):
            if form(images[i], images[j]) != form(B[i], B[j]):
                return (i, j)
    return None


def h_failure(g):
    return _pair_failure(g, form_h)


def bilinear_failure(g):
    return _pair_failure(g, bilinear)


def preserves_h(g) -> bool:
    return h_failure(g) is None


def preserves_bilinear(g) -> bool:
    return bilinear_failure(g) is None


def real_basis54() -> list[Herm3]:
    """R-basis of h_3^C: each complex basis element and i times it."""
    out = []
    for b in basis27():
        out.append(b.scale(GScalar(1)))
        out.append(b.scale(I))
    return out


def H_commutation_failure(g):
    for n, Y in enumerate(real_basis54()):
        if map_H(g(Y)) != g(map_H(Y)):
            return n
    return None


def commutes_with_H(g) -> bool:
    return H_commutation_failure(g) is None


def certify(g: Generator | GroupWord, fast: bool = False) -> dict:
    """Certification report for one generator or word."""
    word = as_word(g)
    det_fail = det_failure(word, fast=fast)
    h_fail = h_failure(word)
    b_fail = bilinear_failure(word)
    c_fail = H_commutation_failure(word)
    report = {
        "generator": g.to_json(),
        "det": det_fail is None,
        "h": h_fail is None,
        "bilinear": b_fail is None,
        "commutesH": c_fail is None,
    }
    witness = {}
    if det_fail is not None:
        witness["det"] = {"triple": list(det_fail[0]),
                          "before": scalar_to_json(det_fail[1]),
                          "after": scalar_to_json(det_fail[2])}
    if h_fail is not None:
        witness["h"] = list(h_fail)
    if b_fail is not None:
        witness["bilinear"] = list(b_fail)
    if c_fail is not None:
        witness["commutesH"] = c_fail
    if witness:
        report["witness"] = witness
    return report


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

def orbit(seed, gens: Iterable[Generator], depth: int) -> list[ProjPoint]:
    """Breadth-first closure of ``seed`` under words of length <= depth.

    Points are deduplicated by projective normalization and returned in
    discovery order, so the result is deterministic.
    """
    gens = list(gens)
    start = seed if isinstance(seed, ProjPoint) else ProjPoint(seed)
    seen = {start: None}
    frontier = [start]
    for _ in range(depth):
        nxt = []
        for p in frontier:
            for g in gens:
                q = ProjPoint(g(p.rep))
                if q not in seen:
                    seen[q] = None
                    nxt.append(q)
        frontier = nxt
    return list(seen)
