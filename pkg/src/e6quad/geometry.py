"""Finite incidence geometries, generalized-quadrangle audits, and the
classical quadrangle of isotropic points and lines of (C^6, h6).

Lines are stored as frozensets of point indices; a line is identified with
the set of sample points on it, so lines with identical rows are merged.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from gmpy2 import mpq

from . import linalg
from .plucker import (
    DIM,
    Subspace,
    form_h6,
    is_totally_isotropic,
    span,
    unit_vec,
    vadd,
    vscale,
)
from .scalars import I, is_zero, random_unit_gscalar, scalar_to_json, simplify


class ProjectionError(ValueError):
    pass


class IncidentPairError(ProjectionError):
    """The point lies on the line, so there is nothing to project."""


class WittIndexViolation(ProjectionError):
    """p is orthogonal to all of M: span(p, M) would be a totally isotropic 3-space."""


# ---------------------------------------------------------------------------
# samples
# ---------------------------------------------------------------------------

@dataclass
class IncidenceSample:
    points: list
    lines: list  # frozensets of point indices

    def __post_init__(self):
        self.lines = [frozenset(L) for L in self.lines]
        n = len(self.points)
        for L in self.lines:
            if any(not 0 <= p < n for p in L):
                raise ValueError("line references a missing point")
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("duplicate line rows")

    @property
    def incidences(self) -> set:
        return {(p, m) for m, L in enumerate(self.lines) for p in L}

    def lines_through(self) -> list[list[int]]:
        out = [[] for _ in self.points]
        for m, L in enumerate(self.lines):
            for p in L:
                out[p].append(m)
        return out


@dataclass
class RelationSample:
    """A reflexive symmetric relation given by neighbour sets (self included)."""

    elements: list
    adjacent: list  # list of sets

    def __post_init__(self):
        for i, nb in enumerate(self.adjacent):
            if i not in nb:
                raise ValueError(f"relation is not reflexive at {i}")
            for j in nb:
                if i not in self.adjacent[j]:
                    raise ValueError(f"relation is not symmetric at ({i}, {j})")

    @classmethod
    def from_predicate(cls, elements, related) -> "RelationSample":
        n = len(elements)
        adj = [{i} for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if related(elements[i], elements[j]):
                    adj[i].add(j)
                    adj[j].add(i)
        return cls(list(elements), adj)

    def related(self, i: int, j: int) -> bool:
        return j in self.adjacent[i]


def gamma_from_relation(r: RelationSample) -> IncidenceSample:
    """Lines L(x, y) = {z : z R x, z R y} over related distinct pairs, deduplicated."""
    seen = {}
    n = len(r.elements)
    for x in range(n):
        for y in sorted(r.adjacent[x]):
            if y <= x:
                continue
            row = frozenset(r.adjacent[x] & r.adjacent[y])
            seen.setdefault(row, None)
    return IncidenceSample(list(r.elements), list(seen))


def dualize(g: IncidenceSample) -> IncidenceSample:
    through = g.lines_through()
    return IncidenceSample(list(g.lines), [frozenset(ms) for ms in through])


# ---------------------------------------------------------------------------
# audits
# ---------------------------------------------------------------------------

@dataclass
class GQReport:
    sample_local: bool
    points: int
    lines: int
    digons: list = field(default_factory=list)          # line pairs sharing >= 2 points
    projection_failures: list = field(default_factory=list)  # (p, M, count)
    projection_missing: int = 0                        # count 0, sample-local only
    thin_points: list = field(default_factory=list)
    thin_lines: list = field(default_factory=list)
    triangles: list = field(default_factory=list)

    @property
    def axiom_a(self) -> bool:
        return not self.digons

    @property
    def axiom_b(self) -> bool:
        return not self.projection_failures

    @property
    def thick(self) -> bool:
        return not self.thin_points and not self.thin_lines

    @property
    def passed(self) -> bool:
        ok = self.axiom_a and self.axiom_b and not self.triangles
        return ok if self.sample_local else ok and self.thick

    def to_json(self) -> dict:
        return {
            "sample_local": self.sample_local,
            "verdict": "no counterexample in sample" if self.sample_local else "proved on instance",
            "points": self.points,
            "lines": self.lines,
            "axiom_a": self.axiom_a,
            "axiom_b": self.axiom_b,
            "thick": self.thick,
            "digons": len(self.digons),
            "triangles": len(self.triangles),
            "projection_failures": [list(f) for f in self.projection_failures[:5]],
            "projection_missing": self.projection_missing,
            "passed": self.passed,
        }


def check_gq_axioms(g: IncidenceSample, sample_local: bool = False,
                    max_witnesses: int = 20) -> GQReport:
    """Audit the generalized-quadrangle axioms on a finite incidence sample.

    (a) two distinct lines share at most one point (digon scan);
    (b) for each non-incident (p, M) exactly one (q, L) has p I L I q I M;
        in sample-local mode a count of 0 is tolerated (recorded as missing)
        because the sample need not be closed;
    (c) every point is on >= 3 lines and every line has >= 3 points
        (not enforced in sample-local mode).
    Triangles are three points pairwise on common lines with no line
    through all three.
    """
    rep = GQReport(sample_local, len(g.points), len(g.lines))
    lines = g.lines
    through = g.lines_through()

    for a, b in itertools.combinations(range(len(lines)), 2):
        if len(lines[a] & lines[b]) >= 2:
            rep.digons.append((a, b))
            if len(rep.digons) >= max_witnesses:
                break

    for p in range(len(g.points)):
        p_lines = through[p]
        for m, M in enumerate(lines):
            if p in M:
                continue
            count = sum(1 for q in M for L in p_lines if q in lines[L])
            if count == 1:
                continue
            if count == 0 and sample_local:
                rep.projection_missing += 1
                continue
            if len(rep.projection_failures) < max_witnesses:
                rep.projection_failures.append((p, m, count))

    rep.thin_points = [p for p, ls in enumerate(through) if len(ls) < 3]
    rep.thin_lines = [m for m, L in enumerate(lines) if len(L) < 3]

    neighbours = [set() for _ in g.points]
    for L in lines:
        for p in L:
            neighbours[p] |= L
    for p in range(len(g.points)):
        for q in sorted(neighbours[p]):
            if q <= p:
                continue
            for r in sorted(neighbours[p] & neighbours[q]):
                if r <= q:
                    continue
                if not any({p, q, r} <= lines[L] for L in through[p]):
                    rep.triangles.append((p, q, r))
                    if len(rep.triangles) >= max_witnesses:
                        return rep
    return rep


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def w2_fixture() -> IncidenceSample:
    """The symplectic quadrangle W(2): points of PG(3,2), lines the totally
    isotropic lines of x1 y2 + x2 y1 + x3 y4 + x4 y3 over F_2."""
    pts = [v for v in itertools.product((0, 1), repeat=4) if any(v)]
    index = {v: n for n, v in enumerate(pts)}

    def form(x, y):
        return (x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2]) % 2

    lines = set()
    for a, b in itertools.combinations(pts, 2):
        if form(a, b) == 0:
            c = tuple((s + t) % 2 for s, t in zip(a, b))
            lines.add(frozenset((index[a], index[b], index[c])))
    return IncidenceSample(["".join(map(str, v)) for v in pts], sorted(lines, key=sorted))


def fano_fixture() -> IncidenceSample:
    pts = [v for v in itertools.product((0, 1), repeat=3) if any(v)]
    index = {v: n for n, v in enumerate(pts)}
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        c = tuple((s + t) % 2 for s, t in zip(a, b))
        lines.add(frozenset((index[a], index[b], index[c])))
    return IncidenceSample(["".join(map(str, v)) for v in pts], sorted(lines, key=sorted))


def grid_relation(n: int = 3) -> RelationSample:
    """Rook graph of an n x n grid: cells related when they share a row or column."""
    cells = list(itertools.product(range(n), repeat=2))
    return RelationSample.from_predicate(
        cells, lambda a, b: a[0] == b[0] or a[1] == b[1])


def grid_fixture(n: int = 3) -> IncidenceSample:
    return gamma_from_relation(grid_relation(n))


# ---------------------------------------------------------------------------
# the classical quadrangle Q(C^6, h6)
# ---------------------------------------------------------------------------

@dataclass
class Projection:
    q: Subspace
    L: Subspace
    certificate: dict


def _is_isotropic_point(p: Subspace) -> bool:
    return p.dim == 1 and is_zero(form_h6(p.rows[0], p.rows[0]))


def classical_projection(p: Subspace, M: Subspace) -> Projection:
    """The unique (q, L) with p on L, q on L and q on M: q = M ∩ p^⊥, L = p + q."""
    if not _is_isotropic_point(p):
        raise ProjectionError("p must be an isotropic 1-space")
    if M.dim != 2 or not is_totally_isotropic(M):
        raise ProjectionError("M must be a totally isotropic 2-space")
    x = p.rows[0]
    if M.contains(x):
        raise IncidentPairError("p lies on M")
    m1, m2 = M.rows
    a, b = form_h6(m1, x), form_h6(m2, x)
    if is_zero(a) and is_zero(b):
        raise WittIndexViolation("p is orthogonal to M; span(p, M) is totally isotropic of dim 3")
    # alpha a + beta b = 0 has the one-dimensional solution (b, -a)
    qv = tuple(simplify(s) for s in vadd(vscale(b, m1), vscale(-a, m2)))
    q = span(qv)
    L = span(x, qv)
    perp = Subspace(linalg.nullspace([[form_h6(m, x) for m in (m1, m2)]], 2))
    cert = {
        "dim_M_cap_p_perp": perp.dim,
        "q_on_M": M.contains(qv),
        "q_perp_p": is_zero(form_h6(qv, x)),
        "L_totally_isotropic": is_totally_isotropic(L),
        "L_dim": L.dim,
    }
    if not (cert["dim_M_cap_p_perp"] == 1 and cert["q_on_M"] and cert["q_perp_p"]
            and cert["L_totally_isotropic"] and L.dim == 2):
        raise AssertionError(f"projection certificate failed: {cert}")
    return Projection(q, L, cert)


# -- unitary transport over Q(i) ----------------------------------------------

BOOSTS = ((mpq(5, 4), mpq(3, 4)), (mpq(13, 12), mpq(5, 12)), (mpq(5, 3), mpq(4, 3)))
ROTATIONS = ((mpq(3, 5), mpq(4, 5)), (mpq(5, 13), mpq(12, 13)), (mpq(8, 17), mpq(15, 17)))


def random_unitary_h6(rng: random.Random, steps: int = 6) -> list:
    """Random 6x6 matrix preserving h6, built from elementary moves.

    Moves: a rational rotation of two coordinates of equal sign, a unit
    phase on one coordinate, or a boost [[ch, sh], [sh, ch]] (ch^2 - sh^2 = 1)
    mixing a negative and a positive coordinate.
    """
    g = linalg.identity(DIM)
    for _ in range(steps):
        kind = rng.randrange(3)
        m = linalg.identity(DIM)
        if kind == 0:
            block = rng.choice(((0, 1), (2, 3, 4, 5)))
            if len(block) == 2:
                i, j = block
            else:
                i, j = rng.sample(block, 2)
            c, s = rng.choice(ROTATIONS)
            m[i][i], m[i][j], m[j][i], m[j][j] = c, -s, s, c
        elif kind == 1:
            i = rng.randrange(DIM)
            m[i][i] = random_unit_gscalar(rng)
        else:
            i, j = rng.randrange(2), rng.randrange(2, DIM)
            ch, sh = rng.choice(BOOSTS)
            m[i][i], m[i][j], m[j][i], m[j][j] = ch, sh, sh, ch
        g = linalg.matmul(m, g)
    return g


def apply_matrix(g, x) -> tuple:
    return tuple(simplify(a) for a in linalg.matvec(g, x))


def preserves_h6(g) -> bool:
    E = [unit_vec(i + 1) for i in range(DIM)]
    imgs = [apply_matrix(g, e) for e in E]
    return all(form_h6(imgs[i], imgs[j]) == form_h6(E[i], E[j])
               for i in range(DIM) for j in range(DIM))


def _standard_line(rng: random.Random) -> tuple:
    """A totally isotropic pair (e1 + w e_a, e2 + w' e_b) with a != b positive."""
    a, b = rng.sample(range(3, 7), 2)
    return (vadd(unit_vec(1), unit_vec(a, random_unit_gscalar(rng))),
            vadd(unit_vec(2), unit_vec(b, random_unit_gscalar(rng))))


def random_line(rng: random.Random) -> Subspace:
    g = random_unitary_h6(rng)
    u, v = _standard_line(rng)
    return span(apply_matrix(g, u), apply_matrix(g, v))


def random_isotropic_point(rng: random.Random) -> Subspace:
    g = random_unitary_h6(rng)
    a = rng.randrange(1, 3)
    b = rng.randrange(3, 7)
    return span(apply_matrix(g, vadd(unit_vec(a), unit_vec(b, random_unit_gscalar(rng)))))


def random_nonincident_pair(rng: random.Random) -> tuple[Subspace, Subspace]:
    while True:
        p, M = random_isotropic_point(rng), random_line(rng)
        if not M.contains(p.rows[0]):
            return p, M


@dataclass
class ClassicalSample:
    incidence: IncidenceSample
    vectors: list          # representative vector per point
    line_spaces: list      # Subspace per line


def _points_on(u, v, coeffs):
    for lam in coeffs:
        yield tuple(simplify(a) for a in vadd(u, vscale(lam, v)))


def build_classical_sample(n: int, seed: int, lines_per_point: int = 3) -> ClassicalSample:
    """At least ``n`` isotropic points of Q(C^6, h6), arranged on totally
    isotropic lines through a few hub points, transported by one random
    element of U(h6); lines are then recomputed from collinearity."""
    rng = random.Random(seed)
    g = random_unitary_h6(rng, steps=8)
    vecs: list = []
    seen: dict = {}

    def add(v):
        key = span(v)
        if key not in seen:
            seen[key] = len(vecs)
            vecs.append(v)

    while len(vecs) < n:
        u, _ = _standard_line(rng)
        add(apply_matrix(g, u))
        for _ in range(lines_per_point):
            # an isotropic vector orthogonal to u spans a line through u
            w = _orthogonal_isotropic_partner(rng, u)
            for x in _points_on(u, w, (1, -1, 2, I)):
                add(apply_matrix(g, x))
            add(apply_matrix(g, w))
    relation = RelationSample.from_predicate(
        list(range(len(vecs))), lambda i, j: is_zero(form_h6(vecs[i], vecs[j])))
    inc = gamma_from_relation(relation)
    spaces = []
    for row in inc.lines:
        i, j = sorted(row)[:2]
        spaces.append(span(vecs[i], vecs[j]))
    return ClassicalSample(IncidenceSample(list(range(len(vecs))), inc.lines), vecs, spaces)


def _orthogonal_isotropic_partner(rng: random.Random, u) -> tuple:
    """Isotropic w with h6(u, w) = 0 and w not on the point of u.

    u = e1 + c e_a (standard form); take w = e2 + d e_b with b != a, plus a
    multiple of u so the lines through u differ.
    """
    a = next(k for k in range(2, DIM) if not is_zero(u[k]))
    b = rng.choice([k for k in range(2, DIM) if k != a])
    w = vadd(unit_vec(2), unit_vec(b + 1, random_unit_gscalar(rng)))
    return tuple(simplify(s) for s in vadd(w, vscale(rng.choice((0, 1, -1, I)), u)))


def line_rows_from_spaces(sample: ClassicalSample) -> list[frozenset]:
    """Rows recomputed as the sample points lying in each line subspace."""
    return [frozenset(i for i, v in enumerate(sample.vectors) if S.contains(v))
            for S in sample.line_spaces]


# ---------------------------------------------------------------------------
# the E6 sample
# ---------------------------------------------------------------------------

@dataclass
class E6Sample:
    incidence: IncidenceSample
    points: list           # ProjPoint per index
    relation: RelationSample


def build_e6_sample(seeds, gens, depth: int) -> E6Sample:
    """Orbits of strongly isotropic seeds; lines L(p, q) from X x Y = 0."""
    from .liegroups import orbit
    from .veronese import collinear

    points: dict = {}
    for s in seeds:
        for p in orbit(s, gens, depth):
            points.setdefault(p, None)
    pts = list(points)
    relation = RelationSample.from_predicate(pts, collinear)
    inc = gamma_from_relation(relation)
    return E6Sample(IncidenceSample(list(range(len(pts))), inc.lines), pts, relation)


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def to_json_graph(g: IncidenceSample) -> dict:
    return {"points": [_label(p) for p in g.points],
            "lines": [sorted(L) for L in g.lines]}


def _label(p):
    if isinstance(p, (str, int)):
        return p
    if isinstance(p, tuple):
        return [scalar_to_json(a) if not isinstance(a, (str, int)) else a for a in p]
    return str(p)


def to_dot(g: IncidenceSample, name: str = "incidence") -> str:
    lines = [f"graph {name} {{"]
    for i, p in enumerate(g.points):
        lines.append(f'  p{i} [shape=circle, label="{_label(p)}"];')
    for m in range(len(g.lines)):
        lines.append(f'  l{m} [shape=box, label="L{m}"];')
    for m, L in enumerate(g.lines):
        for p in sorted(L):
            lines.append(f"  p{p} -- l{m};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_json_graph(g: IncidenceSample) -> str:
    return json.dumps(to_json_graph(g), sort_keys=True)

