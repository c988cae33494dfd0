"""Self-verification suites.

Each suite runs a list of named checks and records, for the first failing
case, a JSON witness.  Structured cases (basis units, basis triples) come
before random ones, so a witness is as small as the case order allows.
Reports carry no timings: for a fixed seed the JSON output is identical
from run to run.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from gmpy2 import mpq

from . import composition as cd
from . import geometry as geo
from . import jordan as jd
from . import liegroups as lg
from . import plucker as pl
from . import veronese as vr
from .scalars import GScalar, I, is_zero, scalar_to_json, sigma

SUITE_NAMES = ("composition", "jordan", "veronese", "liegroups", "plucker", "geometry")


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    witness: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    backend: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"suite": self.suite, "backend": self.backend, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}

    # -- helpers ----------------------------------------------------------------
    def check(self, name, cases, predicate, show=None):
        """Run ``predicate(*case)`` over ``cases``; stop at the first failure."""
        n = 0
        for case in cases:
            n += 1
            try:
                ok = predicate(*case)
            except Exception as exc:  # a crash is a violation with a witness
                self.checks.append(CheckResult(name, False, n, {
                    "error": f"{type(exc).__name__}: {exc}",
                    "case": _show(show, case)}))
                return False
            if not ok:
                self.checks.append(CheckResult(name, False, n, _show(show, case)))
                return False
        self.checks.append(CheckResult(name, True, n))
        return True

    def fact(self, name, ok: bool, witness=None):
        self.checks.append(CheckResult(name, bool(ok), 1, witness))
        return ok


def _show(show, case):
    if show is not None:
        return show(*case)
    return [_to_json(v) for v in case]


def _to_json(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_to_json(a) for a in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    try:
        return scalar_to_json(v)
    except TypeError:
        return str(v)


def _rng(seed: int, suite: str) -> random.Random:
    # string seeds are hashed with sha512, independent of PYTHONHASHSEED
    return random.Random(f"{seed}:{suite}")


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

def _fields(backend: str) -> tuple:
    return ("Q", "QI") if backend == "exact" else ("float", "complex")


def find_nonassociative_units(level: int = 3):
    units = cd.basis_units(level)
    for u, v, w in itertools.product(units, repeat=3):
        if cd.cd_mul(cd.cd_mul(u, v), w) != cd.cd_mul(u, cd.cd_mul(v, w)):
            return u, v, w
    return None


def find_noncommutative_units(level: int = 2):
    units = cd.basis_units(level)
    for u, v in itertools.product(units, repeat=2):
        if cd.cd_mul(u, v) != cd.cd_mul(v, u):
            return u, v
    return None


def composition_cases(rng, level, field_, samples, arity):
    units = cd.basis_units(level)
    yield from itertools.product(units, repeat=arity)
    for _ in range(samples):
        yield tuple(cd.random_cd(rng, level, field_) for _ in range(arity))


def printed_identity_counterexample(level: int):
    """Basis-unit counterexamples to three bracket identities in their printed form.

    Returns a dict name -> (x, y, z) or None when the identity holds on all
    basis-unit triples.
    """
    m, c, br = cd.cd_mul, cd.cd_conj, cd.bracket
    forms = {
        "<xy|z> = <x|conj(y) z>": lambda x, y, z: br(m(x, y), z) == br(x, m(c(y), z)),
        "<xy|z> = <yx|z>": lambda x, y, z: br(m(x, y), z) == br(m(y, x), z),
        "<x|yz> = <x|zy>": lambda x, y, z: br(x, m(y, z)) == br(x, m(z, y)),
    }
    units = cd.basis_units(level)
    out = {}
    for name, f in forms.items():
        out[name] = next(((x, y, z) for x, y, z in itertools.product(units, repeat=3)
                          if not f(x, y, z)), None)
    return out


def suite_composition(samples: int, seed: int, fast: bool = False,
                      backend: str = "exact") -> SuiteReport:
    rep = SuiteReport("composition", backend)
    rng = _rng(seed, "composition")
    m, c, br, N, re = cd.cd_mul, cd.cd_conj, cd.bracket, cd.norm_form, cd.re_part

    for level in (1, 2, 3):
        rep.check(f"L{level}: table product equals doubling recursion",
                  composition_cases(rng, level, "QI", samples // 5, 2),
                  lambda x, y: m(x, y) == cd.cd_mul_recursive(x, y))

    for field_ in _fields(backend):
        for level in (1, 2, 3):
            tag = f"L{level}/{field_}"
            pairs = lambda: composition_cases(rng, level, field_, samples, 2)  # noqa: E731
            triples = lambda: composition_cases(rng, level, field_, samples, 3)  # noqa: E731
            rep.check(f"{tag}: N(xy) = N(x)N(y)", pairs(),
                      lambda x, y: is_zero(N(m(x, y)) - N(x) * N(y)))
            rep.check(f"{tag}: conj(xy) = conj(y)conj(x)", pairs(),
                      lambda x, y: c(m(x, y)) == m(c(y), c(x)))
            rep.check(f"{tag}: Re(xy) = Re(yx)", pairs(),
                      lambda x, y: is_zero(re(m(x, y)) - re(m(y, x))))
            rep.check(f"{tag}: Re(x(yz)) = Re((xy)z)", triples(),
                      lambda x, y, z: is_zero(re(m(x, m(y, z))) - re(m(m(x, y), z))))
            rep.check(f"{tag}: <xy|z> = <x|z conj(y)>", triples(),
                      lambda x, y, z: is_zero(br(m(x, y), z) - br(x, m(z, c(y)))))
            rep.check(f"{tag}: <xy|z> = <y|conj(x) z>", triples(),
                      lambda x, y, z: is_zero(br(m(x, y), z) - br(y, m(c(x), z))))
            rep.check(f"{tag}: alternativity x(xy) = (xx)y, (yx)x = y(xx)", pairs(),
                      lambda x, y: m(x, m(x, y)) == m(m(x, x), y)
                      and m(m(y, x), x) == m(y, m(x, x)))
            if level <= 2:
                rep.check(f"{tag}: associativity", triples(),
                          lambda x, y, z: m(m(x, y), z) == m(x, m(y, z)))
            if level <= 1:
                rep.check(f"{tag}: commutativity", pairs(),
                          lambda x, y: m(x, y) == m(y, x))

    w3 = find_nonassociative_units(3)
    rep.fact("L3: non-associativity witness exists", w3 is not None,
             [u.to_json() for u in w3] if w3 else None)
    w2 = find_noncommutative_units(2)
    rep.fact("L2: non-commutativity witness exists", w2 is not None,
             [u.to_json() for u in w2] if w2 else None)

    # the three printed bracket identities hold exactly when the level is commutative
    for level in (1, 2, 3):
        found = printed_identity_counterexample(level)
        for name, wit in found.items():
            expect_hold = level <= 1
            ok = (wit is None) if expect_hold else (wit is not None)
            rep.fact(f"L{level}: printed {name} {'holds' if expect_hold else 'fails (witness)'}",
                     ok, [u.to_json() for u in wit] if wit else None)

    if backend == "exact":
        rep.check("inverse: x invert(x) = 1 for N(x) != 0",
                  ((cd.random_cd(rng, 3, "QI"),) for _ in range(samples)),
                  lambda x: is_zero(N(x)) or m(x, cd.invert(x)) == cd.CDNum.one())
        null = cd.CDNum.unit(0, scale=GScalar(1)) + cd.CDNum.unit(1, scale=I)
        try:
            cd.invert(null)
            rep.fact("inverse: null octonion 1 + i e1 is rejected", False, null.to_json())
        except cd.NonInvertibleError:
            rep.fact("inverse: null octonion 1 + i e1 is rejected", True)
        rep.check("field involution is a ring automorphism",
                  composition_cases(rng, 3, "QI", samples // 5, 2),
                  lambda x, y: cd.complex_conj_entry(m(x, y))
                  == m(cd.complex_conj_entry(x), cd.complex_conj_entry(y)))
    return rep


# ---------------------------------------------------------------------------
# jordan
# ---------------------------------------------------------------------------

def cross_completeness(report: SuiteReport, fast: bool = False):
    """(X x Y, Z) = 3 (X, Y, Z) on basis triples (all 27^3 unless fast)."""
    B = jd.basis27()
    crosses = {}

    def ok(i, j, k):
        key = (i, j)
        if key not in crosses:
            crosses[key] = jd.cross(B[i], B[j])
        return jd.bilinear(crosses[key], B[k]) == 3 * jd.trilinear(B[i], B[j], B[k])

    if fast:
        cases = itertools.combinations_with_replacement(range(27), 3)
    else:
        cases = itertools.product(range(27), repeat=3)
    return report.check(
        "(X x Y, Z) = 3(X, Y, Z) on basis triples" + (" (multisets)" if fast else " (all 27^3)"),
        cases, ok, lambda i, j, k: [jd.basis_label(i), jd.basis_label(j), jd.basis_label(k)])


def suite_jordan(samples: int, seed: int, fast: bool = False,
                 backend: str = "exact") -> SuiteReport:
    rep = SuiteReport("jordan", backend)
    rng = _rng(seed, "jordan")
    field_ = "QI" if backend == "exact" else "complex"
    jm, bl, tri, det = jd.jordan_mul, jd.bilinear, jd.trilinear, jd.det

    def singles(n=samples):
        return ((jd.random_herm3(rng, field_),) for _ in range(n))

    def pairs(n=samples):
        return ((jd.random_herm3(rng, field_), jd.random_herm3(rng, field_)) for _ in range(n))

    def triples(n=samples):
        return (tuple(jd.random_herm3(rng, field_) for _ in range(3)) for _ in range(n))

    ident = jd.Herm3.identity()
    rep.check("I o X = X", singles(), lambda X: jm(ident, X) == X)
    rep.check("X o Y = Y o X", pairs(), lambda X, Y: jm(X, Y) == jm(Y, X))
    rep.check("X o X closed form", singles(), lambda X: jd.jordan_square(X) == jm(X, X))
    rep.check("Jordan identity (X^2 o Y) o X = X^2 o (Y o X)", pairs(),
              lambda X, Y: jm(jm(jm(X, X), Y), X) == jm(jm(X, X), jm(Y, X)))
    rep.check("(X, Y) closed form = tr(X o Y)", pairs(),
              lambda X, Y: is_zero(bl(X, Y) - jd.bilinear_trace(X, Y)))
    rep.check("(X, Y o Z) = (X o Y, Z)", triples(),
              lambda X, Y, Z: is_zero(bl(X, jm(Y, Z)) - bl(jm(X, Y), Z)))
    rep.check("det closed form = trace form", singles(),
              lambda X: is_zero(det(X) - jd.det_trace(X)))
    rep.check("det X = (X, X, X)", singles(), lambda X: is_zero(det(X) - tri(X, X, X)))

    def polar(X, Y, Z):
        lhs = 6 * tri(X, Y, Z)
        rhs = (det(X + Y + Z) - det(X + Y) - det(X + Z) - det(Y + Z)
               + det(X) + det(Y) + det(Z))
        return is_zero(lhs - rhs)
    rep.check("6(X,Y,Z) = six-term det polarization", triples(), polar)
    rep.check("(X,Y,Z) symmetric under permutations", triples(samples // 10),
              lambda X, Y, Z: all(is_zero(tri(X, Y, Z) - tri(*p))
                                  for p in itertools.permutations((X, Y, Z))))
    rep.check("X x Y componentwise = closed trace expression", pairs(),
              lambda X, Y: jd.cross(X, Y) == jd.cross_trace(X, Y))
    rep.check("X x X closed form", singles(), lambda X: jd.cross_square(X) == jd.cross(X, X))
    rep.check("X x Y componentwise = dual via trilinear on basis", pairs(max(1, samples // 20)),
              lambda X, Y: jd.cross(X, Y) == jd.cross_dual(X, Y))

    def adjoint(X):
        S = jd.cross_square(X)
        return X.scale(det(X)) == jd.cross(S, S)
    rep.check("adjoint identity X det X = (X x X) x (X x X)", singles(), adjoint)
    rep.fact("det I = 1", det(ident) == 1)
    rep.fact("E1 x E2 = E3 / 2", jd.cross(jd.Herm3.E(1), jd.Herm3.E(2)) == jd.Herm3.E(3, mpq(1, 2)))
    if backend == "exact":
        cross_completeness(rep, fast=fast)
    return rep


# ---------------------------------------------------------------------------
# veronese
# ---------------------------------------------------------------------------

def strong_equivalence(report: SuiteReport, weak_points, controls):
    """Both strong-isotropy procedures agree on weak points and controls."""
    def agree_weak(p):
        a = vr.is_strongly_isotropic(p)
        b = vr.is_strongly_isotropic_appendix(p)
        return a == b

    def agree_raw(p):
        X = p.rep
        return (vr.strong_identity_failure(X) is None) == (vr.appendix_failure(X) is None)

    report.check("strong isotropy: identity and equation system agree on weak points",
                 ((p,) for p in weak_points), agree_weak)
    report.check("controls are Veronese and not weakly isotropic",
                 ((p,) for p in controls),
                 lambda p: vr.is_veronese(p.rep) and not vr.is_weakly_isotropic(p))
    report.check("strong isotropy: both procedures reject every control",
                 ((p,) for p in controls),
                 lambda p: agree_raw(p) and vr.appendix_failure(p.rep) is not None)


def suite_veronese(samples: int, seed: int, fast: bool = False,
                   backend: str = "exact") -> SuiteReport:
    rep = SuiteReport("veronese", "exact")
    rng = _rng(seed, "veronese")
    E1 = jd.Herm3.E(1)
    w = jd.Herm3.make(2, 0, 0, None,
                      cd.CDNum.unit(0, scale=GScalar(1)) + cd.CDNum.unit(1, scale=I), None)
    rep.fact("E1 is Veronese", vr.is_veronese(E1))
    rep.fact("I is not Veronese", not vr.is_veronese(jd.Herm3.identity()))
    rep.fact("(2,0,0; 0, 1 + i e1, 0) is Veronese and weakly isotropic",
             vr.is_veronese(w) and vr.is_weakly_isotropic(w))

    n_weak = max(samples, 1)
    weak = vr.generate_weak_points(n_weak, seed)
    strong = vr.generate_strong_points(max(1, samples // 5), seed)
    controls = vr.generate_non_isotropic_points(max(1, samples // 5), seed)
    rep.check("generated weak points are Veronese and weakly isotropic",
              ((p,) for p in weak), lambda p: vr.is_weakly_isotropic(p))
    strong_equivalence(rep, weak + strong, controls)
    rep.fact("frozen fixture is strongly isotropic (both procedures)",
             vr.is_strongly_isotropic(vr.STRONG_FIXTURE)
             and vr.is_strongly_isotropic_appendix(vr.STRONG_FIXTURE),
             vr.STRONG_FIXTURE.to_json())
    rep.fact("fixture search reproduces the frozen fixture",
             vr.find_strong_fixture() == vr.STRONG_FIXTURE)
    rep.check("orbit images of the fixture are strongly isotropic",
              ((p,) for p in strong), lambda p: vr.is_strongly_isotropic(p))
    rep.check("strong iff V-incident with H(X)",
              ((p,) for p in (weak[: samples // 5] + strong)),
              lambda p: vr.is_strongly_isotropic(p) == vr.v_incident(p, vr.map_H(p.rep)))

    def pairs():
        return ((jd.random_herm3(rng), jd.random_herm3(rng)) for _ in range(samples))
    rep.check("H is involutive", ((jd.random_herm3(rng),) for _ in range(samples)),
              lambda X: vr.map_H(vr.map_H(X)) == X)
    rep.check("H is semilinear", pairs(),
              lambda X, Y: vr.map_H(X.scale(I) + Y) == vr.map_H(X).scale(-I) + vr.map_H(Y))
    rep.check("h closed form = (X, H(Y))", pairs(),
              lambda X, Y: vr.form_h(X, Y) == vr.form_h_via_H(X, Y))
    rep.check("h(X, Y) = sigma(h(Y, X))", pairs(),
              lambda X, Y: vr.form_h(X, Y) == sigma(vr.form_h(Y, X)))

    pts = [p.rep for p in weak[: samples // 5] + strong] + [jd.Herm3.E(i) for i in (1, 2, 3)]
    rep.check("H maps Veronese vectors to Veronese vectors", ((X,) for X in pts),
              lambda X: vr.is_veronese(vr.map_H(X)))
    pair_cases = list(itertools.combinations(pts[:12], 2))
    rep.check("X x Y = 0 iff H(X) x H(Y) = 0", pair_cases,
              lambda X, Y: jd.cross(X, Y).is_zero() == jd.cross(vr.map_H(X), vr.map_H(Y)).is_zero())
    rep.check("classifiers invariant under rescaling",
              ((p.rep, s) for p in weak[:10] + strong[:10]
               for s in (GScalar(2, 1), mpq(-3, 5))),
              lambda X, s: vr.is_strongly_isotropic(X) == vr.is_strongly_isotropic(X.scale(s)))
    U = jd.Herm3.E(1)
    sym = vr.symplecton(U)
    rep.fact("symplecton of E1 has dimension 10", sym.dim == 10, sym.dim)
    rep.fact("E2 is V-incident with E1", vr.v_incident(jd.Herm3.E(2), U))
    return rep


# ---------------------------------------------------------------------------
# liegroups
# ---------------------------------------------------------------------------

def group_certification(report: SuiteReport, fast: bool = False):
    for g in lg.builtin_generators():
        cert = lg.certify(g, fast=fast)
        expected_orth = g.tag in ("Ta", "Rcs")
        ok = cert["det"] and cert["h"]
        if expected_orth:
            ok = ok and cert["bilinear"] and cert["commutesH"]
        report.fact(f"{g}: det, h" + (", (.,.), H" if expected_orth else ""), ok,
                    None if ok else cert)
    scale2 = lg.scaling_map(2)
    fail = lg.det_failure(scale2)
    ratio = lg.det_ratio(scale2)
    report.fact("X -> 2X fails det with ratio 8", fail is not None and ratio == 8,
                {"ratio": scalar_to_json(ratio),
                 "triple": [jd.basis_label(i) for i in fail[0]] if fail else None})


def suite_liegroups(samples: int, seed: int, fast: bool = False,
                    backend: str = "exact") -> SuiteReport:
    rep = SuiteReport("liegroups", "exact")
    rng = _rng(seed, "liegroups")
    group_certification(rep, fast=fast)
    s_i = lg.Somega(I)
    rep.fact("S_i does not preserve (.,.) (witness on basis pairs)",
             lg.bilinear_failure(s_i) is not None,
             [jd.basis_label(n) for n in lg.bilinear_failure(s_i) or ()])
    printed = lg.det_failure(lambda X: lg.apply_Rcs_as_printed(mpq(3, 5), mpq(4, 5), X))
    rep.fact("R(c,s) with x2 in the (1,2) entry fails det", printed is not None,
             [jd.basis_label(n) for n in printed[0]] if printed else None)
    rep.check("R(c,s) closed form = congruence M X M^T",
              ((c, s, jd.random_herm3(rng)) for c, s in lg.PYTHAGOREAN
               for _ in range(max(1, samples // 10))),
              lambda c, s, X: lg.apply_Rcs(c, s, X) == lg.rcs_by_congruence(c, s, X))

    word = lg.random_word(rng, 3)
    M = lg.to_matrix(word)
    rep.check("matrix of a word reproduces its action",
              ((jd.random_herm3(rng),) for _ in range(max(1, samples // 10))),
              lambda X: M(X) == word(X))
    g1, g2 = lg.random_word(rng, 2), lg.random_word(rng, 2)
    rep.fact("matrix of a concatenation is the matrix product",
             lg.to_matrix(g1.then(g2)) == lg.to_matrix(g2) @ lg.to_matrix(g1))
    rep.fact("identity word has the identity matrix",
             lg.to_matrix(lg.GroupWord()) == lg.LinearMap27.identity())

    strong = vr.generate_strong_points(max(2, samples // 10), seed)
    gens = lg.builtin_generators()
    rep.check("generators keep strongly isotropic points strongly isotropic",
              ((g, p) for p in strong[:5] for g in gens),
              lambda g, p: vr.is_strongly_isotropic(g(p.rep)))
    reps = [p.rep for p in strong[:6]] + [jd.Herm3.E(1), jd.Herm3.E(2)]
    rep.check("generators preserve collinearity",
              ((g, X, Y) for g in gens[:: max(1, len(gens) // 6)]
               for X, Y in itertools.combinations(reps, 2)),
              lambda g, X, Y: jd.cross(X, Y).is_zero() == jd.cross(g(X), g(Y)).is_zero())
    orb1 = lg.orbit(vr.STRONG_FIXTURE, lg.default_orbit_generators(), 1)
    orb2 = lg.orbit(vr.STRONG_FIXTURE, lg.default_orbit_generators(), 2)
    rep.fact("orbit size is monotone in depth", len(orb1) <= len(orb2), [len(orb1), len(orb2)])
    rep.check("orbit points of a strong seed are strongly isotropic",
              ((p,) for p in orb2), lambda p: vr.is_strongly_isotropic(p))
    return rep


# ---------------------------------------------------------------------------
# plucker
# ---------------------------------------------------------------------------

def random_decomposable_pair(rng: random.Random):
    """Two random planes; about half of them forced to meet."""
    a, b, c, d = (pl.random_vec6(rng) for _ in range(4))
    if rng.random() < 0.5:
        c = pl.vadd(pl.vscale(pl.GScalar(rng.randint(-3, 3), rng.randint(-3, 3)), a),
                    pl.vscale(rng.randint(1, 4), b))
    return (a, b), (c, d)


def toy_model_checks(report: SuiteReport, rng: random.Random, samples: int):
    def three_way(P, Q):
        u, v = pl.wedge2(*P), pl.wedge2(*Q)
        r1 = pl.confluent(u, v)
        r2 = pl.planes_meet(u, v)
        r3 = pl.cross6(u, v).is_zero()
        return r1 == r2 == r3

    def round_trip(P, Q):
        ok = True
        for a, b in (P, Q):
            u = pl.wedge2(a, b)
            L = pl.inverse_plucker(u)
            ok = ok and L == pl.span(a, b) and pl.same_ray(pl.plucker_embed(L), u)
        return ok

    pairs = [random_decomposable_pair(rng) for _ in range(samples)]
    report.check("u ^ v = 0 <=> u x v = 0 <=> planes meet", pairs, three_way)
    report.check("Plücker round trip", pairs, round_trip)
    report.check("h2 on wedges = 2x2 determinant of h6",
                 pairs, lambda P, Q: pl.form_h2(pl.wedge2(*P), pl.wedge2(*Q))
                 == pl.form_h2_wedges(P[0], P[1], Q[0], Q[1]))


def suite_plucker(samples: int, seed: int, fast: bool = False,
                  backend: str = "exact") -> SuiteReport:
    rep = SuiteReport("plucker", "exact")
    rng = _rng(seed, "plucker")
    for form, expected in (("h6", 2), ("h2", 7), ("definite", 0)):
        w = pl.witt_index(form)
        s = pl.witt_index_by_signature(form)
        rep.fact(f"witt({form}) = {expected} (splitting and signature)",
                 w == expected and s == expected, [w, s])
    rep.fact("h2 is non-degenerate", pl.gram_determinant(pl.h2_gram()) != 0)
    e = pl.unit_vec
    u = pl.Bivector.basis(1, 2) + pl.Bivector.basis(3, 4)
    rep.fact("e12 + e34 is not decomposable", not pl.is_decomposable(u))
    rep.fact("triple6(e12, e34, e56) = 1",
             pl.triple6(pl.Bivector.basis(1, 2), pl.Bivector.basis(3, 4),
                        pl.Bivector.basis(5, 6)) == 1)
    iso = pl.wedge2(pl.vadd(e(1), e(3)), pl.vadd(e(2), e(4)))
    rep.fact("(e1 + e3) ^ (e2 + e4) is strongly isotropic", pl.is_strongly_isotropic_biv(iso))
    toy_model_checks(rep, rng, samples)

    def strong_cases():
        for _ in range(max(1, samples // 5)):
            L = geo.random_line(rng)
            yield (pl.plucker_embed(L),)
            a, b = pl.random_vec6(rng), pl.random_vec6(rng)
            yield (pl.wedge2(a, b),)
    rep.check("strong => weak, and strong <=> h2(u, v) = 0 on the incident family",
              strong_cases(),
              lambda u: (not pl.is_strongly_isotropic_biv(u) or pl.is_weakly_isotropic_biv(u))
              and pl.is_strongly_isotropic_biv(u) == pl.strong_by_incident_family(u))
    rep.check("triple6 is symmetric",
              (tuple(pl.wedge2(pl.random_vec6(rng), pl.random_vec6(rng)) for _ in range(3))
               for _ in range(max(1, samples // 10))),
              lambda a, b, c: all(pl.triple6(a, b, c) == pl.triple6(*p)
                                  for p in itertools.permutations((a, b, c))))
    return rep


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------

def e6_sample(depth: int = 2):
    seeds = [vr.STRONG_FIXTURE, vr.strong_neighbour(1), vr.strong_neighbour(2, -1)]
    return geo.build_e6_sample(seeds, lg.default_orbit_generators(), depth)


def e6_checks(report: SuiteReport, depth: int = 2, min_points: int = 50):
    S = e6_sample(depth)
    audit = geo.check_gq_axioms(S.incidence, sample_local=True)
    report.fact(f"E6 sample has >= {min_points} points at depth {depth}",
                len(S.points) >= min_points, len(S.points))
    report.check("E6 sample points are strongly isotropic",
                 ((p,) for p in S.points), lambda p: vr.is_strongly_isotropic(p))
    report.fact("E6 sample: no digons or triangles",
                not audit.digons and not audit.triangles, audit.to_json())
    report.fact("E6 sample: lines are cliques of the collinearity relation",
                all(S.relation.related(a, b) for L in S.incidence.lines
                    for a, b in itertools.combinations(sorted(L), 2)))
    return S, audit


def classical_projection_checks(report: SuiteReport, rng: random.Random, n: int):
    def certified(p, M):
        r = geo.classical_projection(p, M)
        x, q = p.rows[0], r.q.rows[0]
        return (r.certificate["dim_M_cap_p_perp"] == 1 and M.contains(q)
                and is_zero(pl.form_h6(x, q)) and pl.is_totally_isotropic(r.L)
                and r.L.contains(x) and r.L.contains(q))
    cases = [geo.random_nonincident_pair(rng) for _ in range(n)]
    return report.check("classical projection is unique and certified", cases, certified,
                        lambda p, M: {"p": p.to_json(), "M": M.to_json()})


def suite_geometry(samples: int, seed: int, fast: bool = False,
                   backend: str = "exact") -> SuiteReport:
    rep = SuiteReport("geometry", "exact")
    rng = _rng(seed, "geometry")
    W = geo.w2_fixture()
    rep.fact("W(2) has 15 points and 15 lines", (len(W.points), len(W.lines)) == (15, 15))
    rep.fact("W(2) passes the GQ axioms", geo.check_gq_axioms(W).passed)
    rep.fact("dual of W(2) passes the GQ axioms", geo.check_gq_axioms(geo.dualize(W)).passed)
    rep.fact("dualize is involutive", geo.dualize(geo.dualize(W)).lines == W.lines)
    fano = geo.check_gq_axioms(geo.fano_fixture())
    rep.fact("Fano plane fails (triangles found)", not fano.passed and bool(fano.triangles))
    grid = geo.check_gq_axioms(geo.grid_fixture())
    rep.fact("3x3 grid fails thickness only",
             grid.axiom_a and grid.axiom_b and not grid.thick and not grid.passed)

    classical_projection_checks(rep, rng, max(1, samples))
    sample = geo.build_classical_sample(max(30, samples // 4), seed)
    audit = geo.check_gq_axioms(sample.incidence, sample_local=True)
    rep.fact("classical sample: axiom (a), no triangles", audit.axiom_a and not audit.triangles,
             audit.to_json())
    rep.fact("classical sample: points isotropic, lines totally isotropic",
             all(is_zero(pl.form_h6(v, v)) for v in sample.vectors)
             and all(pl.is_totally_isotropic(S) for S in sample.line_spaces))
    rep.fact("classical sample: collinearity lines = subspace rows",
             geo.line_rows_from_spaces(sample) == sample.incidence.lines)
    e6_checks(rep)
    return rep


SUITES = {
    "composition": suite_composition,
    "jordan": suite_jordan,
    "veronese": suite_veronese,
    "liegroups": suite_liegroups,
    "plucker": suite_plucker,
    "geometry": suite_geometry,
}


def run_suites(names, samples: int, seed: int, fast: bool = False,
               backend: str = "exact") -> list[SuiteReport]:
    if names == "all" or names == ["all"]:
        names = list(SUITE_NAMES)
    elif isinstance(names, str):
        names = [names]
    return [SUITES[n](samples, seed, fast=fast, backend=backend) for n in names]
