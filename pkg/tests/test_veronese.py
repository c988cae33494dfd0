import itertools

import pytest
from gmpy2 import mpq
from hypothesis import given

from e6quad import jordan as jd
from e6quad import liegroups as lg
from e6quad import veronese as vr
from e6quad.composition import CDNum
from e6quad.jordan import Herm3
from e6quad.scalars import GScalar, I, sigma

from conftest import gaussians, herm3s

E1, E2, E3 = (Herm3.E(i) for i in (1, 2, 3))
NULL = CDNum.unit(0, scale=GScalar(1)) + CDNum.unit(1, scale=I)
W = Herm3.make(2, 0, 0, None, NULL, None)


def test_veronese_examples():
    assert vr.is_veronese(E1)
    assert not vr.is_veronese(Herm3.identity())
    assert vr.is_veronese(W)
    assert not vr.is_veronese(Herm3.zero())


def test_rank_one_real_points_are_veronese():
    for v in itertools.product(range(-2, 3), repeat=3):
        if any(v):
            assert vr.is_veronese(vr.rank_one(v))


@given(herm3s)
def test_veronese_conditions_match_cross_square(X):
    assert all(ok for *_, ok in vr.veronese_conditions(X)) == jd.cross_square(X).is_zero()


def test_H_examples():
    assert vr.map_H(E1) == E1
    assert vr.map_H(E1.scale(I)) == E1.scale(-I)
    assert vr.map_H(Herm3.slot(1, CDNum.unit(1))) == Herm3.slot(1, -CDNum.unit(1))


@given(herm3s, herm3s, gaussians)
def test_H_is_a_semilinear_involution(X, Y, s):
    H = vr.map_H
    assert H(H(X)) == X
    assert H(X.scale(s) + Y) == H(X).scale(sigma(s)) + H(Y)


@given(herm3s, herm3s)
def test_h_is_hermitian_and_matches_bilinear_route(X, Y):
    assert vr.form_h(X, Y) == vr.form_h_via_H(X, Y) == sigma(vr.form_h(Y, X))


def test_h_examples():
    assert vr.form_h(E3, E3) == 1
    assert vr.form_h(E1, E2) == 0
    assert vr.form_h(W, W) == 0


def test_real_forms():
    assert vr.map_B(E1) == E1
    assert vr.form_beta(E3, E3) == 1
    e = Herm3.slot(1, CDNum.one())
    assert vr.form_beta(e, e) == -2
    with pytest.raises(vr.NotRealError):
        vr.map_B(E1.scale(I))


def test_weak_isotropy_examples():
    assert not vr.is_weakly_isotropic(E1)
    assert vr.is_weakly_isotropic(W)
    assert vr.is_weakly_isotropic(W.scale(GScalar(3, -2)))


def test_strong_isotropy_preconditions():
    with pytest.raises(vr.NotWeaklyIsotropicError):
        vr.is_strongly_isotropic(E1)
    with pytest.raises(vr.NotVeroneseError):
        vr.is_strongly_isotropic(Herm3.identity())
    with pytest.raises(vr.ZeroVectorError):
        vr.ProjPoint(Herm3.zero())


def test_fixture_is_strongly_isotropic_three_ways():
    X = vr.STRONG_FIXTURE
    assert X == Herm3.make(0, 1, 1, CDNum.one())
    assert vr.is_strongly_isotropic(X)
    assert vr.is_strongly_isotropic_appendix(X)
    assert vr.v_incident(X, vr.map_H(X))
    assert vr.find_strong_fixture() == X


def test_strong_neighbours():
    pts = [vr.strong_neighbour(k, s) for k in (1, 2, 3) for s in (1, -1)]
    for p in pts:
        assert vr.is_strongly_isotropic(p) and vr.collinear(p, vr.STRONG_FIXTURE)
    for p, q in itertools.combinations(pts, 2):
        assert not vr.collinear(p, q)


def test_generator_images_of_the_fixture_are_strong():
    for g in lg.builtin_generators():
        assert vr.is_strongly_isotropic(g(vr.STRONG_FIXTURE))


def test_weak_family_is_weak_but_not_strong():
    X = vr.weak_family_member(1, CDNum.one(), CDNum.unit(1))
    assert X == W
    assert vr.is_weakly_isotropic(X)
    assert not vr.is_strongly_isotropic(X)
    assert not vr.is_strongly_isotropic_appendix(X)


def test_appendix_examples():
    assert vr.appendix_failure(E3) is not None and vr.form_h(E3, E3) == 1
    assert vr.appendix_failure(Herm3.make(1, 1, 0)) is not None
    assert vr.appendix_failure(Herm3.make(0, 3, 2)) is not None


def test_procedures_agree_on_real_rank_one_box():
    strong = 0
    for v in itertools.product(range(-2, 3), repeat=3):
        if not any(v):
            continue
        X = vr.rank_one(v)
        a = vr.strong_identity_failure(X) is None
        b = vr.appendix_failure(X) is None
        assert a == b
        strong += a
    assert strong > 0


def test_procedures_agree_on_generated_points():
    weak = vr.generate_weak_points(40, 1) + vr.generate_strong_points(20, 1)
    for p in weak:
        assert vr.is_strongly_isotropic(p) == vr.is_strongly_isotropic_appendix(p)
        assert vr.is_strongly_isotropic(p) == vr.v_incident(p, vr.map_H(p.rep))


def test_v_incidence_examples():
    U = E1
    assert vr.v_incident(E2, U) and jd.jordan_mul(E2, U).is_zero()
    sym = vr.symplecton(U)
    assert sym.dim == 10
    # U x h3 = {(0, xi2, xi3; x1, 0, 0)}
    for b in sym.basis:
        assert b.xi[0] == 0 and b.x[1].is_zero() and b.x[2].is_zero()
    assert sym.contains(Herm3.make(0, 5, mpq(1, 3), CDNum.unit(6, scale=I)))
    assert not sym.contains(E1)


def test_jordan_annihilator_points_are_v_incident():
    # Veronese X with X o E1 = 0 live in the (0, xi2, xi3; x1, 0, 0) block
    for X in (E2, E3, Herm3.slot(1, NULL), vr.STRONG_FIXTURE):
        assert vr.is_veronese(X) and jd.jordan_mul(X, E1).is_zero()
        assert vr.v_incident(X, E1)
    assert not vr.v_incident(vr.rank_one((1, 1, 0)), E1)


def test_symplecton_dimension_is_constant_on_an_orbit():
    pts = lg.orbit(E1, lg.default_orbit_generators(), 1)
    assert {vr.symplecton(p.rep).dim for p in pts} == {10}


def test_collinearity():
    assert vr.collinear(E1, E1)
    assert not vr.collinear(E1, E2)
    X, Y = vr.STRONG_FIXTURE, vr.strong_neighbour(1)
    for g in lg.builtin_generators():
        assert vr.collinear(g(X), g(Y))
        assert not vr.collinear(g(E1), g(E2))


def test_generation_is_deterministic_and_counted():
    a = vr.generate_weak_points(12, 9)
    assert len(a) == 12 and a == vr.generate_weak_points(12, 9)
    assert a != vr.generate_weak_points(12, 10)
    assert all(vr.is_weakly_isotropic(p) for p in a)
    controls = vr.generate_non_isotropic_points(12, 9)
    assert all(vr.is_veronese(p.rep) and not vr.is_weakly_isotropic(p) for p in controls)


def test_projective_points_ignore_scale():
    X = vr.STRONG_FIXTURE
    assert vr.ProjPoint(X) == vr.ProjPoint(X.scale(GScalar(2, 7)))
    assert hash(vr.ProjPoint(X)) == hash(vr.ProjPoint(X.scale(-3)))


def test_classify_certificates():
    c = vr.classify(vr.STRONG_FIXTURE)
    assert c["strong"] and c["agreement"] and c["failed_equation"] is None
    c = vr.classify(E1)
    assert c["veronese"] and not c["weak"] and not c["strong"]
    c = vr.classify(W)
    assert c["weak"] and not c["strong"] and c["agreement"]
    assert c["failed_equation"]["family"] >= 1
    assert not vr.classify(Herm3.identity())["veronese"]
    with pytest.raises(vr.ZeroVectorError):
        vr.classify(Herm3.zero())
