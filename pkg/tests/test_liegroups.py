import random

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from e6quad import jordan as jd
from e6quad import liegroups as lg
from e6quad import veronese as vr
from e6quad.composition import CDNum, cd_conj
from e6quad.jordan import Herm3
from e6quad.scalars import GScalar, I, abs2

from conftest import herm3s

GENS = lg.builtin_generators()
generators = st.sampled_from(GENS)


def test_builtin_parameters():
    assert len(GENS) == 21
    assert lg.quaternion_triples() == ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6),
                                       (2, 5, 7), (3, 4, 7), (3, 5, 6))
    assert all(c * c + s * s == 1 for c, s in lg.PYTHAGOREAN)
    assert all(abs2(w) == 1 for w in lg.UNIT_GAUSSIAN)


def test_Ta_examples(rng):
    X = jd.random_herm3(rng)
    assert lg.apply_Ta(CDNum.one(), X) == X
    assert lg.apply_Ta(CDNum.unit(1), Herm3.E(1)) == Herm3.E(1)


def test_Rcs_examples(rng):
    X = jd.random_herm3(rng)
    assert lg.apply_Rcs(1, 0, X) == X
    (a, b, c), (x1, x2, x3) = X.xi, X.x
    assert lg.apply_Rcs(0, 1, X) == Herm3([b, a, c], [-cd_conj(x2), cd_conj(x1), -cd_conj(x3)])


def test_Somega_examples(rng):
    X = jd.random_herm3(rng)
    assert lg.apply_Somega(1, X) == X
    assert lg.apply_Somega(GScalar(mpq(3, 5), mpq(4, 5)), Herm3.E(3)) == Herm3.E(3)
    assert lg.apply_Somega(I, Herm3.E(1)) == -Herm3.E(1)


@given(generators, herm3s)
def test_trace_preserved_by_Ta_and_Rcs(g, X):
    if g.tag != "Somega":
        assert jd.trace(g(X)) == jd.trace(X)


@given(generators, herm3s)
def test_det_preserved_pointwise(g, X):
    assert jd.det(g(X)) == jd.det(X)


@given(generators, herm3s, herm3s)
def test_h_preserved_pointwise(g, X, Y):
    assert vr.form_h(g(X), g(Y)) == vr.form_h(X, Y)


@given(herm3s)
def test_Rcs_closed_form_is_a_congruence(X):
    for c, s in lg.PYTHAGOREAN:
        assert lg.apply_Rcs(c, s, X) == lg.rcs_by_congruence(c, s, X)


def test_Rcs_with_x2_in_the_corner_breaks_det():
    fail = lg.det_failure(lambda X: lg.apply_Rcs_as_printed(mpq(3, 5), mpq(4, 5), X))
    assert fail is not None
    triple, before, after = fail
    assert before != after


@pytest.mark.parametrize("g", GENS, ids=str)
def test_generator_certification(g):
    assert lg.preserves_det(g)
    assert lg.preserves_h(g)
    orthogonal = g.tag in ("Ta", "Rcs")
    assert lg.preserves_bilinear(g) == orthogonal
    assert lg.commutes_with_H(g) == orthogonal


def test_S_i_bilinear_witness():
    i, j = lg.bilinear_failure(lg.Somega(I))
    B = jd.basis27()
    g = lg.Somega(I)
    assert jd.bilinear(g(B[i]), g(B[j])) != jd.bilinear(B[i], B[j])


def test_scaling_map_is_not_in_the_group():
    g = lg.scaling_map(2)
    assert not lg.preserves_det(g)
    assert lg.det_ratio(g) == 8
    assert lg.preserves_det(lg.GroupWord())


def test_fast_mode_samples():
    assert lg.preserves_det(GENS[0], fast=True, rng=random.Random(1))
    assert not lg.preserves_det(lg.scaling_map(2), fast=True, rng=random.Random(1))


def test_matrices(rng):
    assert lg.to_matrix(lg.GroupWord()) == lg.LinearMap27.identity()
    gram = jd.gram_diagonal()
    for g in GENS:
        M = lg.to_matrix(g)
        assert abs2(M.determinant()) == 1
        X = jd.random_herm3(rng)
        assert M(X) == g(X)
    # T_a is orthogonal for the Gram matrix of (.,.)
    M = lg.to_matrix(lg.Ta(lg.unit_octonions()[8]))
    for i in range(27):
        for j in range(27):
            s = sum(M.rows[k][i] * M.rows[k][j] * gram[k] for k in range(27))
            assert s == (gram[i] if i == j else 0)


def test_words_compose(rng):
    w1, w2 = lg.random_word(rng, 2), lg.random_word(rng, 3)
    X = jd.random_herm3(rng)
    assert w1.then(w2)(X) == w2(w1(X))
    assert lg.to_matrix(w1.then(w2)) == lg.to_matrix(w2) @ lg.to_matrix(w1)


def test_parameter_validation():
    with pytest.raises(lg.GeneratorParameterError):
        lg.Ta(CDNum.unit(1).scale(2))
    with pytest.raises(lg.GeneratorParameterError):
        lg.Rcs(1, 1)
    with pytest.raises(lg.GeneratorParameterError):
        lg.Somega(GScalar(1, 1))


@pytest.mark.parametrize("g", GENS, ids=str)
def test_json_round_trip(g):
    assert lg.Generator.from_json(g.to_json()) == g


def test_certificate_shape():
    rep = lg.certify(lg.Somega(I))
    assert rep["det"] and rep["h"] and not rep["bilinear"] and not rep["commutesH"]
    assert set(rep["witness"]) == {"bilinear", "commutesH"}
    assert rep["generator"] == {"tag": "Somega", "param": ["0", "1"]}


def test_orbits():
    E1 = Herm3.E(1)
    assert vr.ProjPoint(E1) in lg.orbit(E1, [lg.Ta(CDNum.unit(1))], 3)
    gens = lg.default_orbit_generators()
    sizes = [len(lg.orbit(vr.STRONG_FIXTURE, gens, d)) for d in range(3)]
    assert sizes[0] == 1 and sizes == sorted(sizes)
    pts = lg.orbit(vr.STRONG_FIXTURE, gens, 2)
    assert pts == lg.orbit(vr.STRONG_FIXTURE, gens, 2)
    assert all(vr.is_strongly_isotropic(p) for p in pts)
