import itertools
import json

import networkx as nx
import pytest

from e6quad import geometry as geo
from e6quad import plucker as pl
from e6quad import veronese as vr
from e6quad.plucker import span, unit_vec as e, vadd
from e6quad.verify import e6_sample


def levi_graph(g):
    G = nx.Graph()
    G.add_nodes_from(("p", i) for i in range(len(g.points)))
    G.add_nodes_from(("l", m) for m in range(len(g.lines)))
    G.add_edges_from((("p", p), ("l", m)) for m, L in enumerate(g.lines) for p in L)
    return G


def duads_and_synthemes():
    """GQ(2,2) as 2-subsets of {1..6} and perfect matchings, by containment."""
    duads = list(itertools.combinations(range(6), 2))
    index = {d: n for n, d in enumerate(duads)}
    synthemes = {frozenset(m) for m in itertools.combinations(duads, 3)
                 if len(set(itertools.chain(*m))) == 6}
    return geo.IncidenceSample(duads, [frozenset(index[d] for d in s) for s in synthemes])


def test_w2_fixture_is_the_duad_syntheme_quadrangle():
    W = geo.w2_fixture()
    assert (len(W.points), len(W.lines)) == (15, 15)
    assert nx.is_isomorphic(levi_graph(W), levi_graph(duads_and_synthemes()))


def test_w2_passes_and_so_does_its_dual():
    W = geo.w2_fixture()
    rep = geo.check_gq_axioms(W)
    assert rep.passed and rep.thick and rep.to_json()["verdict"] == "proved on instance"
    D = geo.dualize(W)
    assert (len(D.points), len(D.lines)) == (len(W.lines), len(W.points))
    assert geo.check_gq_axioms(D).passed
    assert geo.dualize(D).lines == W.lines


def test_removing_a_line_breaks_axiom_b():
    W = geo.w2_fixture()
    broken = geo.IncidenceSample(W.points, W.lines[1:])
    rep = geo.check_gq_axioms(broken)
    assert not rep.axiom_b and not rep.passed
    assert all(count == 0 for _, _, count in rep.projection_failures)
    assert geo.check_gq_axioms(broken, sample_local=True).projection_missing > 0


def test_fano_plane_has_triangles():
    rep = geo.check_gq_axioms(geo.fano_fixture())
    assert rep.axiom_a and rep.triangles and not rep.passed


def test_grid_fails_only_thickness():
    rep = geo.check_gq_axioms(geo.grid_fixture())
    assert rep.axiom_a and rep.axiom_b and not rep.triangles
    assert not rep.thick and not rep.passed


def test_digons_are_found():
    g = geo.IncidenceSample(list(range(4)), [{0, 1, 2}, {0, 1, 3}])
    assert geo.check_gq_axioms(g).digons == [(0, 1)]


def test_gamma_from_relation_examples():
    assert len(geo.grid_fixture().lines) == 6
    clique = geo.RelationSample.from_predicate(list(range(5)), lambda a, b: True)
    assert geo.gamma_from_relation(clique).lines == [frozenset(range(5))]
    empty = geo.RelationSample.from_predicate(list(range(5)), lambda a, b: False)
    assert geo.gamma_from_relation(empty).lines == []


def test_relation_validation():
    with pytest.raises(ValueError):
        geo.RelationSample([0, 1], [{0, 1}, {1}])
    with pytest.raises(ValueError):
        geo.RelationSample([0, 1], [{1}, {1}])
    with pytest.raises(ValueError):
        geo.IncidenceSample([0, 1], [{0, 2}])


def test_projection_fixture():
    p = span(vadd(e(1), e(3)))
    M = span(vadd(e(1), e(4)), vadd(e(2), e(5)))
    r = geo.classical_projection(p, M)
    assert r.q == span(vadd(e(2), e(5)))
    assert r.L == span(vadd(e(1), e(3)), vadd(e(2), e(5)))
    assert r.certificate["dim_M_cap_p_perp"] == 1


def test_projection_preconditions():
    M = span(vadd(e(1), e(4)), vadd(e(2), e(5)))
    with pytest.raises(geo.IncidentPairError):
        geo.classical_projection(span(vadd(e(1), e(4))), M)
    with pytest.raises(geo.ProjectionError):
        geo.classical_projection(span(e(3)), M)
    with pytest.raises(geo.ProjectionError):
        geo.classical_projection(span(vadd(e(1), e(3))), span(e(1), e(2)))


def test_projection_is_unique_on_random_pairs(rng):
    for _ in range(30):
        p, M = geo.random_nonincident_pair(rng)
        r = geo.classical_projection(p, M)
        x = p.rows[0]
        assert pl.is_totally_isotropic(r.L) and r.L.contains(x)
        assert M.contains(r.q.rows[0])
        # every point of M orthogonal to p is q: M ∩ p^perp is one-dimensional
        m1, m2 = M.rows
        for a, b in [(1, 0), (0, 1), (1, 1), (2, -1)]:
            y = vadd(pl.vscale(a, m1), pl.vscale(b, m2))
            if pl.form_h6(x, y) == 0:
                assert span(y) == r.q


def test_random_unitaries_preserve_h6(rng):
    for _ in range(5):
        assert geo.preserves_h6(geo.random_unitary_h6(rng))


def test_classical_sample():
    S = geo.build_classical_sample(30, 4)
    assert len(S.vectors) >= 30
    assert all(pl.form_h6(v, v) == 0 for v in S.vectors)
    assert all(pl.is_totally_isotropic(L) for L in S.line_spaces)
    assert geo.line_rows_from_spaces(S) == S.incidence.lines
    rep = geo.check_gq_axioms(S.incidence, sample_local=True)
    assert rep.axiom_a and not rep.triangles and not rep.projection_failures
    assert rep.to_json()["verdict"] == "no counterexample in sample"


def test_e6_sample_depth_one():
    S = e6_sample(1)
    assert all(vr.is_strongly_isotropic(p) for p in S.points)
    for i, j in itertools.combinations(range(len(S.points)), 2):
        assert S.relation.related(i, j) == S.relation.related(j, i)
    rep = geo.check_gq_axioms(S.incidence, sample_local=True)
    assert not rep.digons and not rep.triangles


def test_exports():
    W = geo.w2_fixture()
    dot = geo.to_dot(W, "w2")
    assert dot.startswith("graph w2 {") and dot.count("shape=") == 30
    assert dot.count(" -- ") == 45
    g = json.loads(geo.dumps_json_graph(W))
    assert len(g["points"]) == 15 and all(len(L) == 3 for L in g["lines"])
