import sympy
from hypothesis import given, strategies as st

from e6quad import linalg
from e6quad.scalars import GScalar

from conftest import gaussians


def to_sympy(s):
    if isinstance(s, GScalar):
        return sympy.Rational(int(s.re.numerator), int(s.re.denominator)) + sympy.I * sympy.Rational(
            int(s.im.numerator), int(s.im.denominator))
    return sympy.Rational(int(s.numerator), int(s.denominator))


def matrices(max_rows=5, max_cols=5):
    # sparse entries so that rank deficiency actually occurs
    entry = st.one_of(st.just(GScalar(0)), st.just(GScalar(0)), gaussians)
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices())
def test_rank_and_rref_match_sympy(m):
    red, pivots = linalg.rref(m)
    oracle_red, oracle_piv = sympy.Matrix([[to_sympy(a) for a in r] for r in m]).rref()
    assert list(pivots) == list(oracle_piv)
    for i, row in enumerate(red):
        assert [sympy.nsimplify(to_sympy(a)) for a in row] == [
            sympy.expand(oracle_red[i, j]) for j in range(len(row))]


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(gaussians, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_sympy(m):
    oracle = sympy.Matrix([[to_sympy(a) for a in r] for r in m]).det()
    assert sympy.expand(to_sympy(linalg.determinant(m)) - oracle) == 0


@given(matrices())
def test_nullspace_vectors_are_annihilated(m):
    ns = linalg.nullspace(m)
    assert len(ns) + linalg.rank(m) == len(m[0])
    for v in ns:
        assert all(x == 0 for x in linalg.matvec(m, v))


@given(matrices(), st.data())
def test_solve_consistent_systems(m, data):
    x = data.draw(st.lists(gaussians, min_size=len(m[0]), max_size=len(m[0])))
    rhs = linalg.matvec(m, x)
    v = linalg.solve(m, rhs)
    assert v is not None and linalg.matvec(m, v) == rhs


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None


def test_same_row_space():
    assert linalg.same_row_space([[1, 2], [3, 4]], [[1, 0], [0, 1]])
    assert not linalg.same_row_space([[1, 2]], [[2, 1]])
