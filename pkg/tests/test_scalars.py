import json

import pytest
from gmpy2 import mpq
from hypothesis import given

from e6quad.scalars import (
    GScalar, I, Q, abs2, is_zero, parse_rational, random_unit_gscalar, scalar_from_json,
    scalar_to_json, sigma, simplify,
)

from conftest import gaussians, rationals


def test_conjugation_examples():
    assert sigma(GScalar(mpq(3, 5), mpq(4, 5))) == GScalar(mpq(3, 5), mpq(-4, 5))
    assert sigma(mpq(7)) == 7
    s = GScalar(3, 4)
    assert s * sigma(s) == 25


@pytest.mark.parametrize("s, expected", [(GScalar(0), 0), (I, 1), (GScalar(1, 2), 5)])
def test_abs2_examples(s, expected):
    assert abs2(s) == expected


def test_rationals_are_canonical():
    assert Q(2, 4) == Q(1, 2)
    assert hash(Q(2, 4)) == hash(Q(1, 2))
    assert GScalar(Q(2, 4), 0) == Q(1, 2)
    assert hash(GScalar(Q(1, 2), 0)) == hash(Q(1, 2))


def test_float_is_refused():
    with pytest.raises(TypeError):
        Q(0.5)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * (1 / a) == 1


@given(gaussians, gaussians)
def test_sigma_is_an_involutive_automorphism(a, b):
    assert sigma(a * b) == sigma(a) * sigma(b)
    assert sigma(a + b) == sigma(a) + sigma(b)
    assert sigma(sigma(a)) == a


@given(gaussians, gaussians)
def test_abs2_multiplicative_and_definite(a, b):
    assert abs2(a * b) == abs2(a) * abs2(b)
    assert abs2(a) >= 0
    assert (abs2(a) == 0) == (a == 0)


@given(gaussians)
def test_json_round_trip(a):
    assert scalar_from_json(json.loads(json.dumps(scalar_to_json(a)))) == a


@given(rationals)
def test_rational_json_round_trip(q):
    assert scalar_from_json(scalar_to_json(q)) == q


def test_parse_rational_rejects_garbage():
    with pytest.raises(ValueError):
        parse_rational("one half")


def test_unit_gaussians_have_norm_one():
    import random
    rng = random.Random(3)
    assert all(abs2(random_unit_gscalar(rng)) == 1 for _ in range(50))


def test_float_backend_tolerance():
    assert is_zero(1e-12) and not is_zero(1e-6)
    assert is_zero(complex(1e-12, -1e-12))
    assert simplify(GScalar(3, 0)) == 3 and isinstance(simplify(GScalar(3, 0)), type(Q(3)))
