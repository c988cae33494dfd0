import random

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, settings, strategies as st

from e6quad.composition import CDNum
from e6quad.jordan import Herm3
from e6quad.scalars import GScalar

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("default")

rationals = st.builds(mpq, st.integers(-9, 9), st.sampled_from([1, 2, 3, 5]))
nonzero_rationals = rationals.filter(bool)
gaussians = st.builds(GScalar, rationals, rationals)


def cd_numbers(level=3, scalars=gaussians):
    n = 1 << level
    return st.lists(scalars, min_size=n, max_size=n).map(lambda c: CDNum(c, level))


octonions = cd_numbers(3)
real_octonions = cd_numbers(3, rationals)
herm3s = st.builds(Herm3, st.lists(gaussians, min_size=3, max_size=3),
                   st.lists(octonions, min_size=3, max_size=3))


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def criterion(request, capsys):
    """Record one pass/fail line for an acceptance criterion."""
    def record(number, passed, detail):
        line = f"CRITERION {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        request.config.acceptance_lines.append(line)
        with capsys.disabled():
            print(f"\n{line}")
        return passed
    return record


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(config.acceptance_lines):
            terminalreporter.write_line(line)
