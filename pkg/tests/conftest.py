import random

import pytest
from hypothesis import settings

from polydec.polycore import QQ, UniPoly, parse_poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def P(text, field=QQ):
    """Univariate polynomial in x from text."""
    return parse_poly(text, ("x",), field).to_unipoly("x")


def M(text, vars=("t", "x"), field=QQ):
    return parse_poly(text, vars, field)


def random_monic(rng, d, field=QQ, lo=-9, hi=9):
    cs = [field(rng.randint(lo, hi)) for _ in range(d)] + [field.one]
    return UniPoly(cs, field)


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_LINES = []


def record_acceptance(number, title, passed, detail):
    ACCEPTANCE_LINES.append((number, f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}: {detail}"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
