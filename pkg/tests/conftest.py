import random

import pytest
from hypothesis import settings

from cupcube.branched import knot_diagram
from cupcube.diagram import parse_pd

settings.register_profile("cupcube", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("cupcube")

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"
KNOTS = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"]


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def rng():
    return random.Random(0)


def small_diagrams():
    return [parse_pd(TREFOIL), parse_pd(HOPF), parse_pd("X(1,2,2,1)")] + \
        [knot_diagram(k) for k in KNOTS[:4]]


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
