import pytest
from typer.testing import CliRunner

from commands import build_pair, parse_space_spec
from engine import config
from model import weight


def make(query: str):
    """Build an equal-rank pair from a query string."""
    return build_pair(parse_space_spec(query))


# Each pair with five mu that are eta-dominant and g-integral
MATRIX = {
    "B1/torus": [weight(0), weight("1/2"), weight(1), weight("3/2"), weight(2)],
    "B2/D2": [weight(0, 0), weight(1, 0), weight("1/2", "1/2"), weight("1/2", "-1/2"), weight("3/2", "1/2")],
    "B3/D3": [
        weight(0, 0, 0),
        weight(1, 0, 0),
        weight("1/2", "1/2", "1/2"),
        weight("1/2", "1/2", "-1/2"),
        weight(1, 1, 0),
    ],
    "B2/roots:1,1": [weight(0, 0), weight(1, 0), weight("1/2", "1/2"), weight(1, -1), weight("1/2", "-1/2")],
    "G2/A1xA1": [weight(0, 0), weight(1, 1), weight(2, 1), weight(0, 1), weight(3, 2)],
    "G2/roots:0,1": [weight(0, 0), weight(0, 1), weight(1, 1), weight(2, 1), weight(-1, 0)],
}


@pytest.fixture
def runner():
    """CLI runner with the Weyl limit override restored after each test."""
    original = config._weyl_limit_override
    yield CliRunner()
    config._weyl_limit_override = original


@pytest.fixture
def b1_torus():
    return make("B1/torus")


@pytest.fixture
def b2_d2():
    return make("B2/D2")


@pytest.fixture
def b3_d3():
    return make("B3/D3")


@pytest.fixture
def g2_a1xa1():
    return make("G2/A1xA1")


@pytest.fixture
def test_matrix():
    """(pair, mus) for every pair of the regression matrix."""
    return [(make(query), mus) for query, mus in MATRIX.items()]
