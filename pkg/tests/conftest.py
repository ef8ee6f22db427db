import random

import pytest

from skewlin import parse_matrix

# The 2x2 quaternion matrix built from the singular family with parameters
# b = 1+k, c = j, d = k; the reference example throughout the test suite.
EXAMPLE_TEXT = "[k, -i; -1+k, -i-j]"


@pytest.fixture
def rng():
    return random.Random(20240331)


@pytest.fixture
def example_matrix():
    return parse_matrix(EXAMPLE_TEXT)
