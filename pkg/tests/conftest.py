import random

import pytest

from leastmaj.ground import popcount
from leastmaj.setfn import BisetFunction, SetFunction


@pytest.fixture
def f42():
    """f({1}) = -1, f({2}) = 2, f({1,2}) = 0."""
    return SetFunction(2, (0, -1, 2, 0))


@pytest.fixture
def l1_ball():
    return BisetFunction.from_callable(2, lambda s, t: 1 if s | t else 0)


@pytest.fixture
def box2():
    return BisetFunction.from_callable(2, lambda s, t: popcount(s) + popcount(t))


@pytest.fixture
def capped3():
    """f(A) = min(|A|, 2) on three elements."""
    return SetFunction(3, tuple(min(popcount(m), 2) for m in range(8)))


@pytest.fixture
def rng():
    return random.Random(20261016)
