import random

import pytest

from mongeops.config import DEFAULT_SEED
from mongeops.exactalg import Context, Parameter, parse_expr


@pytest.fixture
def pq():
    return Context(["p", "q"])


@pytest.fixture
def u3():
    return Context(["u1", "u2", "u3"], [Parameter("lam", nonzero=True), Parameter("mu")])


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)


def matrix(ctx, rows):
    return tuple(tuple(parse_expr(e, ctx) for e in row) for row in rows)
