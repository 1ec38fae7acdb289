"""Shared fixtures: family grid, cached seed representations and samples."""

from fractions import Fraction

import pytest

from twistr import liealg, qrep
from twistr.scalars import QSample

Q = Fraction

# Family/rank grid used by the relation and branching acceptance criteria.
GRID = [
    ("a2even", 1), ("a2even", 2), ("a2even", 3), ("a2even", 4),
    ("a2odd", 3), ("a2odd", 4),
    ("d2", 2), ("d2", 3),
]

# seed (x) seed cases small enough for the three-site Yang-Baxter products
YBE_CASES = [("a2even", 1), ("a2even", 2), ("a2odd", 3), ("d2", 2)]

_REP_CACHE = {}


def seed_rep(family, l):
    key = (family, l)
    if key not in _REP_CACHE:
        _REP_CACHE[key] = qrep.build_seed_rep(liealg.family_spec(family, l))
    return _REP_CACHE[key]


@pytest.fixture(params=GRID, ids=lambda c: f"{c[0]}-l{c[1]}")
def grid_case(request):
    return request.param


@pytest.fixture(params=YBE_CASES, ids=lambda c: f"{c[0]}-l{c[1]}")
def ybe_case(request):
    return request.param


@pytest.fixture
def qs():
    return QSample(Q(3, 2))
