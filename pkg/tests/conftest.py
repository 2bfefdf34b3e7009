from fractions import Fraction

import pytest

from hamrep.repdata import IrreducibleSpec, RepData, from_sp_rep, sp_defining_rep, zero_rep


def sp_rep(m, mu=None):
    return from_sp_rep(IrreducibleSpec(m, sp_defining_rep(m), mu or (0,) * (2 * m)))


@pytest.fixture
def sp2():
    return sp_rep(1, (1, 0))


@pytest.fixture
def sp4():
    return sp_rep(2, (Fraction(1, 2),) * 4)


@pytest.fixture
def trivial1():
    return zero_rep(1, 1)


@pytest.fixture
def central():
    """P^(0) = Identity and nothing else: fails the Heisenberg relation."""
    return RepData(1, 2, {(0, 0): ((1, 0), (0, 1))})
