from __future__ import annotations

import pytest

from semiwilson.characters import ComplexMap, WilsonContext
from semiwilson.cyclotomic import ONE, root_of_unity
from semiwilson.semigroup import Automorphism, FiniteSemigroup, identity_automorphism

# element labels: identity first, absorbing zero last
NULL2 = [[0, 0], [0, 0]]
C2 = [[0, 1], [1, 0]]
C3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
ONE_P_ZERO = [[0, 1, 2], [1, 2, 2], [2, 2, 2]]
ONE_PQ_ZERO = [[0, 1, 2, 3], [1, 3, 3, 3], [2, 3, 3, 3], [3, 3, 3, 3]]


def ones(n: int) -> ComplexMap:
    return ComplexMap([ONE] * n)


def trivial_context(table) -> WilsonContext:
    S = FiniteSemigroup(table)
    return WilsonContext(S, identity_automorphism(S), ones(S.order))


@pytest.fixture
def null2():
    return FiniteSemigroup(NULL2)


@pytest.fixture
def c2():
    return FiniteSemigroup(C2)


@pytest.fixture
def c3():
    return FiniteSemigroup(C3)


@pytest.fixture
def one_p_zero():
    return FiniteSemigroup(ONE_P_ZERO)


@pytest.fixture
def one_pq_zero():
    return FiniteSemigroup(ONE_PQ_ZERO)


@pytest.fixture
def omega():
    return root_of_unity(1, 3)


@pytest.fixture
def c3_ctx(c3):
    return WilsonContext(c3, Automorphism(c3, (0, 2, 1)), ones(3))


@pytest.fixture
def c3_chi(omega):
    return ComplexMap([ONE, omega, omega * omega])


@pytest.fixture
def pq_ctx(one_pq_zero):
    return WilsonContext(one_pq_zero, Automorphism(one_pq_zero, (0, 2, 1, 3)), ones(4))


@pytest.fixture
def pq_chi():
    return ComplexMap([1, 0, 0, 0])
