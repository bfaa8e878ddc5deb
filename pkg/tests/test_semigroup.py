import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiwilson.semigroup import (
    Automorphism,
    FiniteSemigroup,
    IndexOutOfRange,
    LimitExceeded,
    NotAnAutomorphism,
    NotAssociative,
    canonical_table,
    central_witness,
    enumerate_automorphisms,
    enumerate_semigroups,
    identity_automorphism,
    is_abelian,
    is_central,
    is_ideal,
    is_subsemigroup,
    product_set,
)

from conftest import C2, C3, NULL2, ONE_P_ZERO, ONE_PQ_ZERO


def brute_tables(n):
    """Every associative table of order n by exhaustive search."""
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if all(t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n)):
            out.append(tuple(tuple(r) for r in t))
    return out


def brute_iso_classes(tables):
    n = len(tables[0])
    seen = set()
    for t in tables:
        key = min(
            tuple(tuple(p[t[q.index(x)][q.index(y)]] for y in range(n)) for x in range(n))
            for p in itertools.permutations(range(n))
            for q in [list(p)]
        )
        seen.add(key)
    return seen


def test_validation():
    with pytest.raises(NotAssociative) as exc:
        FiniteSemigroup([[0, 0], [1, 0]])
    assert exc.value.triple == (1, 0, 1)
    with pytest.raises(IndexOutOfRange):
        FiniteSemigroup([[0, 2], [1, 0]])
    with pytest.raises(IndexOutOfRange):
        FiniteSemigroup([[0, 1], [1]])
    with pytest.raises(IndexOutOfRange):
        FiniteSemigroup([])
    S = FiniteSemigroup(C3)
    assert S.product(1, 1, 1) == 0
    assert S.is_commutative()


def test_periods():
    assert FiniteSemigroup(C3).exponent == 3
    assert FiniteSemigroup(NULL2).exponent == 1
    S = FiniteSemigroup(ONE_P_ZERO)
    assert [S.period(x) for x in S.elements] == [1, 1, 1]
    # left-zero band
    assert FiniteSemigroup([[0, 0], [1, 1]]).period(1) == 1


@pytest.mark.parametrize("n, labeled, classes", [(1, 1, 1), (2, 8, 5), (3, 113, 24)])
def test_enumeration_matches_exhaustive_search(n, labeled, classes):
    brute = brute_tables(n)
    assert len(brute) == labeled
    ours = [S.table for S in enumerate_semigroups(n)]
    assert ours == sorted(brute)
    collapsed = [S.table for S in enumerate_semigroups(n, collapse=True)]
    assert len(collapsed) == len(brute_iso_classes(brute)) == classes


def test_order_four_counts():
    labeled = sum(1 for _ in enumerate_semigroups(4))
    assert labeled == 3492
    classes = list(enumerate_semigroups(4, collapse=True))
    assert len(classes) == 188
    # orbit-stabilizer recovers the labeled count from the representatives
    assert sum(math.factorial(4) // len(enumerate_automorphisms(S)) for S in classes) == 3492


def test_limits():
    with pytest.raises(LimitExceeded):
        next(enumerate_semigroups(5))
    with pytest.raises(ValueError):
        next(enumerate_semigroups(0))


def test_canonical_is_relabeling_invariant():
    t = FiniteSemigroup(ONE_PQ_ZERO)
    for perm in itertools.permutations(range(4)):
        assert canonical_table(t.relabel(perm).table) == canonical_table(t.table)


def test_automorphisms():
    c3 = FiniteSemigroup(C3)
    assert [a.perm for a in enumerate_automorphisms(c3)] == [(0, 1, 2), (0, 2, 1)]
    pq = FiniteSemigroup(ONE_PQ_ZERO)
    assert [a.perm for a in enumerate_automorphisms(pq)] == [(0, 1, 2, 3), (0, 2, 1, 3)]
    with pytest.raises(NotAnAutomorphism):
        Automorphism(c3, (1, 0, 2))
    with pytest.raises(NotAnAutomorphism):
        Automorphism(c3, (0, 0, 1))
    s = Automorphism(c3, (0, 2, 1))
    assert s.power(2).is_identity()
    assert s.inverse() == s
    assert s.image({1}) == frozenset({2})


@pytest.mark.parametrize("table", [C2, C3, NULL2, ONE_P_ZERO, ONE_PQ_ZERO, [[0, 0], [1, 1]]])
def test_automorphisms_form_a_group(table):
    S = FiniteSemigroup(table)
    auts = enumerate_automorphisms(S)
    perms = {a.perm for a in auts}
    assert identity_automorphism(S).perm in perms
    for a in auts:
        assert a.inverse().perm in perms
        for b in auts:
            assert a.compose(b).perm in perms


def test_subset_algebra():
    S = FiniteSemigroup(ONE_PQ_ZERO)
    assert product_set(S, {1, 2}) == frozenset({3})
    assert product_set(S, {0, 1}) == frozenset({0, 1, 3})
    assert product_set(S, set()) == frozenset()
    assert is_ideal(S, {1, 2, 3})
    assert is_ideal(S, {3})
    assert not is_ideal(S, {0, 3})
    assert is_subsemigroup(S, {0, 3})
    assert not is_subsemigroup(S, {0, 1})


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(0, 3)), st.sets(st.integers(0, 3)))
def test_product_set_monotone(a, b):
    S = FiniteSemigroup(ONE_PQ_ZERO)
    assert product_set(S, a) <= product_set(S, a | b)


def test_central_and_abelian():
    left_zero = FiniteSemigroup([[0, 0], [1, 1]])
    assert not is_central(left_zero, [1, 2])
    assert central_witness(left_zero, [1, 2]) == (0, 1)
    assert is_abelian(left_zero, [5, 5])
    S = FiniteSemigroup(C3)
    assert is_abelian(S, [1, 2, 3])
    assert central_witness(S, [1, 2, 3]) is None
