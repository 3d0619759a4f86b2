import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pennant_webs.errors import InconsistentRolesError, InvalidInputError
from pennant_webs.setpartitions import (
    Permutation,
    SetPartition,
    apply_perm,
    crosses,
    enumerate_partitions,
    is_noncrossing,
    noncrossing_completion,
    noncrossing_singleton_free,
    reflect,
    roles,
    rotate,
    singleton_free,
)

P = SetPartition.parse
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------- permutations


def test_permutation_basics():
    w = Permutation([2, 3, 1])
    assert w(1) == 2 and w.inverse() == Permutation([3, 1, 2])
    assert w * w.inverse() == Permutation.identity(3)
    assert w ** 3 == Permutation.identity(3) and w ** -1 == w.inverse()
    assert Permutation.long_cycle(4) == (4, 1, 2, 3)
    assert Permutation.longest(4) == (4, 3, 2, 1)
    assert Permutation.simple(2, 4) == (1, 3, 2, 4)
    assert Permutation.parse("3,1,2").to_text() == "3,1,2"


def test_permutation_sign_is_multiplicative():
    for a in itertools.permutations(range(1, 5)):
        for b in [(2, 1, 3, 4), (4, 1, 2, 3), (1, 3, 4, 2)]:
            wa, wb = Permutation(a), Permutation(b)
            assert (wa * wb).sign() == wa.sign() * wb.sign()


def test_permutation_rejects_garbage():
    with pytest.raises(InvalidInputError):
        Permutation([1, 1, 2])
    with pytest.raises(InvalidInputError):
        Permutation.simple(4, 4)
    with pytest.raises(InvalidInputError):
        Permutation.parse("1,x")


# ---------------------------------------------------------------- partitions


def test_canonical_block_order_and_text():
    pi = P("5,7,8,9|2,3,6,10|1,4")
    assert pi.blocks == ((1, 4), (2, 3, 6, 10), (5, 7, 8, 9))
    assert pi.to_text() == "1,4|2,3,6,10|5,7,8,9"
    assert str(P("3,4|1,2")) == "{{1,2}, {3,4}}"
    assert P(pi.to_text()) == pi


def test_invalid_partitions():
    with pytest.raises(InvalidInputError):
        P("1,2|2,3")
    with pytest.raises(InvalidInputError):
        P("1,2|4")
    with pytest.raises(InvalidInputError):
        P("1,2", n=3)
    with pytest.raises(InvalidInputError):
        P("a|b")


def test_singleton_flag():
    assert P("1|2,3").has_singleton
    assert not P("1,3|2,4").has_singleton


@pytest.mark.parametrize("n", range(1, 9))
def test_partition_counts_are_bell_numbers(n):
    parts = enumerate_partitions(n)
    assert len(parts) == BELL[n] == len(set(parts))


def test_enumeration_needs_positive_n():
    with pytest.raises(InvalidInputError):
        enumerate_partitions(0)


@pytest.mark.parametrize("n", range(1, 10))
def test_noncrossing_counts_are_catalan(n):
    nc = enumerate_partitions(n, noncrossing_only=True)
    assert len(nc) == catalan(n)
    assert set(nc) == {pi for pi in enumerate_partitions(n) if is_noncrossing(pi)}


def test_small_family_sizes():
    assert len(noncrossing_singleton_free(6, 3)) == 5
    assert len(noncrossing_singleton_free(6, 2)) == 9
    assert len(singleton_free(4, 2)) == 3
    assert noncrossing_singleton_free(4, 2) == [P("1,2|3,4"), P("1,4|2,3")]


def test_crossing_examples():
    assert is_noncrossing(P("1,2,3,6,10|4,5|7,8,9"))
    assert not is_noncrossing(P("1,3|2,4"))
    assert all(is_noncrossing(SetPartition.of([range(1, n + 1)])) for n in range(1, 8))
    assert crosses((1, 3), (2, 4)) and not crosses((1, 4), (2, 3))


# ---------------------------------------------------------------- relabelings


def test_rotate_and_reflect_examples():
    assert rotate(P("1,2|3,4")) == P("1,4|2,3")
    assert reflect(P("1,2|3,4")) == P("1,2|3,4")
    assert apply_perm(Permutation.simple(1, 4), P("1,3|2,4")) == P("2,3|1,4")


@pytest.mark.parametrize("n", range(1, 8))
def test_relabelings_agree_with_permutations(n):
    c, w0 = Permutation.long_cycle(n), Permutation.longest(n)
    for pi in enumerate_partitions(n):
        assert apply_perm(c, pi) == rotate(pi)
        assert apply_perm(w0, pi) == reflect(pi)
        assert rotate(pi, n) == pi
        assert reflect(reflect(pi)) == pi
        assert is_noncrossing(rotate(pi)) == is_noncrossing(pi)


def test_rotate_n_is_identity_up_to_8():
    for n in range(1, 9):
        for pi in enumerate_partitions(n, noncrossing_only=n == 8):
            assert rotate(pi, n) == pi


def test_rotate_by_k_composes():
    pi = P("1,2,3,6,10|4,5|7,8,9")
    assert rotate(pi, 3) == rotate(rotate(rotate(pi)))
    assert rotate(pi, -1) == rotate(pi, 9)


# ---------------------------------------------------------------- roles and completion


def test_completion_examples():
    assert noncrossing_completion({1, 4, 7}, {5, 9, 10}, {2, 3, 6, 8}) == P("1,2,3,6,10|4,5|7,8,9")
    assert noncrossing_completion({1}, {2}, set()) == P("1,2")
    assert noncrossing_completion({1, 2}, {3, 4}, set()) == P("1,4|2,3")


def test_completion_rejects_inconsistent_roles():
    with pytest.raises(InconsistentRolesError):
        noncrossing_completion({2}, {1}, set())
    with pytest.raises(InconsistentRolesError):
        noncrossing_completion({1, 2}, {3}, set())
    with pytest.raises(InconsistentRolesError):
        noncrossing_completion({1}, {1, 2}, set())


@given(st.integers(2, 9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n, no_singletons=True, noncrossing_only=True))))
@settings(max_examples=80, deadline=None)
def test_roles_then_completion_recovers_noncrossing(pi):
    assert noncrossing_completion(*roles(pi)) == pi
