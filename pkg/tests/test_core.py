from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symtor.core import (
    INF,
    cap,
    contains,
    contains_multidegree,
    dominates,
    ell,
    format_extended,
    multiset_permutations,
    new_sym_ideal,
    p_vector,
    pad,
    parse_entry,
    part_of,
    partitions_below,
    plain_contains,
    plus,
    rearrangement_count,
    remove_columns,
    shape_data,
    tilde,
    unsymmetrize,
)

multidegrees = st.lists(st.integers(0, 6), min_size=1, max_size=6)


def test_part_of_examples():
    assert part_of((2, 1, 3, 2)) == (3, 2, 2, 1)
    assert part_of((0, 0, 0)) == (0, 0, 0)
    assert part_of((1, 5, 5)) == (5, 5, 1)


@given(multidegrees, st.randoms())
def test_part_of_idempotent_and_permutation_invariant(a, rnd):
    shuffled = list(a)
    rnd.shuffle(shuffled)
    assert part_of(part_of(a)) == part_of(a) == part_of(shuffled)


def test_dominates():
    assert dominates((5, 2, 1), (4, 1, 1))
    assert not dominates((4, 4, 0), (4, 1, 1))
    assert dominates((3, 2), (3, 2))
    with pytest.raises(ValueError):
        dominates((1, 2), (1, 2, 3))


def test_shape_data():
    sd = shape_data((5, 5, 3, 3, 2, 2))
    assert sd.distinct_parts == (5, 3, 2)
    assert sd.multiplicities == (2, 2, 2)
    assert sd.zero_count == 0 and sd.s == 3
    zero = shape_data((0, 0, 0))
    assert zero.s == 0 and zero.multiplicities == () and zero.zero_count == 3
    assert shape_data((5, 2, 1)).multiplicities == (1, 1, 1)


def test_p_vector():
    assert p_vector((5, 5, 3, 3, 2, 2)) == (1, 1, 1)
    assert p_vector((5, 2, 1)) == (0, 0, 0)
    assert p_vector((3, 3, 3, 3)) == (3,)


def test_remove_columns():
    assert remove_columns((5, 5, 3, 3, 2, 2), (1, 2, 1)) == (5, 4, 2, 2, 2, 1)
    assert remove_columns((4, 4, 1), (0, 0)) == (4, 4, 1)
    assert remove_columns((5, 2, 1), (1, 1, 1)) == (4, 1, 0)
    with pytest.raises(ValueError):
        remove_columns((5, 2, 1), (2, 0, 0))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=6), st.data())
def test_remove_columns_size_and_order(a, data):
    mu = part_of(a)
    p = shape_data(mu).multiplicities
    c = tuple(data.draw(st.integers(0, pk)) for pk in p)
    out = remove_columns(mu, c)
    assert dominates(mu, out)
    assert sum(out) == sum(mu) - sum(c)


def test_rearrangement_count():
    assert rearrangement_count((5, 2, 1)) == 6
    assert rearrangement_count((4, 4, 1)) == 3
    assert rearrangement_count((0, 0, 0)) == 1


def test_monomial_count_by_orbits():
    # monomials of degree d in n variables, grouped by orbit
    for n in range(1, 5):
        for d in range(6):
            total = sum(rearrangement_count(mu) for mu in partitions_below((d,) * n) if sum(mu) == d)
            assert total == comb(n + d - 1, d)


def test_multiset_permutations_distinct():
    perms = list(multiset_permutations((2, 1, 1)))
    assert sorted(perms) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_pad():
    assert pad((3, 1), 4) == (3, 1, 0, 0)
    with pytest.raises(ValueError):
        pad((3, 1, 1), 2)


def test_infinity_ordering():
    assert INF > 10**9 and not INF < 5 and INF == INF
    assert sorted([1, INF, 0], reverse=True) == [INF, 1, 0]


def test_ell_tilde_plus_cap():
    assert ell((INF, 1, 0)) == 1
    assert ell((3, 3, 3)) == 0
    assert ell((INF, INF, INF)) == 3
    assert tilde((3, 3, 3)) == (4, 4, 4)
    assert tilde((4, 4, 0)) == (5, 5, 1)
    assert tilde((INF, 1, 0)) == (2, 2, 1)
    assert plus((INF, 1, 0)) == (2, 1, 0)
    assert plus((3, 3, 3)) == (3, 3, 3)
    assert plus((INF, INF, 2)) == (3, 3, 2)
    assert cap((INF, 1, 0), 5) == (5, 1, 0)
    assert cap((3, 3, 3), 5) == (3, 3, 3)
    assert cap((INF, INF, 2), 3) == (3, 3, 2)
    with pytest.raises(ValueError):
        tilde((INF, INF))
    with pytest.raises(ValueError):
        plus((INF, INF))


@given(st.integers(0, 3), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_plus_tilde_size_identity(infs, finite):
    rho = (INF,) * infs + part_of(finite)
    n = len(rho)
    assert sum(plus(rho)) == sum(tilde(rho)) - (n - ell(rho))


def test_extended_serialization():
    assert format_extended((INF, 1, 0)) == ["inf", 1, 0]
    assert parse_entry("inf") is INF and parse_entry(3) == 3


def test_new_sym_ideal():
    ideal = new_sym_ideal(3, [(4, 1, 1), (5, 2, 0)])
    assert set(ideal.min_gens) == {(4, 1, 1), (5, 2, 0)}
    assert new_sym_ideal(3, [(1, 0, 0), (2, 1, 0)]).min_gens == ((1, 0, 0),)
    assert new_sym_ideal(3, []).is_zero
    with pytest.raises(ValueError):
        new_sym_ideal(3, [(1, 2)])
    with pytest.raises(ValueError):
        new_sym_ideal(2, [(1, 2)])


def test_contains(worked_ideal):
    assert contains(worked_ideal, (4, 1, 1))
    assert not contains(worked_ideal, (4, 4, 0))
    assert not contains(worked_ideal, (4, 1, 0))
    assert contains_multidegree(worked_ideal, (1, 4, 1))
    assert not contains_multidegree(worked_ideal, (0, 0, 0))
    assert contains_multidegree(worked_ideal, (5, 2, 1))
    with pytest.raises(ValueError):
        contains(worked_ideal, (4, 1))


@given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_contains_upward_closed(lam, bump):
    ideal = new_sym_ideal(3, [(4, 1, 1), (5, 2, 0), (3, 3, 0)])
    lam = part_of(lam)
    higher = part_of(x + y for x, y in zip(lam, sorted(bump, reverse=True)))
    if contains(ideal, lam):
        assert contains(ideal, higher)


@given(st.lists(st.integers(0, 5), min_size=3, max_size=3), st.randoms())
def test_contains_multidegree_symmetric(a, rnd):
    ideal = new_sym_ideal(3, [(4, 1, 1), (5, 2, 0)])
    b = list(a)
    rnd.shuffle(b)
    assert contains_multidegree(ideal, a) == contains_multidegree(ideal, b)


def test_unsymmetrize_and_plain_contains():
    j = unsymmetrize([(4, 1, 1), (5, 2, 0)])
    assert set(j.gens) == {(4, 1, 1), (5, 2, 0)}
    assert plain_contains(j, (5, 2, 1))
    assert not plain_contains(j, (1, 4, 1))
    unit = unsymmetrize([(0, 0, 0)])
    assert plain_contains(unit, (0, 0, 0)) and plain_contains(unit, (3, 0, 1))
    assert unsymmetrize([(1, 0), (1, 1)]).gens == ((1, 0),)
