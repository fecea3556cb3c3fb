from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from absemigroup import (
    BNotLarger,
    NonCoprimeGenerators,
    NotClosed,
    NotCoprime,
    contains,
    parse_canonical,
    second_generator,
    sg_from_gaps,
    sg_from_generators,
    standing_hypotheses_check,
    two_gen_params,
    union_with,
)


def sieve(gens, limit):
    """Independent membership oracle: dynamic programming over [0, limit]."""
    mem = [False] * (limit + 1)
    mem[0] = True
    for x in range(1, limit + 1):
        mem[x] = any(x >= g and mem[x - g] for g in gens)
    return mem


def test_generators_hyperelliptic():
    H = sg_from_generators({2, 5})
    assert H.gaps == (1, 3)
    assert H.genus == 2
    assert H.conductor == 4
    assert H.frobenius == 3
    assert H.multiplicity == 2


def test_generators_4_9():
    H = sg_from_generators({4, 9})
    assert H.genus == 12
    assert H.gaps == (1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23)
    assert H.conductor == 24


def test_generators_not_coprime():
    with pytest.raises(NonCoprimeGenerators):
        sg_from_generators({4, 6})


def test_full_semigroup():
    H = sg_from_gaps([])
    assert H.genus == 0
    assert H.conductor == 0
    assert H.gaps == ()
    assert all(contains(H, x) for x in range(10))


def test_gaps_genus6_multiplicity3():
    H = sg_from_gaps({1, 2, 4, 5, 7, 10})
    assert H.genus == 6
    assert H.multiplicity == 3
    assert H.conductor == 11


def test_gaps_123_is_a_valid_semigroup():
    # {4,5,6,7,...} is closed, so this gap set is legitimate (see decisions ledger)
    H = sg_from_gaps({1, 2, 3})
    assert H == sg_from_generators({4, 5, 6, 7})
    assert H.genus == 3


def test_gaps_not_closed_witness():
    with pytest.raises(NotClosed) as info:
        sg_from_gaps({2})
    s, t = info.value.s, info.value.t
    assert s + t == 2 and s >= 1 and t >= 1


def test_contains_examples():
    H = sg_from_generators({4, 9})
    assert not contains(H, 14)
    assert contains(H, 24)
    assert contains(H, 0)
    assert contains(H, 10**6)


def test_two_gen_params_examples():
    p = two_gen_params(4, 9)
    assert (p.n, p.r, p.full_genus) == (2, 1, 12)
    p = two_gen_params(7, 8)
    assert (p.n, p.r) == (1, 1)
    p = two_gen_params(5, 13)
    assert (p.n, p.r, p.full_genus) == (2, 3, 24)


def test_two_gen_params_errors():
    with pytest.raises(NotCoprime):
        two_gen_params(4, 6)
    with pytest.raises(BNotLarger):
        two_gen_params(5, 3)
    with pytest.raises(BNotLarger):
        two_gen_params(5, 5)


def test_second_generator():
    H = sg_from_generators({4, 9})
    assert second_generator(H) == 9
    assert second_generator(union_with(H, {14, 19, 23})) == 9
    assert second_generator(sg_from_generators({2, 5})) == 5


def test_hypotheses_dim_condition():
    H = sg_from_generators({4, 9})
    hyp = standing_hypotheses_check(H)
    assert (hyp.a, hyp.b, hyp.n, hyp.r) == (4, 9, 2, 1)
    assert hyp.dim_condition_holds
    assert standing_hypotheses_check(union_with(H, {14, 19, 23})).dim_condition_holds
    # 9 and 10 both in (8, 12): closure of <4, 9, 10>
    bad = sg_from_generators({4, 9, 10})
    assert 10 in bad
    assert not standing_hypotheses_check(bad).dim_condition_holds


def test_union_examples():
    H = sg_from_generators({4, 9})
    assert union_with(H, {14, 19, 23}).genus == 9
    assert union_with(H, set()) == H
    with pytest.raises(NotClosed) as info:
        union_with(H, {14})
    assert {info.value.s, info.value.t} == {14, 9}


def test_canonical_round_trip():
    H = union_with(sg_from_generators({4, 9}), {14, 19, 23})
    text = H.canonical()
    assert text == "genus=9; gaps=1,2,3,5,6,7,10,11,15;"
    assert parse_canonical(text) == H
    assert sg_from_generators({1}).canonical() == "genus=0; gaps=;"


def test_membership_table_is_read_only():
    H = sg_from_generators({3, 5})
    with pytest.raises(ValueError):
        H.membership[1] = True


def test_genus_formula_all_pairs_to_60():
    for a in range(2, 60):
        for b in range(a + 1, 61):
            if gcd(a, b) == 1:
                assert sg_from_generators({a, b}).genus == (a - 1) * (b - 1) // 2


gen_sets = st.lists(st.integers(2, 25), min_size=1, max_size=4).map(lambda xs: sorted(set(xs)))


@settings(max_examples=150, deadline=None)
@given(gen_sets.filter(lambda xs: gcd(*xs) == 1 if len(xs) > 1 else False))
def test_generators_match_sieve(gens):
    H = sg_from_generators(gens)
    limit = H.conductor + 5
    mem = sieve(gens, limit)
    assert [x in H for x in range(limit + 1)] == mem


@settings(max_examples=150, deadline=None)
@given(gen_sets.filter(lambda xs: gcd(*xs) == 1 if len(xs) > 1 else False))
def test_gap_round_trip_and_closure(gens):
    H = sg_from_generators(gens)
    assert sg_from_gaps(H.gaps) == H
    members = H.members_below(H.conductor + 1)
    for s in members:
        for t in members:
            assert contains(H, s + t)
    assert H.genus == len(H.gaps)
    if H.genus:
        assert H.frobenius == H.conductor - 1 == max(H.gaps)


@settings(max_examples=200, deadline=None)
@given(st.frozensets(st.integers(1, 20), max_size=10))
def test_gap_validation_agrees_with_pairwise_scan(gapset):
    top = max(gapset, default=0)
    members = [x for x in range(top + 1) if x not in gapset]
    closed = all(s + t > top or s + t not in gapset for s in members for t in members)
    if closed:
        assert sg_from_gaps(gapset).gaps == tuple(sorted(gapset))
    else:
        with pytest.raises(NotClosed) as info:
            sg_from_gaps(gapset)
        s, t = info.value.s, info.value.t
        assert s not in gapset and t not in gapset and s + t in gapset


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.integers(3, 200))
def test_params_division(a, b):
    if b <= a or gcd(a, b) != 1:
        return
    p = two_gen_params(a, b)
    assert p.n == b // a and p.r == b % a
    assert p.b == p.n * p.a + p.r
