from math import gcd

import pytest

from absemigroup import (
    ConstraintViolated,
    GenusTooLarge,
    Kind,
    TooLarge,
    brute_force_enumerate,
    census_classify,
    classify,
    enumerate_containing,
    family_4_1,
    family_4_2,
    family_4_3,
    sg_from_gaps,
    sg_from_generators,
    sharp_semigroup_S,
    standing_hypotheses_check,
    two_gen_params,
    union_with,
)
from absemigroup.census import at_most_once_only, family_tag, trigonal_residue_report


def canon(sgs):
    return [H.canonical() for H in sgs]


def test_full_genus_is_the_base_only():
    p = two_gen_params(4, 9)
    for flag in (True, False):
        assert enumerate_containing(p, 12, flag) == [p.semigroup()]
    assert brute_force_enumerate(p, 12) == [p.semigroup()]


def test_one_promotion_4_9():
    p = two_gen_params(4, 9)
    found = enumerate_containing(p, 11, require_standing_hypotheses=False)
    assert canon(found) == canon(brute_force_enumerate(p, 11))
    promoted = sorted(set(p.semigroup().gaps) - set(H.gaps) for H in found)
    # a single gap x can be promoted only when x + 4 and x + 9 are already members
    assert [23] in [sorted(s) for s in promoted]
    assert [19] not in [sorted(s) for s in promoted]


def test_3_7_genus_4_matches_oracle():
    p = two_gen_params(3, 7)
    assert canon(enumerate_containing(p, 4, False)) == canon(brute_force_enumerate(p, 4))


def test_sharp_S_in_census():
    p = two_gen_params(4, 9)
    found = enumerate_containing(p, 9, True)
    assert sharp_semigroup_S(p) in found
    rows = census_classify(p, 9, True)
    sharp = [r for r in rows if r.family_tag == "SHARP_S"]
    assert len(sharp) == 1 and sharp[0].verdict.kind is Kind.KNOWN_MULTIPLE


def test_census_3_7():
    rows = census_classify(two_gen_params(3, 7), 6, True)
    assert len(rows) == 1
    assert rows[0].family_tag == "BASE"
    assert rows[0].verdict.kind is Kind.AT_MOST_ONCE


def test_errors():
    p = two_gen_params(4, 9)
    with pytest.raises(GenusTooLarge):
        enumerate_containing(p, 13)
    with pytest.raises(TooLarge):
        brute_force_enumerate(two_gen_params(7, 30), 50)


def test_hypothesis_filter():
    p = two_gen_params(4, 9)
    loose = enumerate_containing(p, 9, False)
    strict = enumerate_containing(p, 9, True)
    assert set(canon(strict)) <= set(canon(loose))
    for H in loose:
        hyp = standing_hypotheses_check(H)
        kept = (hyp.a, hyp.b) == (4, 9) and hyp.dim_condition_holds
        assert kept == (H in strict)


def test_output_sorted_and_unique():
    p = two_gen_params(5, 13)
    for g in range(18, 25):
        sgs = enumerate_containing(p, g, False)
        keys = [H.gaps for H in sgs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert all(H.genus == g for H in sgs)


def test_parallel_matches_serial():
    p = two_gen_params(5, 13)
    for g in (20, 22):
        assert canon(enumerate_containing(p, g, False, jobs=1)) == canon(enumerate_containing(p, g, False, jobs=4))


def test_family_4_1_examples():
    assert family_4_1(2, 0) == sg_from_generators((4, 9))
    assert family_4_1(2, 1) == union_with(sg_from_generators((4, 9)), {23})
    assert family_4_1(3, 2) == union_with(sg_from_generators((4, 13)), {31, 35})
    assert family_4_1(3, 2).genus == 16
    with pytest.raises(ConstraintViolated):
        family_4_1(2, 4)


def test_family_4_2_examples():
    H = family_4_2(4, 8, 8)
    extra = {5 * i + 3 for i in range(8, 13)} | {5 * i + 4 for i in range(8, 17)}
    assert H == union_with(sg_from_generators((5, 21)), extra)
    assert H.genus == 28
    assert family_4_2(5, 10, 9).genus > 0
    with pytest.raises(ConstraintViolated):
        family_4_2(4, 2, 8)


def test_family_4_3_examples():
    assert family_4_3(2).genus == 20
    H = family_4_3(4)
    assert H.genus == 50
    assert classify(H).kind is Kind.KNOWN_MULTIPLE


def test_family_round_trips():
    fams = [family_4_1(n, m) for n in range(2, 6) for m in range(2 * n)]
    fams += [family_4_3(n) for n in range(2, 9)]
    for n in range(4, 7):
        for m in range(0, 4 * n + 1):
            for mp in range(0, 3 * n + 1):
                try:
                    fams.append(family_4_2(n, m, mp))
                except ConstraintViolated:
                    pass
    for H in fams:
        assert sg_from_gaps(H.gaps) == H


def test_family_4_2_genus_stable():
    # genus is recorded, not assumed; it must depend only on the inputs
    first = {(n, m, mp): family_4_2(n, m, mp).genus for n, m, mp in [(4, 8, 8), (5, 10, 9), (4, 9, 9)]}
    again = {(n, m, mp): family_4_2(n, m, mp).genus for n, m, mp in first}
    assert first == again


def test_family_tags_rederivable():
    p = two_gen_params(4, 13)
    for g in range(12, 19):
        for row in census_classify(p, g, True):
            if row.family_tag is not None:
                assert family_tag(p, row.semigroup) == row.family_tag
            if row.family_tag == "EX_4_1":
                assert family_4_1(3, 18 - g) == row.semigroup


def test_trigonal_residues():
    rows = trigonal_residue_report(range(2, 6))
    for r in rows:
        if r["kind"] == "AtMostOnce":
            assert r["genusMod3"] == 0 and r["b"] % 3 == 1
        else:
            assert r["b"] % 3 == 2


def test_example_4_1_lower_range():
    # g = 6n-2 also classifies at most once for the two-element augmentation
    for n in range(2, 6):
        p = two_gen_params(4, 4 * n + 1)
        assert at_most_once_only(census_classify(p, 6 * n - 2, True))


@pytest.mark.parametrize("a", [3, 4, 5])
def test_oracle_small_grid(a):
    for b in range(a + 1, 14):
        if gcd(a, b) != 1:
            continue
        p = two_gen_params(a, b)
        for g in range(max(0, p.full_genus - 4), p.full_genus + 1):
            assert canon(enumerate_containing(p, g, False)) == canon(brute_force_enumerate(p, g))
