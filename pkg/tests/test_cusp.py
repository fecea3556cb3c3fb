from math import gcd

import pytest
from hypothesis import given, strategies as st

from absemigroup import (
    CuspType,
    NotCoprimeMu,
    delta_closed,
    euclid_sequence,
    max_genus_with_cusp,
    sg_from_generators,
    two_gen_params,
)


@pytest.mark.parametrize(
    "nu, mu, cs, ns, delta",
    [(2, 3, [3, 2, 1], [1], 1), (4, 9, [9, 4, 1], [2], 12), (3, 4, [4, 3, 1], [1], 3)],
)
def test_euclid_examples(nu, mu, cs, ns, delta):
    seq = euclid_sequence(CuspType(nu, mu))
    assert list(seq.cs) == cs
    assert list(seq.ns) == ns
    assert seq.delta == delta


def test_longer_sequence():
    # 13 = 1*8 + 5, 8 = 1*5 + 3, 5 = 1*3 + 2, 3 = 1*2 + 1
    seq = euclid_sequence(CuspType(8, 13))
    assert list(seq.cs) == [13, 8, 5, 3, 2, 1]
    assert list(seq.ns) == [1, 1, 1, 1]
    assert seq.delta == delta_closed(CuspType(8, 13)) == 42


def test_delta_closed_examples():
    assert delta_closed(CuspType(2, 3)) == 1
    assert delta_closed(CuspType(4, 9)) == 12
    for g in range(1, 15):
        assert delta_closed(CuspType(2, 2 * g + 1)) == g


@pytest.mark.parametrize("nu, mu", [(1, 3), (3, 3), (5, 4), (4, 6)])
def test_cusp_type_rejects(nu, mu):
    with pytest.raises(ValueError):
        CuspType(nu, mu)


def test_max_genus_with_cusp():
    assert max_genus_with_cusp(two_gen_params(4, 9), 3) == 9
    assert max_genus_with_cusp(two_gen_params(5, 11), 4) == 14
    assert max_genus_with_cusp(two_gen_params(6, 13), 5) == 20
    with pytest.raises(NotCoprimeMu):
        max_genus_with_cusp(two_gen_params(4, 9), 2)


def test_max_genus_never_fractional_for_valid_input():
    # a even forces b and mu odd, so (a-1)(b-mu) is always even
    for a in range(2, 25):
        for b in range(a + 1, 6 * a):
            if gcd(a, b) != 1:
                continue
            p = two_gen_params(a, b)
            for mu in range(1, a):
                if gcd(a, mu) == 1:
                    assert max_genus_with_cusp(p, mu) == (a - 1) * (b - mu) // 2


@given(st.integers(2, 120), st.integers(3, 200))
def test_recursion_matches_closed_form_and_semigroup(nu, mu):
    if mu <= nu or gcd(nu, mu) != 1:
        return
    c = CuspType(nu, mu)
    seq = euclid_sequence(c)
    assert seq.cs[0] == mu and seq.cs[1] == nu and seq.cs[-1] == 1
    assert all(x > y for x, y in zip(seq.cs, seq.cs[1:]))
    for i, q in enumerate(seq.ns):
        assert seq.cs[i] == q * seq.cs[i + 1] + seq.cs[i + 2]
        assert 1 <= seq.cs[i + 2] < seq.cs[i + 1]
    assert seq.delta == delta_closed(c) == sg_from_generators((nu, mu)).genus
