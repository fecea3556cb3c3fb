"""Constructions for a second point Q totally ramified on the same degree-a pencil.

Two things are computed here for a pair (a, b):

* the semigroup of Q when the genus is maximal, read off window by window
  from the member counts of <a; b> between consecutive multiples of a;
* the "trivial new non-gaps" i*b - m*a forced at Q by a (mu, a) cusp, and the
  semigroup S they span together with <a; b> when mu = a - r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .errors import NotCoprimeMu
from .semigroup import NumericalSemigroup, TwoGenParams, union_with


def n_of_m(m: int, a: int, mu: int) -> int:
    """The integer k with (k-1)*mu < m*a < k*mu."""
    if not 1 <= m <= mu - 1:
        raise ValueError(f"need 1 <= m <= mu - 1, got m={m}, mu={mu}")
    if gcd(a, mu) != 1:
        raise NotCoprimeMu(f"gcd({a}, {mu}) != 1")
    k = m * a // mu + 1
    assert (k - 1) * mu < m * a < k * mu
    return k


@dataclass(frozen=True, eq=False)
class TrivialNewNonGaps:
    params: TwoGenParams
    mu: int
    n_table: dict[int, int]
    array: np.ndarray  # sorted, read-only

    @cached_property
    def values(self) -> tuple[int, ...]:
        return tuple(self.array.tolist())

    @property
    def default_mu(self) -> bool:
        """True when mu = a - r, the only cusp type compatible with WS(P) = WS(Q)."""
        return self.mu == self.params.a - self.params.r

    @property
    def expected_count(self) -> int:
        return (self.params.a - 1) * (self.mu - 1) // 2


def trivial_new_nongaps(p: TwoGenParams, mu: int | None = None) -> TrivialNewNonGaps:
    a, b = p.a, p.b
    if mu is None:
        mu = a - p.r
    if not 1 <= mu < a or gcd(a, mu) != 1:
        raise NotCoprimeMu(f"need 1 <= mu < a and gcd(a, mu) = 1, got a={a}, mu={mu}")
    # n_of_m for every m at once
    ms = np.arange(1, mu, dtype=np.int64)[:, None]
    ks = ms * a // mu + 1
    assert ((ks - 1) * mu < ms * a).all() and (ms * a < ks * mu).all()
    table = dict(zip(range(1, mu), ks.ravel().tolist()))
    i = np.arange(a, dtype=np.int64)[None, :]
    raw = (i * b - ms * a)[i >= ks]
    uniq = np.unique(raw)
    # i*b - m*a = i'*b - m'*a forces a | (i - i'), impossible for distinct pairs
    assert len(uniq) == len(raw), f"colliding trivial non-gaps for a={a}, b={b}, mu={mu}"
    assert len(uniq) == (a - 1) * (mu - 1) // 2
    uniq.flags.writeable = False
    return TrivialNewNonGaps(p, mu, table, uniq)


def sharp_semigroup_S(p: TwoGenParams) -> NumericalSemigroup:
    """<a; b> together with the trivial new non-gaps of an (a - r, a) cusp."""
    tn = trivial_new_nongaps(p, p.a - p.r)
    S = union_with(p.semigroup(), tn.values)
    assert S.genus == p.sharp_genus, (p, S.genus)
    return S


@dataclass(frozen=True)
class WindowProfile:
    t: int
    s: int
    q_nongaps: tuple[int, ...]


def window_profiles(p: TwoGenParams) -> list[WindowProfile]:
    """Member counts of <a; b> inside (ta, (t+1)a) for t = 1 up to the window starting at the conductor."""
    H = p.semigroup()
    a = p.a
    out = []
    t = 1
    while t * a <= H.conductor:
        s = sum(1 for x in range(t * a + 1, (t + 1) * a) if x in H)
        out.append(WindowProfile(t, s, tuple(range((t + 1) * a - s, (t + 1) * a))))
        t += 1
    return out


def ws_of_Q_full_genus(p: TwoGenParams) -> NumericalSemigroup:
    """Semigroup of Q at genus (a-1)(b-1)/2: the top s slots of every window are members."""
    a = p.a
    profiles = window_profiles(p)
    top = (len(profiles) + 1) * a
    mem = np.zeros(top + 1, dtype=bool)
    mem[::a] = True
    for w in profiles:
        mem[list(w.q_nongaps)] = True
    mem[top:] = True
    Q = NumericalSemigroup._from_table(mem)
    assert Q.genus == p.full_genus, (p, Q.genus)
    return Q
