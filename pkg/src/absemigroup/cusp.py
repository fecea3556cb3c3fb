"""Delta invariants of coprime (nu, mu) cusps.

The multiplicity sequence of the resolution is the remainder sequence of the
Euclidean algorithm on (mu, nu): c1 = mu, c2 = nu, c_{i-1} = n_i c_i + c_{i+1},
ending at 1. There are n_i infinitely near points of multiplicity c_i, so the
delta invariant is sum n_i c_i (c_i - 1) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonIntegral, NotCoprimeMu, SemigroupError
from .semigroup import TwoGenParams


@dataclass(frozen=True)
class CuspType:
    nu: int
    mu: int

    def __post_init__(self):
        if self.nu < 2 or self.mu <= self.nu:
            raise SemigroupError(f"cusp type needs 2 <= nu < mu, got ({self.nu}, {self.mu})")
        if gcd(self.nu, self.mu) != 1:
            raise SemigroupError(f"only coprime cusp types are supported, got ({self.nu}, {self.mu})")


@dataclass(frozen=True)
class MultiplicitySequence:
    cs: tuple[int, ...]
    ns: tuple[int, ...]
    delta: int


def euclid_sequence(c: CuspType) -> MultiplicitySequence:
    cs = [c.mu, c.nu]
    ns = []
    while cs[-1] != 1:
        q, rem = divmod(cs[-2], cs[-1])
        ns.append(q)
        cs.append(rem)
    # ns[j] pairs with cs[j + 1]
    delta = sum(n * ci * (ci - 1) for n, ci in zip(ns, cs[1:])) // 2
    return MultiplicitySequence(tuple(cs), tuple(ns), delta)


def delta_closed(c: CuspType) -> int:
    return (c.nu - 1) * (c.mu - 1) // 2


def max_genus_with_cusp(p: TwoGenParams, mu: int) -> int:
    """Genus bound (a-1)(b-mu)/2 for a degree-b plane model with an extra (mu, a) cusp."""
    if not 1 <= mu < p.a or gcd(p.a, mu) != 1:
        raise NotCoprimeMu(f"need 1 <= mu < a and gcd(a, mu) = 1, got a={p.a}, mu={mu}")
    twice = (p.a - 1) * (p.b - mu)
    if twice % 2:
        raise NonIntegral(f"(a-1)(b-mu) = {twice} is odd")
    return twice // 2
