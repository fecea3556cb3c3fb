"""Numerical semigroups stored as a membership table up to the conductor.

A numerical semigroup H is a subset of the non-negative integers that
contains 0, is closed under addition and has a finite complement (the gaps).
Every x >= conductor is a member, so the table ``membership[0..conductor]``
holds all the information.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

import numpy as np

from .errors import (
    BNotLarger,
    NonCoprimeGenerators,
    NotClosed,
    NotCoprime,
    SemigroupError,
)


def _closure_witness(mem: np.ndarray) -> tuple[int, int] | None:
    """Return a pair of members whose sum is a gap, or None if ``mem`` is closed.

    ``mem[c]`` is the conductor entry (always True). Only members that are not
    already sums of previously checked members need a scan: if H + s and H + t
    lie in H then so does H + (s + t).
    """
    c = len(mem) - 1
    reach = np.zeros(c + 1, dtype=bool)
    reach[0] = True
    for s in (np.flatnonzero(mem[1:c]) + 1).tolist():
        if reach[s]:
            continue
        bad = np.flatnonzero(mem[: c - s] & ~mem[s:c])
        if bad.size:
            t = int(bad[0])
            return (max(s, t), min(s, t))
        for k in range(s, c + 1, s):
            hi = min(k + s, c + 1)
            reach[k:hi] |= reach[k - s : hi - s]
    return None


class NumericalSemigroup:
    """Immutable numerical semigroup.

    Build instances with :func:`sg_from_generators`, :func:`sg_from_gaps`
    or :func:`union_with`; the constructor assumes a valid, trimmed table.
    """

    def __init__(self, membership: np.ndarray):
        mem = np.array(membership, dtype=bool)
        mem.setflags(write=False)
        self._mem = mem
        gaps = np.flatnonzero(~mem)
        gaps.setflags(write=False)
        self._gaps = gaps

    @classmethod
    def _from_table(cls, mem: np.ndarray, validate: bool = True) -> "NumericalSemigroup":
        mem = np.asarray(mem, dtype=bool)
        if not mem[0]:
            raise SemigroupError("0 must be a member")
        # trim to the conductor
        nonmembers = np.flatnonzero(~mem)
        c = int(nonmembers[-1]) + 1 if nonmembers.size else 0
        table = np.ones(c + 1, dtype=bool)
        table[:c] = mem[:c]
        if validate:
            w = _closure_witness(table)
            if w is not None:
                raise NotClosed(*w)
        return cls(table)

    # -- basic statistics ------------------------------------------------
    @property
    def membership(self) -> np.ndarray:
        """Read-only boolean table over [0, conductor]."""
        return self._mem

    @property
    def conductor(self) -> int:
        return len(self._mem) - 1

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the full semigroup."""
        return self.conductor - 1

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(self._gaps.tolist())

    @property
    def gap_array(self) -> np.ndarray:
        return self._gaps

    @property
    def genus(self) -> int:
        return int(self._gaps.size)

    @cached_property
    def multiplicity(self) -> int:
        if self.conductor == 0:
            return 1
        return int(np.flatnonzero(self._mem[1:])[0]) + 1

    def members_below(self, x: int) -> list[int]:
        """Members strictly less than ``x``."""
        if x <= self.conductor + 1:
            return np.flatnonzero(self._mem[: max(x, 0)]).tolist()
        return np.flatnonzero(self._mem).tolist() + list(range(self.conductor + 1, x))

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or bool(self._mem[x])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return np.array_equal(self._mem, other._mem)

    def __hash__(self) -> int:
        return hash(self._mem.tobytes())

    def canonical(self) -> str:
        return f"genus={self.genus}; gaps={','.join(map(str, self.gaps))};"

    def __repr__(self) -> str:
        if self.genus > 12:
            head = ",".join(map(str, self.gaps[:12]))
            return f"NumericalSemigroup(genus={self.genus}, gaps={head},...)"
        return f"NumericalSemigroup({self.canonical()})"


def contains(H: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        raise ValueError("x must be non-negative")
    return x in H


def parse_canonical(text: str) -> NumericalSemigroup:
    """Inverse of :meth:`NumericalSemigroup.canonical`; the result is validated."""
    fields = {}
    for part in text.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    if "gaps" not in fields:
        raise SemigroupError(f"not a canonical semigroup string: {text!r}")
    gaps = [int(x) for x in fields["gaps"].split(",") if x.strip()]
    H = sg_from_gaps(gaps)
    if "genus" in fields and int(fields["genus"]) != H.genus:
        raise SemigroupError(f"genus field {fields['genus']} disagrees with {H.genus} gaps")
    return H


def sg_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Semigroup generated by ``gens``; they must have gcd 1.

    Uses the Apery set with respect to the smallest generator m: ``w[i]`` is
    the least member congruent to i mod m, found by a shortest-path search.
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise SemigroupError("generators must be a nonempty set of positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NonCoprimeGenerators(f"gcd{tuple(gens)} = {g}")
    m = gens[0]
    if m == 1:
        return NumericalSemigroup(np.ones(1, dtype=bool))
    w = [-1] * m
    heap = [(0, 0)]
    while heap:
        d, i = heapq.heappop(heap)
        if w[i] >= 0:
            continue
        w[i] = d
        for x in gens[1:]:
            j = (i + x) % m
            if w[j] < 0:
                heapq.heappush(heap, (d + x, j))
    wa = np.array(w, dtype=np.int64)
    c = int(wa.max()) - m + 1
    xs = np.arange(c + 1, dtype=np.int64)
    return NumericalSemigroup(xs >= wa[xs % m])


def sg_from_gaps(gapset: Iterable[int]) -> NumericalSemigroup:
    gaps = sorted(set(int(x) for x in gapset))
    if gaps and gaps[0] <= 0:
        raise SemigroupError("gaps must be positive integers")
    c = gaps[-1] + 1 if gaps else 0
    mem = np.ones(c + 1, dtype=bool)
    mem[gaps] = False
    return NumericalSemigroup._from_table(mem)


def union_with(H: NumericalSemigroup, extra: Iterable[int]) -> NumericalSemigroup:
    extra = [int(x) for x in extra]
    if any(x < 0 for x in extra):
        raise SemigroupError("extra members must be non-negative")
    mem = H.membership.copy()
    inside = [x for x in extra if x <= H.conductor]
    mem[inside] = True
    if len(inside) == 0:
        return H
    return NumericalSemigroup._from_table(mem)


@dataclass(frozen=True)
class TwoGenParams:
    """b = n*a + r with 0 < r < a and gcd(a, b) = 1."""

    a: int
    b: int
    n: int
    r: int

    def __post_init__(self):
        if self.a < 2:
            raise SemigroupError(f"a must be at least 2, got {self.a}")
        if self.b <= self.a:
            raise BNotLarger(f"b={self.b} must exceed a={self.a}")
        if gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) = {gcd(self.a, self.b)}")
        if self.b != self.n * self.a + self.r or not 0 < self.r < self.a or self.n < 1:
            raise SemigroupError(f"inconsistent decomposition {self}")

    @property
    def full_genus(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2

    @property
    def sharp_genus(self) -> int:
        """(a-1)(b-a+r)/2, the genus threshold for a second point on the same pencil."""
        return (self.a - 1) * (self.b - self.a + self.r) // 2

    def semigroup(self) -> NumericalSemigroup:
        return sg_from_generators((self.a, self.b))


def two_gen_params(a: int, b: int) -> TwoGenParams:
    if a < 2:
        raise SemigroupError(f"a must be at least 2, got {a}")
    if b <= a:
        raise BNotLarger(f"b={b} must exceed a={a}")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    n, r = divmod(b, a)
    return TwoGenParams(a, b, n, r)


def second_generator(H: NumericalSemigroup) -> int:
    """Smallest member not divisible by the multiplicity."""
    if H.genus == 0:
        raise SemigroupError("the full semigroup has no second generator")
    a = H.multiplicity
    for x in H.members_below(H.conductor + a + 1):
        if x % a:
            return x
    raise AssertionError("unreachable: conductor + 1 or conductor is not a multiple of a")


@dataclass(frozen=True)
class Hypotheses:
    a: int
    b: int
    n: int
    r: int
    dim_condition_holds: bool

    @property
    def params(self) -> TwoGenParams:
        return TwoGenParams(self.a, self.b, self.n, self.r)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "r": self.r,
            "dimConditionHolds": self.dim_condition_holds,
        }


def standing_hypotheses_check(H: NumericalSemigroup) -> Hypotheses:
    """First two generators a, b of H and whether b is the only member in (na, (n+1)a)."""
    a = H.multiplicity
    b = second_generator(H)
    if gcd(a, b) != 1:
        raise NotCoprime(f"multiplicity {a} and second generator {b} share factor {gcd(a, b)}")
    n, r = divmod(b, a)
    window = [x for x in range(n * a + 1, (n + 1) * a) if x in H]
    return Hypotheses(a, b, n, r, window == [b])
