"""Enumerate and classify the semigroups of a given genus that contain <a; b>.

Any H containing <a; b> is <a; b> plus a set X of its gaps. The search
decides gaps from the largest down; when x is promoted, every sum x + h with
h already in H lies above x and is therefore already decided, so closure can
be checked on the spot.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .engine import Kind, Verdict, classify
from .errors import ConstraintViolated, GenusTooLarge, SemigroupError, TooLarge
from .pencil import sharp_semigroup_S
from .semigroup import (
    NumericalSemigroup,
    TwoGenParams,
    sg_from_generators,
    standing_hypotheses_check,
    two_gen_params,
    union_with,
)

BRUTE_FORCE_LIMIT = 12


def _promote(p: TwoGenParams, promoted: tuple[int, ...]) -> NumericalSemigroup:
    base = p.semigroup()
    mem = base.membership.copy()
    mem[list(promoted)] = True
    return NumericalSemigroup._from_table(mem, validate=False)


def _dfs_from(args) -> list[tuple[int, ...]]:
    """All closed promotion sets of size k whose largest element is gaps[start]."""
    gaps, base_mask, c, k, start = args
    low = (1 << c) - 1
    found = []

    def ok(mask: int, y: int) -> bool:
        return ((mask << y) & low & ~mask) == 0

    def rec(idx: int, mask: int, chosen: list[int]):
        if len(chosen) == k:
            found.append(tuple(sorted(chosen)))
            return
        need = k - len(chosen)
        for j in range(idx, len(gaps) - need + 1):
            y = gaps[j]
            new = mask | (1 << y)
            if ok(new, y):
                chosen.append(y)
                rec(j + 1, new, chosen)
                chosen.pop()

    y = gaps[start]
    mask = base_mask | (1 << y)
    if ok(mask, y):
        rec(start + 1, mask, [y])
    return found


def _check_genus(p: TwoGenParams, g: int) -> None:
    if g > p.full_genus:
        raise GenusTooLarge(f"genus {g} exceeds (a-1)(b-1)/2 = {p.full_genus}")
    if g < 0:
        raise SemigroupError("genus must be non-negative")


def _satisfies_hypotheses(p: TwoGenParams, H: NumericalSemigroup) -> bool:
    if H.genus == 0 or H.multiplicity != p.a:
        return False
    try:
        hyp = standing_hypotheses_check(H)
    except SemigroupError:
        return False
    return hyp.b == p.b and hyp.dim_condition_holds


def enumerate_containing(
    p: TwoGenParams, g: int, require_standing_hypotheses: bool = True, jobs: int = 1
) -> list[NumericalSemigroup]:
    _check_genus(p, g)
    base = p.semigroup()
    k = p.full_genus - g
    if k == 0:
        sets = [()]
    else:
        gaps = sorted(base.gaps, reverse=True)
        c = base.conductor
        base_mask = sum(1 << x for x in base.members_below(c))
        tasks = [(gaps, base_mask, c, k, i) for i in range(len(gaps) - k + 1)]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                parts = list(ex.map(_dfs_from, tasks))
        else:
            parts = [_dfs_from(t) for t in tasks]
        sets = [s for part in parts for s in part]
    out = [_promote(p, s) for s in sets]
    if require_standing_hypotheses:
        out = [H for H in out if _satisfies_hypotheses(p, H)]
    out.sort(key=lambda H: H.gaps)
    return out


def brute_force_enumerate(p: TwoGenParams, g: int) -> list[NumericalSemigroup]:
    """Unpruned oracle: try every subset of gaps of the right size, check all pairs."""
    _check_genus(p, g)
    k = p.full_genus - g
    if k > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{k} promotions exceed the brute force limit {BRUTE_FORCE_LIMIT}")
    base = p.semigroup()
    c = base.conductor
    base_members = set(base.members_below(c))
    out = []
    for subset in itertools.combinations(base.gaps, k):
        members = base_members.union(subset)
        small = sorted(members)
        closed = all(
            s + t >= c or s + t in members
            for i, s in enumerate(small)
            for t in small[i:]
        )
        if closed:
            out.append(_promote(p, subset))
    out.sort(key=lambda H: H.gaps)
    return out


# -- explicit families -------------------------------------------------------

def family_4_1(n: int, m: int) -> NumericalSemigroup:
    """<4; 4n+1> with the top m gaps congruent to 3 mod 4 promoted; genus 6n - m."""
    if n < 2 or not 0 <= m <= 2 * n - 1:
        raise ConstraintViolated(f"need n >= 2 and 0 <= m <= 2n-1, got n={n}, m={m}")
    H = union_with(sg_from_generators((4, 4 * n + 1)), [4 * i + 3 for i in range(3 * n - m, 3 * n)])
    assert H.genus == 6 * n - m
    return H


def family_4_2(n: int, m: int, m_prime: int) -> NumericalSemigroup:
    """<5; 5n+1> with 5i+3 (m' <= i <= 3n) and 5i+4 (m <= i <= 4n) added."""
    if n < 4 or m < 0 or m_prime < 0:
        raise ConstraintViolated(f"need n >= 4 and m, m' >= 0, got n={n}, m={m}, m'={m_prime}")
    if not (m <= n + m_prime and 2 * m >= m_prime and m + m_prime > 3 * n + 3):
        raise ConstraintViolated(
            f"(n, m, m')=({n}, {m}, {m_prime}) violates m <= n+m', 2m >= m', m+m' > 3n+3"
        )
    extra = [5 * i + 3 for i in range(m_prime, 3 * n + 1)]
    extra += [5 * i + 4 for i in range(m, 4 * n + 1)]
    return union_with(sg_from_generators((5, 5 * n + 1)), extra)


def family_4_3_values(n: int) -> tuple[int, ...]:
    """Trivial new non-gaps of <6; 6n+1> for a (5, 6) cusp."""
    return tuple(sorted((
        12 * n - 4, 18 * n - 9, 18 * n - 3, 24 * n - 14, 24 * n - 8,
        24 * n - 2, 30 * n - 19, 30 * n - 13, 30 * n - 7, 30 * n - 1,
    )))


def family_4_3(n: int) -> NumericalSemigroup:
    if n < 2:
        raise ConstraintViolated(f"need n >= 2, got {n}")
    H = union_with(sg_from_generators((6, 6 * n + 1)), family_4_3_values(n))
    assert H.genus == 15 * n - 10
    return H


def family_tag(p: TwoGenParams, H: NumericalSemigroup) -> str | None:
    """Label H by the first family generator that reproduces it."""
    if H == p.semigroup():
        return "BASE"
    if H == sharp_semigroup_S(p):
        return "SHARP_S"
    a, n, r = p.a, p.n, p.r
    if a == 4 and r == 1 and n >= 2:
        m = 6 * n - H.genus
        if 0 <= m <= 2 * n - 1 and family_4_1(n, m) == H:
            return "EX_4_1"
    if a == 5 and r == 1 and n >= 4:
        m_prime = next(i for i in range(3 * n + 1) if 5 * i + 3 in H)
        m = next(i for i in range(4 * n + 1) if 5 * i + 4 in H)
        try:
            if family_4_2(n, m, m_prime) == H:
                return "EX_4_2"
        except ConstraintViolated:
            pass
    if a == 6 and r == 1 and n >= 2 and family_4_3(n) == H:
        return "EX_4_3"
    return None


@dataclass(frozen=True)
class CensusRow:
    semigroup: NumericalSemigroup
    verdict: Verdict
    family_tag: str | None = None


def _classify_row(args) -> CensusRow:
    p, H = args
    return CensusRow(H, classify(H), family_tag(p, H))


def census_classify(
    p: TwoGenParams, g: int, require_standing_hypotheses: bool = True, jobs: int = 1
) -> list[CensusRow]:
    sgs = enumerate_containing(p, g, require_standing_hypotheses, jobs)
    args = [(p, H) for H in sgs]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_classify_row, args))
    return [_classify_row(x) for x in args]


def trigonal_residue_report(n_values) -> list[dict]:
    """Genus residues mod 3 of the two-generator semigroups with multiplicity 3.

    For <3; 3n+1> and <3; 3n+2> at full genus 3n and 3n+1 respectively,
    records the verdict and g mod 3 so the residue class of the ones that occur
    at most once can be read off directly.
    """
    rows = []
    for n in n_values:
        for b in (3 * n + 1, 3 * n + 2):
            p = two_gen_params(3, b)
            v = classify(p.semigroup())
            rows.append({"a": 3, "b": b, "genus": p.full_genus,
                         "genusMod3": p.full_genus % 3, "kind": v.kind.value})
    return rows


def at_most_once_only(rows: list[CensusRow]) -> bool:
    return all(r.verdict.kind is Kind.AT_MOST_ONCE for r in rows)
