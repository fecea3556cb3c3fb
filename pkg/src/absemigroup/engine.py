"""Classify a semigroup H as occurring at most once, known to occur more than once, or neither.

"Occurs at most once" means no smooth curve carries two distinct points whose
Weierstrass semigroups both equal H. Every positive proof goes in two steps:

1. the degree-a pencil |aP| is the only base point free g^1_a on the curve
   (pencil axis: LEMMA_X_PENCIL, PROP_1, PROP_2_BOUND), so a second point Q
   with the same semigroup satisfies aQ ~ aP;
2. no such Q on the same pencil has WS(Q) = H
   (same-pencil axis: COR_2_GENUS, COR_Y_TRIVIAL).

The rules are sufficient conditions only; when neither a proof nor a known
construction applies the verdict is Undetermined.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GenusTooLarge, SemigroupError
from .pencil import sharp_semigroup_S, trivial_new_nongaps
from .semigroup import (
    Hypotheses,
    NumericalSemigroup,
    TwoGenParams,
    sg_from_generators,
    standing_hypotheses_check,
    two_gen_params,
)


class RuleId(str, enum.Enum):
    THEOREM_A = "THEOREM_A"
    LEMMA_X_PENCIL = "LEMMA_X_PENCIL"
    PROP_1 = "PROP_1"
    PROP_2_BOUND = "PROP_2_BOUND"
    COR_2_GENUS = "COR_2_GENUS"
    COR_Y_TRIVIAL = "COR_Y_TRIVIAL"
    COR_7 = "COR_7"
    COR_10 = "COR_10"
    KNOWN_MULTIPLE_FULL_GENUS = "KNOWN_MULTIPLE_FULL_GENUS"
    KNOWN_MULTIPLE_S = "KNOWN_MULTIPLE_S"


class Status(str, enum.Enum):
    ESTABLISHED = "Established"
    FAILED = "Failed"
    NOT_APPLICABLE = "NotApplicable"


class Kind(str, enum.Enum):
    AT_MOST_ONCE = "AtMostOnce"
    KNOWN_MULTIPLE = "KnownMultiple"
    UNDETERMINED = "Undetermined"


PENCIL_RULES = (RuleId.LEMMA_X_PENCIL, RuleId.PROP_1, RuleId.PROP_2_BOUND)
SAME_PENCIL_RULES = (RuleId.COR_2_GENUS, RuleId.COR_Y_TRIVIAL)
KNOWN_MULTIPLE_RULES = (RuleId.KNOWN_MULTIPLE_FULL_GENUS, RuleId.KNOWN_MULTIPLE_S)


@dataclass(frozen=True)
class CriterionOutcome:
    rule: RuleId
    status: Status
    evidence: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.status is not Status.NOT_APPLICABLE and not self.evidence:
            raise ValueError(f"{self.rule.value}: evidence required for {self.status.value}")

    @property
    def established(self) -> bool:
        return self.status is Status.ESTABLISHED

    def to_dict(self) -> dict:
        return {"ruleId": self.rule.value, "status": self.status.value, "evidence": self.evidence}


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    outcomes: tuple[CriterionOutcome, ...]
    hypotheses: Hypotheses
    bounds_only: bool = False

    def outcome(self, rule: RuleId) -> CriterionOutcome | None:
        for o in self.outcomes:
            if o.rule is rule:
                return o
        return None

    def established(self) -> list[str]:
        return [o.rule.value for o in self.outcomes if o.established]

    def to_dict(self) -> dict:
        hyp = self.hypotheses.to_dict()
        if self.bounds_only:
            hyp["dimConditionHolds"] = "assumed"
        return {
            "kind": self.kind.value,
            "hypotheses": hyp,
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


def _na(rule: RuleId) -> CriterionOutcome:
    return CriterionOutcome(rule, Status.NOT_APPLICABLE)


def _frac(x: Fraction) -> str:
    return str(x)


def proper_divisors(a: int) -> list[int]:
    return [e for e in range(1, a) if a % e == 0]


def _hyp(H: NumericalSemigroup, hyp: Hypotheses | None) -> Hypotheses:
    return hyp if hyp is not None else standing_hypotheses_check(H)


# -- pencil axis ---------------------------------------------------------

def check_pencil_lemmaX(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    """Established when every proper divisor e of a has a gap of the form (a/e-1)a + ie, i >= 1.

    A second base point free g^1_a would force all those integers to be
    members for at least one e.
    """
    a = _hyp(H, hyp).a
    witnesses = []
    for e in proper_divisors(a):
        start = (a // e - 1) * a
        gap = next((x for x in range(start + e, H.conductor, e) if x not in H), None)
        if gap is None:
            return CriterionOutcome(
                RuleId.LEMMA_X_PENCIL,
                Status.FAILED,
                {"divisor": e, "allMembersFrom": start + e, "step": e},
            )
        witnesses.append({"e": e, "gap": gap})
    return CriterionOutcome(RuleId.LEMMA_X_PENCIL, Status.ESTABLISHED, {"witnesses": witnesses})


def check_prop1(p: TwoGenParams, H: NumericalSemigroup) -> CriterionOutcome:
    if H.genus != p.full_genus or p.b < p.a + 2 or H != p.semigroup():
        return _na(RuleId.PROP_1)
    return CriterionOutcome(
        RuleId.PROP_1, Status.ESTABLISHED, {"genus": H.genus, "a": p.a, "b": p.b}
    )


def prop2_bound(p: TwoGenParams, e: int) -> Fraction:
    """Genus above which a second g^1_a of divisor type e is impossible."""
    a, n = p.a, p.n
    if not (1 <= e < a and a % e == 0):
        raise ValueError(f"e={e} is not a proper divisor of a={a}")
    u = a * n - n * e - a // e
    return Fraction((a - 1) * (p.b - 1), 2) - Fraction((u + 2) * (u + 1), 2 * n * e)


def check_prop2_genus(p: TwoGenParams, g: int) -> CriterionOutcome:
    bounds = {e: prop2_bound(p, e) for e in proper_divisors(p.a)}
    worst = max(bounds.values())
    status = Status.ESTABLISHED if g > worst else Status.FAILED
    return CriterionOutcome(
        RuleId.PROP_2_BOUND,
        status,
        {"genus": g, "bounds": {str(e): _frac(v) for e, v in bounds.items()}, "max": _frac(worst)},
    )


def check_prop2(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    return check_prop2_genus(_hyp(H, hyp).params, H.genus)


# -- same-pencil axis ----------------------------------------------------

def _cor2_genus(p: TwoGenParams, g: int) -> CriterionOutcome:
    threshold = p.sharp_genus
    status = Status.ESTABLISHED if g > threshold else Status.FAILED
    return CriterionOutcome(RuleId.COR_2_GENUS, status, {"genus": g, "threshold": threshold})


def check_cor2(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    hyp = _hyp(H, hyp)
    if not hyp.dim_condition_holds:
        return _na(RuleId.COR_2_GENUS)
    return _cor2_genus(hyp.params, H.genus)


def check_corY(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    hyp = _hyp(H, hyp)
    if not hyp.dim_condition_holds:
        return _na(RuleId.COR_Y_TRIVIAL)
    values = trivial_new_nongaps(hyp.params, hyp.a - hyp.r).values
    missing = [x for x in values if x not in H]
    ev = {"trivialNonGaps": list(values)}
    if missing:
        ev["missing"] = missing[0]
        return CriterionOutcome(RuleId.COR_Y_TRIVIAL, Status.ESTABLISHED, ev)
    ev["missing"] = None
    return CriterionOutcome(RuleId.COR_Y_TRIVIAL, Status.FAILED, ev)


# -- shortcuts -----------------------------------------------------------

def _is_prime(x: int) -> bool:
    return x >= 2 and all(x % d for d in range(2, int(x**0.5) + 1))


def check_cor7(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    """a prime, b > 3a, nothing outside <a; b> below (n+1)a, genus above the threshold."""
    hyp = _hyp(H, hyp)
    p = hyp.params
    if not _is_prime(p.a) or p.b <= 3 * p.a:
        return _na(RuleId.COR_7)
    base = p.semigroup()
    extra = [x for x in H.members_below((p.n + 1) * p.a) if x not in base]
    ev = {"genus": H.genus, "threshold": p.sharp_genus, "extraBelow": extra[:1]}
    ok = not extra and H.genus > p.sharp_genus
    return CriterionOutcome(RuleId.COR_7, Status.ESTABLISHED if ok else Status.FAILED, ev)


def _cor10(p: TwoGenParams, g: int, dim_ok: bool) -> CriterionOutcome:
    # b > (a/2)^2 without division
    if not dim_ok or 4 * p.b <= p.a * p.a:
        return _na(RuleId.COR_10)
    ok = g > p.sharp_genus
    return CriterionOutcome(
        RuleId.COR_10,
        Status.ESTABLISHED if ok else Status.FAILED,
        {"genus": g, "threshold": p.sharp_genus, "quarterSquare": _frac(Fraction(p.a * p.a, 4))},
    )


def check_cor10(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    hyp = _hyp(H, hyp)
    return _cor10(hyp.params, H.genus, hyp.dim_condition_holds)


def check_theorem_a(H: NumericalSemigroup, hyp: Hypotheses | None = None) -> CriterionOutcome:
    p = _hyp(H, hyp).params
    if H.genus != p.full_genus or p.b < p.a + 2 or p.r > p.a - 2:
        return _na(RuleId.THEOREM_A)
    return CriterionOutcome(RuleId.THEOREM_A, Status.ESTABLISHED, {"a": p.a, "b": p.b, "r": p.r})


# -- known multiple occurrences --------------------------------------------

def _known_full(p: TwoGenParams, g: int) -> CriterionOutcome:
    if g != p.full_genus:
        return _na(RuleId.KNOWN_MULTIPLE_FULL_GENUS)
    reason = "b=a+1" if p.b == p.a + 1 else "r=a-1" if p.r == p.a - 1 else None
    return CriterionOutcome(
        RuleId.KNOWN_MULTIPLE_FULL_GENUS,
        Status.ESTABLISHED if reason else Status.FAILED,
        {"genus": g, "reason": reason},
    )


def check_known_multiple(
    H: NumericalSemigroup, hyp: Hypotheses | None = None
) -> tuple[CriterionOutcome, CriterionOutcome]:
    """Outcomes for KNOWN_MULTIPLE_FULL_GENUS and KNOWN_MULTIPLE_S, in that order."""
    hyp = _hyp(H, hyp)
    p = hyp.params
    full = _known_full(p, H.genus)
    if not hyp.dim_condition_holds or H.genus != p.sharp_genus:
        sharp = _na(RuleId.KNOWN_MULTIPLE_S)
    else:
        same = H == sharp_semigroup_S(p)
        sharp = CriterionOutcome(
            RuleId.KNOWN_MULTIPLE_S,
            Status.ESTABLISHED if same else Status.FAILED,
            {"genus": H.genus, "equalsSharpS": same},
        )
    return full, sharp


# -- composition -----------------------------------------------------------

def _assemble(outcomes: list[CriterionOutcome], hyp: Hypotheses, bounds_only: bool = False) -> Verdict:
    outcomes = sorted(outcomes, key=lambda o: o.rule.value)
    est = {o.rule for o in outcomes if o.established}
    pencil = bool(est.intersection(PENCIL_RULES))
    same = bool(est.intersection(SAME_PENCIL_RULES)) or RuleId.COR_7 in est or RuleId.COR_10 in est
    multiple = bool(est.intersection(KNOWN_MULTIPLE_RULES))
    at_most_once = pencil and same
    if at_most_once and multiple:
        raise AssertionError(f"contradictory rules established: {sorted(r.value for r in est)}")
    if at_most_once:
        kind = Kind.AT_MOST_ONCE
    elif multiple:
        kind = Kind.KNOWN_MULTIPLE
    else:
        kind = Kind.UNDETERMINED
    return Verdict(kind, tuple(outcomes), hyp, bounds_only)


def classify(H: NumericalSemigroup) -> Verdict:
    hyp = standing_hypotheses_check(H)
    p = hyp.params
    outcomes = [
        check_theorem_a(H, hyp),
        check_pencil_lemmaX(H, hyp),
        check_prop1(p, H),
        check_prop2(H, hyp),
        check_cor2(H, hyp),
        check_corY(H, hyp),
        check_cor7(H, hyp),
        check_cor10(H, hyp),
        *check_known_multiple(H, hyp),
    ]
    return _assemble(outcomes, hyp)


def classify_bounds(a: int, b: int, g: int) -> Verdict:
    """Verdict from (a, b, genus) alone, assuming the standing hypotheses.

    At the full genus H must be <a; b> itself, so the full classifier runs.
    Below it only PROP_2_BOUND, COR_2_GENUS and COR_10 are computable.
    """
    p = two_gen_params(a, b)
    if g > p.full_genus:
        raise GenusTooLarge(f"genus {g} exceeds (a-1)(b-1)/2 = {p.full_genus}")
    if g < 0:
        raise SemigroupError("genus must be non-negative")
    if g == p.full_genus:
        return classify(sg_from_generators((a, b)))
    hyp = Hypotheses(p.a, p.b, p.n, p.r, True)
    outcomes = [
        check_prop2_genus(p, g),
        _cor2_genus(p, g),
        _cor10(p, g, True),
    ]
    return _assemble(outcomes, hyp, bounds_only=True)
