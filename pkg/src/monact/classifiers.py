"""Monoid-level verdicts at desk scale: (0-)perfectness, (0-)steadiness, and
the a.c.c.-on-cyclic-subacts profile.

Every verdict over "all acts" is bounded quantification, so the positive
verdict is "holds-within-bounds", never a bare "holds"; a `fails` verdict
always carries concrete witnesses re-checkable by the structure and
projectivity modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from .core import Act, Category, Monoid, regular_act, quotient_act
from .enumeration import (
    canonical_act_key,
    enumerate_acts,
    enumerate_left_congruences,
)
from .projectivity import projective_cover
from .structure import is_cyclic, is_hollow, is_locally_cyclic

HOLDS = "holds"
FAILS = "fails"
HOLDS_WITHIN_BOUNDS = "holds-within-bounds"

DEFAULT_PERFECT_BOUND = 4
DEFAULT_STEADY_BOUND = 5


@dataclass
class ClassifierReport:
    monoid: Monoid
    property: str
    verdict: str
    bounds: dict = field(default_factory=dict)
    witnesses: tuple = ()
    details: dict = field(default_factory=dict)


def cyclic_acts(monoid: Monoid, category: Category = Category.ACTO
                ) -> list[Act]:
    """All quotients of S by left congruences, up to isomorphism; every
    cyclic act over S appears this way."""
    base = regular_act(monoid, Category.ACTO)
    seen = set()
    out = []
    for cong in enumerate_left_congruences(monoid):
        q, _ = quotient_act(base, cong)
        if category is Category.ACT0:
            # every cyclic act has a unique zero, so the retag always works
            from .core import act0_view
            q = act0_view(q)
        key = canonical_act_key(q)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out


def is_left_perfect(monoid: Monoid,
                    act_size_bound: int = DEFAULT_PERFECT_BOUND
                    ) -> ClassifierReport:
    """Characterization sweep: every cyclic act has a projective cover and
    every locally cyclic act of bounded size is cyclic."""
    witnesses = []
    details = {"cyclic_acts": 0, "acts_checked": 0}
    for c in cyclic_acts(monoid, Category.ACTO):
        details["cyclic_acts"] += 1
        if projective_cover(c, Category.ACTO) is None:
            witnesses.append(("no-cover-within-bound", c))
    for a in enumerate_acts(monoid, act_size_bound, Category.ACTO):
        if a.size == 0:
            continue
        details["acts_checked"] += 1
        if is_locally_cyclic(a) and is_cyclic(a) is None:
            witnesses.append(("locally-cyclic-not-cyclic", a))
    verdict = FAILS if witnesses else HOLDS_WITHIN_BOUNDS
    return ClassifierReport(monoid, "left-perfect", verdict,
                            {"act_size": act_size_bound},
                            tuple(witnesses), details)


def is_left_0perfect(monoid: Monoid,
                     act_size_bound: int = DEFAULT_PERFECT_BOUND
                     ) -> ClassifierReport:
    """Every ACT0 act of bounded size has a projective cover."""
    witnesses = []
    checked = 0
    for a in enumerate_acts(monoid, act_size_bound, Category.ACT0):
        checked += 1
        if projective_cover(a, Category.ACT0) is None:
            witnesses.append(("no-cover-within-bound", a))
    verdict = FAILS if witnesses else HOLDS_WITHIN_BOUNDS
    return ClassifierReport(monoid, "left-0-perfect", verdict,
                            {"act_size": act_size_bound},
                            tuple(witnesses), {"acts_checked": checked})


def _cyclic_subact_chain(act: Act) -> int:
    """Longest strict chain in the poset of cyclic subacts Sa."""
    orbits = sorted({act.orbit(a) for a in act.elements()}, key=len)
    best = {}
    longest = 0
    for i, o in enumerate(orbits):
        depth = 1 + max((best[j] for j in range(i)
                         if orbits[j] < o), default=0)
        best[i] = depth
        longest = max(longest, depth)
    return longest


def acc_cyclic_subacts_report(monoid: Monoid,
                              act_size_bound: int = DEFAULT_PERFECT_BOUND
                              ) -> ClassifierReport:
    """Finite instances always satisfy the a.c.c.; the value of the report is
    the chain-length profile."""
    longest = 0
    profile: dict[int, int] = {}
    for a in enumerate_acts(monoid, act_size_bound, Category.ACTO):
        if a.size == 0:
            continue
        chain = _cyclic_subact_chain(a)
        profile[a.size] = max(profile.get(a.size, 0), chain)
        longest = max(longest, chain)
    return ClassifierReport(monoid, "acc-cyclic-subacts", HOLDS,
                            {"act_size": act_size_bound}, (),
                            {"longest_chain": longest,
                             "profile_by_size": profile})


def _steady_sweep(monoid: Monoid, category: Category, bound: int,
                  prop: str) -> ClassifierReport:
    witnesses = []
    checked = 0
    for a in enumerate_acts(monoid, bound, category):
        if a.size == 0:
            continue
        checked += 1
        if is_hollow(a, category) and is_cyclic(a) is None:
            witnesses.append(("hollow-not-cyclic", a))
    verdict = FAILS if witnesses else HOLDS_WITHIN_BOUNDS
    return ClassifierReport(monoid, prop, verdict, {"act_size": bound},
                            tuple(witnesses), {"acts_checked": checked})


def is_left_steady(monoid: Monoid,
                   act_size_bound: int = DEFAULT_STEADY_BOUND
                   ) -> ClassifierReport:
    """Compactness surrogate per the hollow characterization: no hollow
    non-cyclic ACTO act of bounded size."""
    return _steady_sweep(monoid, Category.ACTO, act_size_bound, "left-steady")


def is_left_0steady(monoid: Monoid,
                    act_size_bound: int = DEFAULT_STEADY_BOUND
                    ) -> ClassifierReport:
    """No hollow non-cyclic ACT0 act of bounded size; cross-checked against
    the a.c.c. report."""
    report = _steady_sweep(monoid, Category.ACT0, act_size_bound,
                           "left-0-steady")
    acc = acc_cyclic_subacts_report(monoid, act_size_bound)
    report.details["acc_verdict"] = acc.verdict
    report.details["acc_agrees"] = (
        (report.verdict != FAILS) == (acc.verdict != FAILS))
    return report


def verify_witnesses(report: ClassifierReport) -> bool:
    """Re-check the witnesses of a fails verdict with the underlying
    predicates; a fabricated witness is rejected."""
    if report.verdict != FAILS:
        return not report.witnesses
    for kind, act in report.witnesses:
        if kind == "hollow-not-cyclic":
            if not (is_hollow(act, act.category) and is_cyclic(act) is None):
                return False
        elif kind == "locally-cyclic-not-cyclic":
            if not (is_locally_cyclic(act) and is_cyclic(act) is None):
                return False
        elif kind == "no-cover-within-bound":
            if projective_cover(act, act.category) is not None:
                return False
        else:
            return False
    return True
