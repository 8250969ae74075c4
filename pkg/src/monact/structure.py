"""Structural predicates: cyclic, locally cyclic, superfluous, hollow,
indecomposable decomposition in both categories, and bounded compactness."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    Act,
    Category,
    Subact,
    all_subacts,
    enumerate_homs,
    generated_closure,
    make_subact,
    viewed,
)
from .errors import EmptyAct, NotASubact


def is_cyclic(act: Act) -> Optional[int]:
    """The smallest generator g with Sg = A, or None."""
    if act.size == 0:
        raise EmptyAct("cyclicity is defined for nonempty acts")
    full = frozenset(act.elements())
    for g in act.elements():
        if act.orbit(g) == full:
            return g
    return None


def is_locally_cyclic(act: Act) -> bool:
    """Every pair of elements lies in a common cyclic subact Sb."""
    if act.size == 0:
        raise EmptyAct("local cyclicity is defined for nonempty acts")
    orbits = [act.orbit(b) for b in act.elements()]
    for a1, a2 in itertools.combinations_with_replacement(act.elements(), 2):
        if not any(a1 in orb and a2 in orb for orb in orbits):
            return False
    return True


def is_superfluous(act: Act, sub: Subact) -> bool:
    """B is superfluous iff B cup C != A for every proper subact C.

    Criterion: the least subact containing A minus B is A itself.  Any C with
    B cup C = A contains A minus B, and <A minus B> joined with B is always A,
    so the quantifier collapses to one closure computation."""
    if sub.parent != act or not sub.members <= set(act.elements()):
        raise NotASubact("subact does not belong to this act")
    complement = set(act.elements()) - sub.members
    return generated_closure(act, complement) == frozenset(act.elements())


def maximal_proper_subacts(act: Act) -> list[Subact]:
    """Maximal elements of the proper-subact poset, deterministic order."""
    if act.size == 0:
        raise EmptyAct("no proper subacts of the empty act")
    full = frozenset(act.elements())
    proper = [s for s in all_subacts(act) if s.members != full]
    out = []
    for s in proper:
        if not any(s.members < t.members for t in proper):
            out.append(s)
    return out


def is_hollow(act: Act, category: Optional[Category] = None) -> bool:
    """Every proper subact superfluous; for finite acts this is the same as
    having at most one maximal proper subact, since subacts are closed under
    unions."""
    a = viewed(act, category) if category is not None else act
    if a.size == 0:
        raise EmptyAct("hollowness is defined for nonempty acts")
    return len(maximal_proper_subacts(a)) <= 1


@dataclass(frozen=True)
class Decomposition:
    parent: Act
    category: Category
    components: tuple[Subact, ...]


def decompose(act: Act, category: Category) -> Decomposition:
    """Unique decomposition into indecomposables.

    ACTO: connected components of a ~ sa.  ACT0: theta is removed first (it
    belongs to every subact, so it cannot separate wedge summands), components
    of the rest get theta re-added."""
    a = viewed(act, category)
    if a.size == 0:
        raise EmptyAct("cannot decompose the empty act")
    n = a.size
    parent_idx = list(range(n))

    def find(x):
        while parent_idx[x] != x:
            parent_idx[x] = parent_idx[parent_idx[x]]
            x = parent_idx[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent_idx[max(rx, ry)] = min(rx, ry)

    skip = {a.zero} if category is Category.ACT0 else set()
    for x in a.elements():
        if x in skip:
            continue
        for row in a.action:
            if row[x] not in skip:
                union(x, row[x])
    groups: dict[int, set[int]] = {}
    for x in a.elements():
        if x in skip:
            continue
        groups.setdefault(find(x), set()).add(x)
    comps = []
    if category is Category.ACT0:
        if not groups:  # the act is just theta
            comps.append(frozenset({a.zero}))
        for root in sorted(groups):
            comps.append(frozenset(groups[root] | {a.zero}))
    else:
        for root in sorted(groups):
            comps.append(frozenset(groups[root]))
    return Decomposition(a, category, tuple(make_subact(a, c) for c in comps))


def is_compact_bounded(act: Act, category: Category,
                       family_bound: int = 3, size_bound: int = 4) -> bool:
    """Bounded check that Hom(C, -) commutes with coproducts: for every family
    of at most `family_bound` acts of size at most `size_bound` (up to iso),
    every hom out of C into the coproduct factors through one injection."""
    from .constructions import coproduct
    from .enumeration import enumerate_acts

    c = viewed(act, category)
    parts_pool = [p for p in enumerate_acts(c.monoid, size_bound, category)
                  if p.size > 0]
    for k in range(1, family_bound + 1):
        for family in itertools.combinations_with_replacement(parts_pool, k):
            cop = coproduct(category, list(family))
            images = [inj.image() for inj in cop.injections]
            for h in enumerate_homs(c, cop.act, category):
                him = h.image()
                if not any(him <= img for img in images):
                    return False
    return True
