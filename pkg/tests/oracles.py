"""Independent brute-force forms of the optimized predicates.

These quantify literally over all (proper) subacts, all table assignments, or
all epimorphisms, and are kept free of the shortcuts used by the library so
that agreement is meaningful."""

from __future__ import annotations

import itertools

from monact import (
    Act,
    Category,
    Subact,
    all_subacts,
    enumerate_acts,
    enumerate_homs,
)
from monact.core import compose_homs


def definitional_superfluous(act: Act, sub: Subact) -> bool:
    """B superfluous iff B union C != A for every proper subact C."""
    full = frozenset(act.elements())
    for c in all_subacts(act):
        if c.members == full:
            continue
        if sub.members | c.members == full:
            return False
    return True


def definitional_hollow(act: Act) -> bool:
    """Every proper subact is superfluous."""
    full = frozenset(act.elements())
    for b in all_subacts(act):
        if b.members == full:
            continue
        if not definitional_superfluous(act, b):
            return False
    return True


def lifting_projective(act: Act, category: Category,
                       size_bound: int = 4) -> bool:
    """The lifting property against every epi B ->> C with bounded carriers:
    each map act -> C lifts through the epi."""
    pool = [x for x in enumerate_acts(act.monoid, size_bound, category)
            if x.size > 0]
    for b in pool:
        for c in pool:
            for pi in enumerate_homs(b, c, category):
                if not pi.is_surjective():
                    continue
                homs_ab = None
                for alpha in enumerate_homs(act, c, category):
                    if homs_ab is None:
                        homs_ab = enumerate_homs(act, b, category)
                    if not any(compose_homs(pi, lift).mapping == alpha.mapping
                               for lift in homs_ab):
                        return False
    return True


def brute_force_act_tables(monoid, k: int):
    """Every total action table of size k, by raw assignment of one
    transformation per monoid element and a full axiom check."""
    n = monoid.size
    transformations = list(itertools.product(range(k), repeat=k))
    ident = tuple(range(k))
    free = [s for s in range(n) if s != monoid.one]
    for choice in itertools.product(transformations, repeat=len(free)):
        rows = [None] * n
        rows[monoid.one] = ident
        for s, f in zip(free, choice):
            rows[s] = f
        ok = True
        for s in range(n):
            for t in range(n):
                st = monoid.mul[s][t]
                if any(rows[st][a] != rows[s][rows[t][a]] for a in range(k)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(rows)
