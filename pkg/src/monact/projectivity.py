"""Idempotents, principal acts Se, projectivity tests, covers, and the
projective-cover search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    Act,
    ActHom,
    Category,
    Monoid,
    Subact,
    enumerate_homs,
    is_isomorphic,
    make_act,
    subact_as_act,
    viewed,
)
from .errors import EmptyAct, NotIdempotent
from .structure import decompose, maximal_proper_subacts
from .constructions import coproduct


def idempotents(monoid: Monoid) -> list[int]:
    """All e with ee = e, ascending; always contains 1 and 0."""
    return [e for e in monoid.elements() if monoid.mul[e][e] == e]


def principal_act(monoid: Monoid, e: int,
                  category: Category = Category.ACT0) -> Act:
    """Se with the left action; the building block of every projective."""
    if monoid.mul[e][e] != e:
        raise NotIdempotent(monoid.label(e))
    carrier = sorted({monoid.mul[s][e] for s in monoid.elements()})
    pos = {x: i for i, x in enumerate(carrier)}
    labels = tuple(monoid.labels[x] for x in carrier)
    action = tuple(tuple(pos[monoid.mul[s][x]] for x in carrier)
                   for s in monoid.elements())
    zero = pos[monoid.zero] if category is Category.ACT0 else None
    return make_act(monoid, labels, action, category, zero)


@dataclass(frozen=True)
class ProjectivityCertificate:
    act: Act
    category: Category
    # one (component, idempotent, isomorphism component-act -> Se) per part
    parts: tuple[tuple[Subact, int, ActHom], ...]


def is_projective(act: Act, category: Category
                  ) -> Optional[ProjectivityCertificate]:
    """Projective iff every indecomposable component is isomorphic to Se for
    an idempotent e; returns the matching certificate or None."""
    a = viewed(act, category)
    if a.size == 0:
        raise EmptyAct("projectivity is tested on nonempty acts")
    parts = []
    for comp in decompose(a, category).components:
        comp_act, _ = subact_as_act(comp)
        match = None
        for e in idempotents(a.monoid):
            iso = is_isomorphic(comp_act, principal_act(a.monoid, e, category))
            if iso is not None:
                match = (comp, e, iso)
                break
        if match is None:
            return None
        parts.append(match)
    return ProjectivityCertificate(a, category, tuple(parts))


@dataclass(frozen=True)
class Cover:
    epi: ActHom
    category: Category
    # (maximal proper subact M of the domain, element of A missed by f(M))
    evidence: tuple[tuple[Subact, int], ...]


def is_cover(f: ActHom) -> Optional[Cover]:
    """A cover is a surjection no proper subact of whose domain still
    surjects; maximal proper subacts suffice, since restricting further only
    shrinks the image."""
    if not f.is_surjective():
        return None
    target_all = set(f.target.elements())
    evidence = []
    for m in maximal_proper_subacts(f.source):
        image = {f(a) for a in m.members}
        missed = target_all - image
        if not missed:
            return None
        evidence.append((m, min(missed)))
    return Cover(f, f.category, tuple(evidence))


def generating_set(act: Act) -> list[int]:
    """A small (greedy, not necessarily minimum) generating set."""
    uncovered = set(act.elements())
    gens = []
    while uncovered:
        g = max(uncovered,
                key=lambda x: (len(act.orbit(x) & uncovered), -x))
        gens.append(g)
        uncovered -= act.orbit(g)
    return sorted(gens)


def projective_cover(act: Act, category: Category,
                     size_bound: Optional[int] = None) -> Optional[Cover]:
    """Search projective domains P = coproduct of Se_i over multisets of
    idempotents in graded lexicographic order, then surjections in
    lexicographic order; the first cover wins.  A miss means "none within the
    bound", never "does not exist"."""
    a = viewed(act, category)
    if a.size == 0:
        raise EmptyAct("covers are sought for nonempty acts")
    if size_bound is None:
        # one cyclic projective (at most |S| elements) per generator always
        # suffices for finite monoids; |A|+|S| alone can fall short
        g = len(generating_set(a))
        n = a.monoid.size
        if category is Category.ACTO:
            free = g * n
        else:
            free = g * (n - 1) + 1
        size_bound = max(a.size + n, free)
    idems = idempotents(a.monoid)
    principals = {e: principal_act(a.monoid, e, category) for e in idems}
    for k in range(1, size_bound + 1):
        for multiset in itertools.combinations_with_replacement(idems, k):
            parts = [principals[e] for e in multiset]
            if category is Category.ACTO:
                size = sum(p.size for p in parts)
            else:
                size = sum(p.size - 1 for p in parts) + 1
            if size > size_bound:
                continue
            p = coproduct(category, parts).act
            for f in enumerate_homs(p, a, category):
                if not f.is_surjective():
                    continue
                cover = is_cover(f)
                if cover is not None:
                    return cover
    return None
