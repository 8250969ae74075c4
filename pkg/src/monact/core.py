"""Finite monoids with zero, their left acts, homomorphisms, subacts and
congruences.

Everything is index-based: element labels are opaque strings and every table
stores dense integer indices, so an action lookup is a double index into a
tuple of tuples.  All values are immutable once built; the factory functions
(`validate_monoid`, `make_act`, `make_hom`, ...) are the only way invalid data
can be rejected.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import (
    BadIdentity,
    BadZero,
    CategoryMismatch,
    DuplicateLabel,
    EmptyAct,
    EmptyGeneratorInAct0,
    MonoidMismatch,
    NotASubact,
    NotAssociative,
    UniqueZeroViolation,
    ValidationError,
    ZeroEqualsOne,
)


class Category(enum.Enum):
    """The two act categories: ACTO is S-Act with the empty initial object
    adjoined, ACT0 is the category of acts with one designated zero and
    zero-preserving maps."""

    ACTO = "acto"
    ACT0 = "act0"


@dataclass(frozen=True)
class Monoid:
    labels: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    one: int
    zero: int

    @property
    def size(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(len(self.labels))

    def label(self, x: int) -> str:
        return self.labels[x]

    def __repr__(self):
        return f"Monoid({'/'.join(self.labels)})"


def validate_monoid(labels: Sequence[str], mul: Sequence[Sequence[int]],
                    one: int, zero: int) -> Monoid:
    """Check all monoid-with-zero axioms and freeze the result."""
    labels = tuple(labels)
    seen = set()
    for lbl in labels:
        if lbl in seen:
            raise DuplicateLabel(lbl)
        seen.add(lbl)
    n = len(labels)
    table = tuple(tuple(row) for row in mul)
    if len(table) != n or any(len(row) != n for row in table):
        raise ValidationError("multiplication table is not total")
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise ValidationError(f"table entry {v} out of range")
    if one == zero:
        raise ZeroEqualsOne()
    for x in range(n):
        if table[one][x] != x or table[x][one] != x:
            raise BadIdentity(labels[x])
    for x in range(n):
        if table[zero][x] != zero or table[x][zero] != zero:
            raise BadZero(labels[x])
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    raise NotAssociative(labels[x], labels[y], labels[z])
    return Monoid(labels, table, one, zero)


@dataclass(frozen=True)
class Act:
    monoid: Monoid
    labels: tuple[str, ...]
    # action[s][a] = index of s.a
    action: tuple[tuple[int, ...], ...]
    category: Category
    zero: Optional[int] = None  # designated theta, present iff ACT0

    @property
    def size(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(len(self.labels))

    def apply(self, s: int, a: int) -> int:
        return self.action[s][a]

    def label(self, a: int) -> str:
        return self.labels[a]

    def orbit(self, a: int) -> frozenset[int]:
        """The cyclic subact Sa as a plain index set."""
        return frozenset(row[a] for row in self.action)

    def __repr__(self):
        tag = self.category.value
        return f"Act({'/'.join(self.labels) or 'empty'}, {tag})"


def make_act(monoid: Monoid, labels: Sequence[str],
             action: Sequence[Sequence[int]], category: Category,
             zero: Optional[int] = None) -> Act:
    """Validate the act axioms (unit law, compatibility) and the category
    specific carrier rules."""
    labels = tuple(labels)
    seen = set()
    for lbl in labels:
        if lbl in seen:
            raise DuplicateLabel(lbl)
        seen.add(lbl)
    n = len(labels)
    table = tuple(tuple(row) for row in action)
    if len(table) != monoid.size or any(len(row) != n for row in table):
        raise ValidationError("action table is not total")
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise ValidationError(f"action entry {v} out of range")
    for a in range(n):
        if table[monoid.one][a] != a:
            raise ValidationError(f"unit law fails on {labels[a]!r}")
    for s in monoid.elements():
        for t in monoid.elements():
            st = monoid.mul[s][t]
            for a in range(n):
                if table[st][a] != table[s][table[t][a]]:
                    raise ValidationError(
                        f"compatibility fails at s={monoid.label(s)} "
                        f"t={monoid.label(t)} a={labels[a]}")
    if category is Category.ACT0:
        if n == 0:
            raise EmptyAct("acts in S-Act_0 are nonempty")
        zeros = {table[monoid.zero][a] for a in range(n)}
        if zero is None or zeros != {zero}:
            raise UniqueZeroViolation(sorted(zeros))
    else:
        if zero is not None:
            raise ValidationError("ACTO acts carry no designated zero")
    return Act(monoid, labels, table, category, zero)


def acto_view(act: Act) -> Act:
    """The same carrier and table, retagged into S-Act^O."""
    if act.category is Category.ACTO:
        return act
    return replace(act, category=Category.ACTO, zero=None)


def act0_view(act: Act) -> Act:
    """Retag into S-Act_0; requires a unique zero element."""
    if act.category is Category.ACT0:
        return act
    zeros = zero_set(act).members
    if len(zeros) != 1:
        raise UniqueZeroViolation(sorted(zeros))
    return replace(act, category=Category.ACT0, zero=min(zeros))


def viewed(act: Act, category: Category) -> Act:
    return acto_view(act) if category is Category.ACTO else act0_view(act)


@dataclass(frozen=True)
class Subact:
    parent: Act
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def label_set(self) -> tuple[str, ...]:
        return tuple(self.parent.labels[a] for a in self.sorted_members())

    def __repr__(self):
        return f"Subact({{{','.join(self.label_set())}}})"


def is_closed(act: Act, members: Iterable[int]) -> bool:
    ms = set(members)
    return all(row[a] in ms for a in ms for row in act.action)


def make_subact(act: Act, members: Iterable[int]) -> Subact:
    ms = frozenset(members)
    if not is_closed(act, ms):
        raise NotASubact(f"{sorted(ms)} not closed under the action")
    if not ms and act.category is Category.ACT0:
        raise NotASubact("subacts in S-Act_0 are nonempty")
    return Subact(act, ms)


def subact_as_act(sub: Subact) -> tuple[Act, tuple[int, ...]]:
    """Reify a subact as an act of its own.

    Returns the act and the tuple of parent indices, i.e. the embedding."""
    parent = sub.parent
    members = sub.sorted_members()
    pos = {a: i for i, a in enumerate(members)}
    labels = tuple(parent.labels[a] for a in members)
    action = tuple(tuple(pos[parent.action[s][a]] for a in members)
                   for s in parent.monoid.elements())
    zero = None
    if parent.category is Category.ACT0:
        zero = pos[parent.zero]  # theta belongs to every ACT0 subact
    act = make_act(parent.monoid, labels, action, parent.category, zero)
    return act, members


@dataclass(frozen=True)
class ActHom:
    source: Act
    target: Act
    mapping: tuple[int, ...]
    category: Category

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.size

    def __repr__(self):
        pairs = ",".join(f"{self.source.labels[a]}->{self.target.labels[b]}"
                         for a, b in enumerate(self.mapping))
        return f"ActHom({pairs or 'empty'})"


def make_hom(source: Act, target: Act, mapping: Sequence[int]) -> ActHom:
    if source.monoid != target.monoid:
        raise MonoidMismatch("hom endpoints live over different monoids")
    if source.category is not target.category:
        raise CategoryMismatch("hom endpoints carry different category tags")
    mapping = tuple(mapping)
    if len(mapping) != source.size:
        raise ValidationError("hom map is not total")
    for b in mapping:
        if not 0 <= b < target.size:
            raise ValidationError(f"hom image {b} out of range")
    for s in source.monoid.elements():
        for a in source.elements():
            if mapping[source.action[s][a]] != target.action[s][mapping[a]]:
                raise ValidationError(
                    f"not equivariant at s={source.monoid.label(s)} "
                    f"a={source.labels[a]}")
    if source.category is Category.ACT0 and mapping[source.zero] != target.zero:
        raise ValidationError("zero not preserved")
    return ActHom(source, target, mapping, source.category)


def identity_hom(act: Act) -> ActHom:
    return ActHom(act, act, tuple(act.elements()), act.category)


def compose_homs(g: ActHom, f: ActHom) -> ActHom:
    """g after f."""
    if f.target != g.source:
        raise ValidationError("homs do not compose")
    return ActHom(f.source, g.target,
                  tuple(g.mapping[b] for b in f.mapping), f.category)


@dataclass(frozen=True)
class ActCongruence:
    parent: Act
    # blocks[a] = block id of element a; ids are 0..k-1 in order of first use
    blocks: tuple[int, ...]

    def n_blocks(self) -> int:
        return max(self.blocks) + 1 if self.blocks else 0


def make_congruence(act: Act, blocks: Sequence[int]) -> ActCongruence:
    blocks = _normalize_blocks(blocks)
    if len(blocks) != act.size:
        raise ValidationError("partition is not total")
    for s in act.monoid.elements():
        for a in act.elements():
            for b in act.elements():
                if blocks[a] == blocks[b]:
                    if blocks[act.action[s][a]] != blocks[act.action[s][b]]:
                        raise ValidationError(
                            f"partition not left compatible at "
                            f"s={act.monoid.label(s)} "
                            f"({act.labels[a]},{act.labels[b]})")
    return ActCongruence(act, blocks)


def _normalize_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for b in blocks:
        if b not in remap:
            remap[b] = len(remap)
        out.append(remap[b])
    return tuple(out)


# ---------------------------------------------------------------------------
# operations


def zero_set(act: Act) -> Subact:
    """0A = {0.a | a in A}; every s acts as the identity on it."""
    members = frozenset(act.action[act.monoid.zero][a] for a in act.elements())
    return Subact(act, members)


def subact_generated(act: Act, generators: Iterable[int]) -> Subact:
    """Smallest subact containing the generators.  One application of S
    suffices: S contains 1 and is closed under multiplication."""
    gens = set(generators)
    if not gens:
        if act.category is Category.ACT0:
            raise EmptyGeneratorInAct0("no generators given")
        return Subact(act, frozenset())
    members = frozenset(row[x] for x in gens for row in act.action)
    return Subact(act, members)


def generated_closure(act: Act, generators: Iterable[int]) -> frozenset[int]:
    """Like `subact_generated` but with the category convention for the empty
    set: the least subact is {theta} in S-Act_0 and the empty act in S-Act^O."""
    gens = set(generators)
    if not gens:
        if act.category is Category.ACT0:
            return frozenset({act.zero})
        return frozenset()
    return frozenset(row[x] for x in gens for row in act.action)


@lru_cache(maxsize=4096)
def all_subacts(act: Act) -> tuple[Subact, ...]:
    """Every action-closed subset, smallest first; in ACTO this includes the
    empty subact, in ACT0 every subact contains theta."""
    n = act.size
    found = []
    zrow = act.action[act.monoid.zero]
    for mask in range(1 << n):
        members = [a for a in range(n) if mask >> a & 1]
        if not members:
            if act.category is Category.ACTO:
                found.append(frozenset())
            continue
        ms = set(members)
        if all(row[a] in ms for a in members for row in act.action):
            found.append(frozenset(ms))
    found.sort(key=lambda ms: (len(ms), tuple(sorted(ms))))
    return tuple(Subact(act, ms) for ms in found)


def enumerate_homs(a: Act, b: Act, category: Category) -> list[ActHom]:
    """All equivariant (and, in ACT0, zero-preserving) maps a -> b in
    lexicographic order of their index tuples."""
    if a.monoid != b.monoid:
        raise MonoidMismatch("acts live over different monoids")
    if a.category is not category or b.category is not category:
        raise CategoryMismatch("acts not tagged with the requested category")
    if a.size == 0:
        return [ActHom(a, b, (), category)]
    if b.size == 0:
        return []
    seed = {}
    if category is Category.ACT0:
        seed[a.zero] = b.zero
    results: list[tuple[int, ...]] = []
    _hom_search(a, b, seed, results)
    results.sort()
    return [ActHom(a, b, m, category) for m in results]


def _hom_search(a: Act, b: Act, partial: dict[int, int],
                results: list[tuple[int, ...]]) -> None:
    partial = _hom_propagate(a, b, partial)
    if partial is None:
        return
    if len(partial) == a.size:
        results.append(tuple(partial[x] for x in range(a.size)))
        return
    pivot = min(x for x in a.elements() if x not in partial)
    for img in b.elements():
        nxt = dict(partial)
        nxt[pivot] = img
        _hom_search(a, b, nxt, results)


def _hom_propagate(a: Act, b: Act,
                   partial: dict[int, int]) -> Optional[dict[int, int]]:
    queue = list(partial)
    while queue:
        x = queue.pop()
        fx = partial[x]
        for s in a.monoid.elements():
            y = a.action[s][x]
            fy = b.action[s][fx]
            if y in partial:
                if partial[y] != fy:
                    return None
            else:
                partial[y] = fy
                queue.append(y)
    return partial


def _element_signature(act: Act, a: int) -> tuple:
    indeg = tuple(sum(1 for x in act.elements() if act.action[s][x] == a)
                  for s in act.monoid.elements())
    fixers = sum(1 for s in act.monoid.elements() if act.action[s][a] == a)
    return (len(act.orbit(a)), fixers, indeg)


def is_isomorphic(a: Act, b: Act) -> Optional[ActHom]:
    """A witness isomorphism, or None.  Backtracking over carrier bijections
    pruned by per-element invariants (orbit size, fixers, in-degrees)."""
    if a.monoid != b.monoid or a.category is not b.category:
        return None
    if a.size != b.size:
        return None
    if a.size == 0:
        return ActHom(a, b, (), a.category)
    siga = [_element_signature(a, x) for x in a.elements()]
    sigb = [_element_signature(b, x) for x in b.elements()]
    if sorted(siga) != sorted(sigb):
        return None
    candidates = {x: [y for y in b.elements() if sigb[y] == siga[x]]
                  for x in a.elements()}
    mapping = _iso_search(a, b, {}, set(), candidates)
    if mapping is None:
        return None
    return make_hom(a, b, tuple(mapping[x] for x in range(a.size)))


def _iso_search(a: Act, b: Act, partial: dict[int, int], used: set[int],
                candidates: dict[int, list[int]]) -> Optional[dict[int, int]]:
    if len(partial) == a.size:
        return partial
    pivot = min((x for x in a.elements() if x not in partial),
                key=lambda x: len(candidates[x]))
    for img in candidates[pivot]:
        if img in used:
            continue
        trial = dict(partial)
        trial[pivot] = img
        if not _iso_consistent(a, b, trial, pivot):
            continue
        res = _iso_search(a, b, trial, used | {img}, candidates)
        if res is not None:
            return res
    return None


def _iso_consistent(a: Act, b: Act, partial: dict[int, int],
                    new: int) -> bool:
    # injectivity plus equivariance on every decided pair
    for s in a.monoid.elements():
        for x in list(partial):
            y = a.action[s][x]
            if y in partial and partial[y] != b.action[s][partial[x]]:
                return False
    if len(set(partial.values())) != len(partial):
        return False
    return True


def quotient_act(act: Act, congruence: ActCongruence,
                 class_labels: Optional[Sequence[str]] = None
                 ) -> tuple[Act, ActHom]:
    """Factor act by a left congruence, plus the natural projection."""
    blocks = congruence.blocks
    k = congruence.n_blocks()
    # order classes by their minimal member
    reps = sorted(range(k), key=lambda c: min(
        a for a in act.elements() if blocks[a] == c))
    newidx = {c: i for i, c in enumerate(reps)}
    proj = tuple(newidx[blocks[a]] for a in act.elements())
    if class_labels is None:
        class_labels = []
        for c in reps:
            members = [act.labels[a] for a in act.elements() if blocks[a] == c]
            class_labels.append(members[0] if len(members) == 1
                                else "[" + "|".join(members) + "]")
    action = []
    rep_of = [min(a for a in act.elements() if proj[a] == i) for i in range(k)]
    for s in act.monoid.elements():
        action.append(tuple(proj[act.action[s][rep_of[i]]] for i in range(k)))
    zero = proj[act.zero] if act.category is Category.ACT0 else None
    q = make_act(act.monoid, class_labels, action, act.category, zero)
    return q, make_hom(act, q, proj)


def rees_quotient(act: Act, sub) -> tuple[Act, ActHom]:
    """A/B: collapse the nonempty subact B to a point; |A/B| = |A|-|B|+1."""
    members = sub.members if isinstance(sub, Subact) else frozenset(sub)
    if not members:
        raise NotASubact("the Rees congruence needs a nonempty subact")
    if not members <= set(act.elements()) or not is_closed(act, members):
        raise NotASubact(f"{sorted(members)} is not a subact")
    blocks = []
    nxt = 1
    for a in act.elements():
        if a in members:
            blocks.append(0)
        else:
            blocks.append(nxt)
            nxt += 1
    cong = make_congruence(act, blocks)
    remaining = {act.labels[a] for a in act.elements() if a not in members}
    theta = "θ"
    while theta in remaining:
        theta += "'"
    labels = []
    emitted = False
    for a in act.elements():
        if a in members:
            if not emitted:
                labels.append(theta)
                emitted = True
        else:
            labels.append(act.labels[a])
    # class order is by minimal member, which matches the loop above
    return quotient_act(act, cong, labels)


def empty_act(monoid: Monoid) -> Act:
    return Act(monoid, (), tuple(() for _ in monoid.elements()),
               Category.ACTO, None)


def theta_act(monoid: Monoid, category: Category = Category.ACT0,
              label: str = "θ") -> Act:
    """The one-element act; the initial object of S-Act_0."""
    action = tuple((0,) for _ in monoid.elements())
    zero = 0 if category is Category.ACT0 else None
    return make_act(monoid, (label,), action, category, zero)


def regular_act(monoid: Monoid, category: Category = Category.ACTO) -> Act:
    """S acting on itself from the left."""
    zero = monoid.zero if category is Category.ACT0 else None
    return make_act(monoid, monoid.labels, monoid.mul, category, zero)
