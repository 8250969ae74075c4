"""Products, the two coproducts, zero adjunction, substantial summands, and
the gluing functor from S-Act^O onto S-Act_0."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    Act,
    ActHom,
    Category,
    Monoid,
    Subact,
    act0_view,
    empty_act,
    is_isomorphic,
    make_act,
    make_hom,
    make_subact,
    rees_quotient,
    subact_as_act,
    theta_act,
    validate_monoid,
    zero_set,
)
from .errors import (
    CategoryMismatch,
    EmptyAct,
    EmptyFamily,
    LabelClash,
    MonoidMismatch,
    BoundTooLarge,
)
from .structure import decompose

MAX_PRODUCT_FACTORS = 4


@dataclass(frozen=True)
class Coproduct:
    act: Act
    category: Category
    injections: tuple[ActHom, ...]


def _common_monoid(parts: Sequence[Act], monoid: Optional[Monoid]) -> Monoid:
    if parts:
        m = parts[0].monoid
        if any(p.monoid != m for p in parts):
            raise MonoidMismatch("coproduct parts over different monoids")
        if monoid is not None and monoid != m:
            raise MonoidMismatch("explicit monoid disagrees with the parts")
        return m
    if monoid is None:
        raise EmptyFamily("an empty family needs an explicit monoid")
    return monoid


def coproduct(category: Category, parts: Sequence[Act],
              monoid: Optional[Monoid] = None) -> Coproduct:
    """Disjoint union in ACTO, wedge (zeros identified) in ACT0.

    Injected carrier labels are pairs rendered as "<part index>.<label>"; the
    wedge zero is labelled theta.  The empty family yields the initial object
    of the category."""
    m = _common_monoid(parts, monoid)
    for p in parts:
        if p.category is not category:
            raise CategoryMismatch("part not tagged with the coproduct category")
    if category is Category.ACTO:
        labels = []
        offsets = []
        for i, p in enumerate(parts):
            offsets.append(len(labels))
            labels.extend(f"{i}.{lbl}" for lbl in p.labels)
        action = []
        for s in m.elements():
            row = []
            for off, p in zip(offsets, parts):
                row.extend(off + v for v in p.action[s])
            action.append(tuple(row))
        if not parts:
            act = empty_act(m)
        else:
            act = make_act(m, labels, action, category, None)
        injections = tuple(
            make_hom(p, act, tuple(range(off, off + p.size)))
            for off, p in zip(offsets, parts))
        return Coproduct(act, category, injections)
    # ACT0 wedge
    labels = ["θ"]
    part_maps = []
    for i, p in enumerate(parts):
        mapping = [0] * p.size
        for a in p.elements():
            if a == p.zero:
                continue
            mapping[a] = len(labels)
            labels.append(f"{i}.{p.labels[a]}")
        part_maps.append(tuple(mapping))
    size = len(labels)
    action = []
    for s in m.elements():
        row = [0] * size
        for p, pm in zip(parts, part_maps):
            for a in p.elements():
                row[pm[a]] = pm[p.action[s][a]]
        action.append(tuple(row))
    act = make_act(m, labels, action, category, 0)
    injections = tuple(make_hom(p, act, pm) for p, pm in zip(parts, part_maps))
    return Coproduct(act, category, injections)


def product(category: Category, parts: Sequence[Act]) -> Act:
    """Cartesian carrier with componentwise action."""
    if not parts:
        raise EmptyFamily("products need a nonempty family")
    if len(parts) > MAX_PRODUCT_FACTORS:
        raise BoundTooLarge(f"at most {MAX_PRODUCT_FACTORS} product factors")
    m = _common_monoid(parts, None)
    for p in parts:
        if p.category is not category:
            raise CategoryMismatch("part not tagged with the product category")
    tuples = list(itertools.product(*(range(p.size) for p in parts)))
    pos = {t: i for i, t in enumerate(tuples)}
    labels = ["(" + ",".join(p.labels[v] for p, v in zip(parts, t)) + ")"
              for t in tuples]
    action = []
    for s in m.elements():
        action.append(tuple(
            pos[tuple(p.action[s][v] for p, v in zip(parts, t))]
            for t in tuples))
    zero = None
    if category is Category.ACT0:
        zero = pos[tuple(p.zero for p in parts)]
    return make_act(m, labels, action, category, zero)


def functor_F_obj(act: Act) -> tuple[Act, ActHom]:
    """F(A) = A/0A with the zero class as theta, plus the projection.

    The projection is returned as an ACTO hom onto the ACTO view of F(A);
    both share carrier and indices with the returned ACT0 act."""
    if act.category is not Category.ACTO:
        raise CategoryMismatch("the functor is applied to ACTO acts")
    if act.size == 0:
        raise EmptyAct("F is defined on nonempty acts")
    q, pi = rees_quotient(act, zero_set(act))
    return act0_view(q), pi


def functor_F_mor(alpha: ActHom) -> ActHom:
    """F(alpha)([a]) = [alpha(a)]: the unique map commuting with the two
    projections."""
    if alpha.category is not Category.ACTO:
        raise CategoryMismatch("the functor is applied to ACTO homs")
    fa, pa = functor_F_obj(alpha.source)
    fb, pb = functor_F_obj(alpha.target)
    mapping = [0] * fa.size
    for a in alpha.source.elements():
        mapping[pa(a)] = pb(alpha(a))
    return make_hom(fa, fb, mapping)


def reflection_factorization(f: ActHom) -> ActHom:
    """Factor f: A -> X (X with a unique zero) through the projection onto
    F(A); the witness that F is a reflector."""
    if f.category is not Category.ACTO:
        raise CategoryMismatch("expected an ACTO hom")
    fa, pa = functor_F_obj(f.source)
    target = act0_view(f.target)
    mapping = [0] * fa.size
    for a in f.source.elements():
        mapping[pa(a)] = f(a)
    return make_hom(fa, target, mapping)


def adjoin_zero(monoid_or_labels, mul=None, one=None,
                zero_label: Optional[str] = None) -> Monoid:
    """Extend a monoid table (zero not required) by a fresh absorbing zero.

    Accepts either a Monoid or (labels, mul, one).  The new zero is labelled
    `zero_label` when given (LabelClash if taken), otherwise "0" uniquified
    with trailing stars."""
    if isinstance(monoid_or_labels, Monoid):
        m = monoid_or_labels
        labels, table, one = list(m.labels), [list(r) for r in m.mul], m.one
    else:
        labels = list(monoid_or_labels)
        table = [list(r) for r in mul]
        n = len(labels)
        for x in range(n):
            if table[one][x] != x or table[x][one] != x:
                raise ValueError("input has no identity at the given index")
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                for z in range(n):
                    if table[xy][z] != table[x][table[y][z]]:
                        raise ValueError("input table is not associative")
    if zero_label is not None:
        if zero_label in labels:
            raise LabelClash(zero_label)
        fresh = zero_label
    else:
        fresh = "0"
        while fresh in labels:
            fresh += "*"
    n = len(labels)
    new_table = [row + [n] for row in table]
    new_table.append([n] * (n + 1))
    return validate_monoid(labels + [fresh], new_table, one, n)


@dataclass(frozen=True)
class SubstantialDecomposition:
    parent: Act
    substantial: Subact
    discrete_zeros: frozenset[int]
    # isomorphism from substantial ⊔ (one theta per discrete zero) onto parent
    reconstruction: ActHom


def substantial_summand(act: Act) -> SubstantialDecomposition:
    """Split off the discrete theta summands: the substantial summand is the
    union of the indecomposable components not contained in 0A."""
    if act.category is not Category.ACTO:
        raise CategoryMismatch("substantial summands live in ACTO")
    if act.size == 0:
        raise EmptyAct("the empty act has no substantial summand")
    zeros = zero_set(act).members
    comps = decompose(act, Category.ACTO).components
    proper = [c for c in comps if not c.members <= zeros]
    degenerate = [c for c in comps if c.members <= zeros]
    if proper:
        substantial = make_subact(
            act, frozenset().union(*(c.members for c in proper)))
        discrete = frozenset().union(*(c.members for c in degenerate)) \
            if degenerate else frozenset()
    else:
        # everything is a discrete zero; keep one designated theta
        substantial = degenerate[0]
        discrete = frozenset().union(
            *(c.members for c in degenerate[1:])) if degenerate[1:] \
            else frozenset()
    sub_act, _ = subact_as_act(substantial)
    model = coproduct(Category.ACTO,
                      [sub_act] + [theta_act(act.monoid, Category.ACTO)
                                   for _ in range(len(discrete))],
                      monoid=act.monoid)
    iso = is_isomorphic(model.act, act)
    assert iso is not None, "reconstruction isomorphism must exist"
    return SubstantialDecomposition(act, substantial, discrete, iso)
